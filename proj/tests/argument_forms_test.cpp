// Copyright 2026 The logicbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "logicbench/argument_forms.hpp"
#include "logicbench/error.hpp"
#include "logicbench/oracle.hpp"
#include "test_support.hpp"

namespace logicbench {
namespace {

using testing::f;

TEST(Forms, ExactlySevenWithSnakeCaseIds) {
  std::set<std::string_view> ids;
  for (ArgumentForm form : kAllForms) {
    ids.insert(form_id(form));
    EXPECT_EQ(form_from_id(form_id(form)), form);
    EXPECT_FALSE(form_display_name(form).empty());
  }
  EXPECT_EQ(ids, (std::set<std::string_view>{"modus_ponens", "modus_tollens", "hypothetical_syllogism",
                                             "disjunctive_syllogism", "reductio_ad_absurdum",
                                             "constructive_dilemma", "disjunction_elimination"}));
  EXPECT_FALSE(form_from_id("affirming_the_consequent").has_value());
}

struct TableRow {
  ArgumentForm form;
  std::vector<const char*> premises;
  const char* conclusion;
};

// The reference table of schemas over metavariables p, q, r, s.
const std::vector<TableRow> kTable = {
    {ArgumentForm::kModusPonens, {"p -> q", "p"}, "q"},
    {ArgumentForm::kModusTollens, {"p -> q", "~q"}, "~p"},
    {ArgumentForm::kHypotheticalSyllogism, {"p -> q", "q -> r"}, "p -> r"},
    {ArgumentForm::kDisjunctiveSyllogism, {"p | q", "~p"}, "q"},
    {ArgumentForm::kReductioAdAbsurdum, {"p -> q", "p -> ~q"}, "~p"},
    {ArgumentForm::kConstructiveDilemma, {"p | q", "p -> r", "q -> s"}, "r | s"},
    {ArgumentForm::kDisjunctionElimination, {"p | q", "p -> r", "q -> r"}, "r"},
};

TEST(Forms, SchemasMatchTheTableAndAreValid) {
  for (const auto& row : kTable) {
    const FormSchema& s = schema(row.form);
    ASSERT_EQ(s.premises.size(), row.premises.size()) << form_id(row.form);
    for (std::size_t i = 0; i < row.premises.size(); ++i) EXPECT_EQ(s.premises[i], f(row.premises[i]));
    EXPECT_EQ(s.conclusion, f(row.conclusion));
    EXPECT_TRUE(testing::ref_entails(s.premises, s.conclusion)) << form_id(row.form);
  }
}

TEST(Forms, ConclusionShapes) {
  EXPECT_EQ(conclusion_shape(ArgumentForm::kHypotheticalSyllogism), Shape::kConditional);
  EXPECT_EQ(conclusion_shape(ArgumentForm::kConstructiveDilemma), Shape::kDisjunction);
  EXPECT_EQ(conclusion_shape(ArgumentForm::kModusPonens), Shape::kAny);
  EXPECT_EQ(conclusion_shape(ArgumentForm::kDisjunctiveSyllogism), Shape::kAny);
  EXPECT_EQ(conclusion_shape(ArgumentForm::kDisjunctionElimination), Shape::kAny);
  EXPECT_EQ(conclusion_shape(ArgumentForm::kModusTollens), Shape::kNegation);
  EXPECT_EQ(conclusion_shape(ArgumentForm::kReductioAdAbsurdum), Shape::kNegation);
  EXPECT_TRUE(shape_accepts(Shape::kNegation, f("~a")));
  EXPECT_FALSE(shape_accepts(Shape::kNegation, f("a")));
}

TEST(Instantiate, DisjunctiveSyllogismForAtom) {
  AtomAllocator atoms(1);
  InferenceStep step = instantiate_for_conclusion(ArgumentForm::kDisjunctiveSyllogism, f("c"), atoms);
  ASSERT_EQ(step.premises.size(), 2u);
  EXPECT_EQ(step.premises[0], f("b | c"));
  EXPECT_EQ(step.premises[1], f("~b"));
  EXPECT_EQ(step.conclusion, f("c"));
}

TEST(Instantiate, ModusTollensForNegation) {
  AtomAllocator atoms(1);
  InferenceStep step = instantiate_for_conclusion(ArgumentForm::kModusTollens, f("~a"), atoms);
  EXPECT_EQ(step.premises, (std::vector<Formula>{f("a -> b"), f("~b")}));
  EXPECT_EQ(step.conclusion, f("~a"));
}

TEST(Instantiate, HypotheticalSyllogismForConditional) {
  AtomAllocator atoms(20);
  InferenceStep step = instantiate_for_conclusion(ArgumentForm::kHypotheticalSyllogism, f("p -> r"), atoms);
  EXPECT_EQ(step.premises, (std::vector<Formula>{f("p -> u"), f("u -> r")}));
}

TEST(Instantiate, ShapeMismatchIsAnError) {
  AtomAllocator atoms(5);
  try {
    instantiate_for_conclusion(ArgumentForm::kModusTollens, f("a"), atoms);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShapeMismatch);
  }
  EXPECT_THROW(instantiate_for_conclusion(ArgumentForm::kConstructiveDilemma, f("a -> b"), atoms), Error);
  EXPECT_THROW(instantiate_for_conclusion(ArgumentForm::kHypotheticalSyllogism, f("~a"), atoms), Error);
}

TEST(Validate, AcceptsValidStepsAndRejectsFallacies) {
  EXPECT_TRUE(validate_step({ArgumentForm::kModusPonens, {f("p -> q"), f("p")}, f("q")}));
  EXPECT_TRUE(validate_step({ArgumentForm::kReductioAdAbsurdum, {f("p -> q"), f("p -> ~q")}, f("~p")}));
  // Affirming the consequent, denying the antecedent, affirming a disjunct.
  EXPECT_FALSE(validate_step({ArgumentForm::kModusPonens, {f("p -> q"), f("q")}, f("p")}));
  EXPECT_FALSE(validate_step({ArgumentForm::kModusTollens, {f("p -> q"), f("~p")}, f("~q")}));
  EXPECT_FALSE(validate_step({ArgumentForm::kDisjunctiveSyllogism, {f("p | q"), f("p")}, f("~q")}));
  // Valid entailment but the wrong form label.
  EXPECT_FALSE(validate_step({ArgumentForm::kModusTollens, {f("p -> q"), f("p")}, f("q")}));
}

// Property: any form instantiated for any acceptable target yields a step
// that the reference oracle confirms, whose fresh atoms avoid the target and
// everything issued earlier.
TEST(FormsProperty, SoundnessAndFreshness) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    Formula target = testing::random_formula(rng, 6, 2);
    for (ArgumentForm form : kAllForms) {
      if (!shape_accepts(conclusion_shape(form), target)) continue;
      AtomAllocator atoms(10);
      InferenceStep step = instantiate_for_conclusion(form, target, atoms);
      ASSERT_EQ(step.conclusion, target);
      ASSERT_TRUE(testing::ref_entails(step.premises, step.conclusion));
      ASSERT_TRUE(validate_step(step));
      std::set<std::uint32_t> premise_atoms;
      for (const auto& p : step.premises) testing::collect_ids(p, premise_atoms);
      for (std::uint32_t a : premise_atoms) {
        bool from_target = target.mentions(AtomId{a});
        bool fresh = a >= 10 && a < atoms.issued_until();
        ASSERT_TRUE(from_target || fresh) << atom_name(AtomId{a});
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 3000);
}

TEST(FormsProperty, EveryShapeHasAtLeastThreeForms) {
  for (const char* t : {"a", "~a", "a -> b", "a | b"}) {
    EXPECT_GE(forms_concluding(f(t)).size(), 3u) << t;
  }
}

}  // namespace
}  // namespace logicbench
