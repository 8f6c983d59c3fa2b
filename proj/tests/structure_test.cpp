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

#include <set>

#include <gtest/gtest.h>

#include "logicbench/error.hpp"
#include "logicbench/rng.hpp"
#include "logicbench/structure.hpp"
#include "test_support.hpp"

namespace logicbench {
namespace {

using testing::f;

Formula swap_a_c(const Formula& g) {
  return substitute(g, {{AtomId{0}, f("c")}, {AtomId{2}, f("a")}});
}

ArgumentStructure figure_two() {
  testing::ScriptedChooser chooser(0, {ArgumentForm::kDisjunctiveSyllogism, ArgumentForm::kModusPonens},
                                   {PremiseRef{0, 1}});
  AtomAllocator atoms;
  return generate_structure(2, chooser, atoms);
}

TEST(Structure, FigureTwoConstruction) {
  ArgumentStructure s = figure_two();
  ASSERT_EQ(s.steps.size(), 2u);
  // The generator names atoms in allocation order; the worked example uses
  // c for the conclusion and a for the last fresh atom.
  EXPECT_EQ(swap_a_c(s.final_conclusion), f("c"));
  EXPECT_EQ(s.steps[0].form, ArgumentForm::kDisjunctiveSyllogism);
  EXPECT_EQ(swap_a_c(s.steps[0].premises[0]), f("b | c"));
  EXPECT_EQ(swap_a_c(s.steps[0].premises[1]), f("~b"));
  EXPECT_EQ(s.steps[1].form, ArgumentForm::kModusPonens);
  EXPECT_EQ(swap_a_c(s.steps[1].premises[0]), f("a -> ~b"));
  EXPECT_EQ(swap_a_c(s.steps[1].premises[1]), f("a"));
  EXPECT_EQ(swap_a_c(s.steps[1].conclusion), f("~b"));
  EXPECT_EQ(measure_depth(s), 2u);
  EXPECT_TRUE(structure_is_well_formed(s));

  std::vector<Formula> leaves;
  for (const auto& l : s.leaf_premises()) leaves.push_back(swap_a_c(l));
  EXPECT_EQ(leaves, (std::vector<Formula>{f("b | c"), f("a -> ~b"), f("a")}));
}

TEST(Structure, DepthOneIsASingleStep) {
  Stream stream(3);
  ArgumentStructure s = generate_structure(1, stream);
  ASSERT_EQ(s.steps.size(), 1u);
  EXPECT_EQ(s.leaf_premises(), s.steps[0].premises);
  EXPECT_EQ(measure_depth(s), 1u);
}

TEST(Structure, BranchingKeepsDepth) {
  testing::ScriptedChooser chooser(
      0, {ArgumentForm::kDisjunctiveSyllogism, ArgumentForm::kModusPonens, ArgumentForm::kModusTollens},
      {PremiseRef{0, 0}}, /*branch_all=*/true);
  AtomAllocator atoms;
  StructureOptions options;
  options.branching = true;
  ArgumentStructure s = generate_structure(2, chooser, atoms, options);
  ASSERT_EQ(s.steps.size(), 3u);
  EXPECT_EQ(measure_depth(s), 2u);
  EXPECT_TRUE(structure_is_well_formed(s));
  EXPECT_TRUE(testing::ref_entails(s.leaf_premises(), s.final_conclusion));
}

TEST(Structure, RejectsDepthOutsideRange) {
  Stream stream(1);
  EXPECT_THROW(generate_structure(0, stream), Error);
  EXPECT_THROW(generate_structure(11, stream), Error);
  StructureOptions wide;
  wide.max_depth = 12;
  EXPECT_NO_THROW(generate_structure(12, stream, wide));
}

TEST(Structure, SameStreamSameStructure) {
  for (unsigned d = 1; d <= 7; ++d) {
    Stream a = Stream::derive(5, d), b = Stream::derive(5, d);
    ArgumentStructure x = generate_structure(d, a), y = generate_structure(d, b);
    ASSERT_EQ(x.final_conclusion, y.final_conclusion);
    ASSERT_EQ(x.leaf_premises(), y.leaf_premises());
    ASSERT_EQ(x.parent, y.parent);
  }
}

TEST(Structure, ParagraphIsAPermutationOfLeaves) {
  Stream gen(8);
  ArgumentStructure s = generate_structure(1, gen);
  Stream a(1), b(1);
  auto p1 = paragraph_premises(s, a), p2 = paragraph_premises(s, b);
  EXPECT_EQ(p1, p2);
  auto sorted = p1, leaves = s.leaf_premises();
  std::sort(sorted.begin(), sorted.end());
  std::sort(leaves.begin(), leaves.end());
  EXPECT_EQ(sorted, leaves);
  Stream c(1);
  EXPECT_EQ(paragraph_premises(s, c, false), s.leaf_premises());
}

TEST(Structure, MalformedStructuresAreDetected) {
  ArgumentStructure s = figure_two();
  ArgumentStructure wrong_parent = s;
  wrong_parent.parent[1] = PremiseRef{0, 0};
  EXPECT_FALSE(structure_is_well_formed(wrong_parent));
  ArgumentStructure bad_step = s;
  bad_step.steps[0].premises[1] = f("b");
  EXPECT_FALSE(structure_is_well_formed(bad_step));
}

// Property: exact depth, global soundness, tree shape and single allocation
// of every atom, across depths and seeds, with and without branching and
// compound roots.
TEST(StructureProperty, DepthSoundnessAndAtoms) {
  for (bool branching : {false, true}) {
    for (bool compound : {false, true}) {
      StructureOptions options;
      options.branching = branching;
      options.compound_roots = compound;
      for (unsigned d = 1; d <= 10; ++d) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
          Stream stream = Stream::derive(seed, d);
          ArgumentStructure s = generate_structure(d, stream, options);
          ASSERT_EQ(measure_depth(s), d);
          ASSERT_TRUE(structure_is_well_formed(s, {.max_atoms = 64}));
          auto leaves = s.leaf_premises();
          if (s.atoms().size() <= 16) ASSERT_TRUE(testing::ref_entails(leaves, s.final_conclusion));
          // Each fresh atom is allocated once: the ids are exactly 0..n-1.
          std::set<std::uint32_t> ids;
          for (AtomId a : s.atoms()) ids.insert(a.value);
          ASSERT_EQ(*ids.rbegin() + 1, ids.size());
          for (const auto& p : leaves) ASSERT_LE(p.height(), options.max_premise_height);
        }
      }
    }
  }
}

}  // namespace
}  // namespace logicbench
