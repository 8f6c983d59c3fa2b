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

#include "logicbench/argument_forms.hpp"

#include <map>
#include <string>

#include "logicbench/error.hpp"

namespace logicbench {

namespace {

struct FormInfo {
  ArgumentForm form;
  std::string_view id;
  std::string_view display;
  std::array<std::string_view, 3> premises;
  std::size_t premise_count;
  std::string_view conclusion;
  Shape shape;
};

constexpr std::array<FormInfo, 7> kForms = {{
    {ArgumentForm::kModusPonens, "modus_ponens", "Modus Ponens",
     {"p -> q", "p", ""}, 2, "q", Shape::kAny},
    {ArgumentForm::kModusTollens, "modus_tollens", "Modus Tollens",
     {"p -> q", "~q", ""}, 2, "~p", Shape::kNegation},
    {ArgumentForm::kHypotheticalSyllogism, "hypothetical_syllogism", "Hypothetical Syllogism",
     {"p -> q", "q -> r", ""}, 2, "p -> r", Shape::kConditional},
    {ArgumentForm::kDisjunctiveSyllogism, "disjunctive_syllogism", "Disjunctive Syllogism",
     {"p | q", "~p", ""}, 2, "q", Shape::kAny},
    {ArgumentForm::kReductioAdAbsurdum, "reductio_ad_absurdum", "Reductio ad absurdum",
     {"p -> q", "p -> ~q", ""}, 2, "~p", Shape::kNegation},
    {ArgumentForm::kConstructiveDilemma, "constructive_dilemma", "Constructive Dilemma",
     {"p | q", "p -> r", "q -> s"}, 3, "r | s", Shape::kDisjunction},
    {ArgumentForm::kDisjunctionElimination, "disjunction_elimination", "Disjunction Elimination",
     {"p | q", "p -> r", "q -> r"}, 3, "r", Shape::kAny},
}};

const FormInfo& info(ArgumentForm form) { return kForms[static_cast<std::size_t>(form)]; }

bool is_metavariable(AtomId id) { return id.value >= 15 && id.value <= 18; }

using Bindings = std::map<AtomId, Formula>;

// Matches `pattern` (over metavariables) against `target`, extending `bound`.
bool match(const Formula& pattern, const Formula& target, Bindings& bound) {
  if (pattern.is_atom() && is_metavariable(pattern.atom_id())) {
    auto [it, inserted] = bound.emplace(pattern.atom_id(), target);
    return inserted || it->second == target;
  }
  if (pattern.kind() != target.kind()) return false;
  switch (pattern.kind()) {
    case Formula::Kind::kAtom:
      return pattern.atom_id() == target.atom_id();
    case Formula::Kind::kNegation:
      return match(pattern.inner(), target.inner(), bound);
    default:
      return match(pattern.lhs(), target.lhs(), bound) && match(pattern.rhs(), target.rhs(), bound);
  }
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::kAny:
      return "any";
    case Shape::kNegation:
      return "negation";
    case Shape::kConditional:
      return "conditional";
    case Shape::kDisjunction:
      return "disjunction";
  }
  return "?";
}

}  // namespace

std::string_view form_id(ArgumentForm form) { return info(form).id; }
std::string_view form_display_name(ArgumentForm form) { return info(form).display; }

std::optional<ArgumentForm> form_from_id(std::string_view id) {
  for (const auto& f : kForms) {
    if (f.id == id) return f.form;
  }
  return std::nullopt;
}

const FormSchema& schema(ArgumentForm form) {
  static const std::vector<FormSchema> schemas = [] {
    std::vector<FormSchema> out;
    for (const auto& f : kForms) {
      std::vector<Formula> premises;
      for (std::size_t k = 0; k < f.premise_count; ++k) premises.push_back(parse_formula(f.premises[k]));
      out.push_back(FormSchema{std::move(premises), parse_formula(f.conclusion)});
    }
    return out;
  }();
  return schemas[static_cast<std::size_t>(form)];
}

Shape conclusion_shape(ArgumentForm form) { return info(form).shape; }

bool shape_accepts(Shape shape, const Formula& target) {
  switch (shape) {
    case Shape::kAny:
      return true;
    case Shape::kNegation:
      return target.kind() == Formula::Kind::kNegation;
    case Shape::kConditional:
      return target.kind() == Formula::Kind::kConditional;
    case Shape::kDisjunction:
      return target.kind() == Formula::Kind::kDisjunction;
  }
  return false;
}

std::vector<ArgumentForm> forms_concluding(const Formula& target) {
  std::vector<ArgumentForm> out;
  for (ArgumentForm f : kAllForms) {
    if (shape_accepts(conclusion_shape(f), target)) out.push_back(f);
  }
  return out;
}

InferenceStep instantiate_for_conclusion(ArgumentForm form, const Formula& target,
                                         AtomAllocator& fresh) {
  const FormSchema& s = schema(form);
  Bindings bound;
  if (!shape_accepts(conclusion_shape(form), target) || !match(s.conclusion, target, bound)) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(form_id(form)) + " needs a " + shape_name(conclusion_shape(form)) +
                    " conclusion, got '" + render_symbolic(target) + "'");
  }
  // p, q, r, s in that order, so fresh atoms are allocated deterministically.
  for (std::uint32_t v = 15; v <= 18; ++v) {
    AtomId meta{v};
    bool used = false;
    for (const auto& p : s.premises) used = used || p.mentions(meta);
    if (used && !bound.count(meta)) bound.emplace(meta, Formula::atom(fresh.fresh()));
  }
  InferenceStep step{form, {}, target};
  for (const auto& p : s.premises) step.premises.push_back(substitute(p, bound));
  return step;
}

bool validate_step(const InferenceStep& step, const OracleOptions& options) {
  const FormSchema& s = schema(step.form);
  if (step.premises.size() != s.premises.size()) return false;
  Bindings bound;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    if (!match(s.premises[i], step.premises[i], bound)) return false;
  }
  if (!match(s.conclusion, step.conclusion, bound)) return false;
  return entails(step.premises, step.conclusion, options);
}

}  // namespace logicbench
