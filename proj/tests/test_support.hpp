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

// Shared fixtures for the unit and acceptance tests. The reference oracle here
// is written independently of the library's bit-parallel truth table: it
// enumerates assignments one at a time and evaluates formulas recursively.

#ifndef LOGICBENCH_TESTS_TEST_SUPPORT_HPP_
#define LOGICBENCH_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "logicbench/argument_forms.hpp"
#include "logicbench/formula.hpp"
#include "logicbench/structure.hpp"
#include "temp_dir.hpp"

namespace logicbench::testing {

inline bool ref_eval(const Formula& f, const std::vector<std::uint32_t>& ids, std::uint64_t bits) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      auto it = std::find(ids.begin(), ids.end(), f.atom_id().value);
      return (bits >> (it - ids.begin())) & 1u;
    }
    case Formula::Kind::kNegation:
      return !ref_eval(f.inner(), ids, bits);
    case Formula::Kind::kConditional:
      return !ref_eval(f.lhs(), ids, bits) || ref_eval(f.rhs(), ids, bits);
    case Formula::Kind::kDisjunction:
      return ref_eval(f.lhs(), ids, bits) || ref_eval(f.rhs(), ids, bits);
  }
  return false;
}

inline void collect_ids(const Formula& f, std::set<std::uint32_t>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out.insert(f.atom_id().value);
      return;
    case Formula::Kind::kNegation:
      collect_ids(f.inner(), out);
      return;
    default:
      collect_ids(f.lhs(), out);
      collect_ids(f.rhs(), out);
  }
}

// Counts models of the premises, and of those how many make `goal` true.
struct ModelCount {
  std::uint64_t premise_models = 0;
  std::uint64_t goal_true = 0;
};

inline ModelCount ref_count(std::span<const Formula> premises, const Formula& goal) {
  std::set<std::uint32_t> ids_set;
  for (const auto& p : premises) collect_ids(p, ids_set);
  collect_ids(goal, ids_set);
  std::vector<std::uint32_t> ids(ids_set.begin(), ids_set.end());
  ModelCount c;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ids.size()); ++bits) {
    bool all = std::all_of(premises.begin(), premises.end(),
                           [&](const Formula& p) { return ref_eval(p, ids, bits); });
    if (!all) continue;
    ++c.premise_models;
    if (ref_eval(goal, ids, bits)) ++c.goal_true;
  }
  return c;
}

inline bool ref_entails(std::span<const Formula> premises, const Formula& goal) {
  ModelCount c = ref_count(premises, goal);
  return c.goal_true == c.premise_models;
}

// 0 entailed, 1 contradicted, 2 independent; inconsistent premises entail.
inline int ref_verdict(std::span<const Formula> premises, const Formula& goal) {
  ModelCount c = ref_count(premises, goal);
  if (c.goal_true == c.premise_models) return 0;
  if (c.goal_true == 0) return 1;
  return 2;
}

inline Formula random_formula(std::mt19937_64& rng, unsigned atoms, unsigned depth) {
  std::uniform_int_distribution<unsigned> pick_atom(0, atoms - 1);
  if (depth == 0) return Formula::atom(pick_atom(rng));
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return Formula::atom(pick_atom(rng));
    case 1:
      return Formula::negation(random_formula(rng, atoms, depth - 1));
    case 2:
      return Formula::conditional(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
    default:
      return Formula::disjunction(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
  }
}

inline Formula f(std::string_view text) { return parse_formula(text); }

// Chooser driven by a fixed script: a root shape, a list of forms (one per
// support call, by enum value) and a premise index per level.
class ScriptedChooser : public StructureChooser {
 public:
  ScriptedChooser(std::size_t root, std::vector<ArgumentForm> forms, std::vector<PremiseRef> expand,
                  bool branch_all = false)
      : root_(root), forms_(std::move(forms)), expand_(std::move(expand)), branch_all_(branch_all) {}

  std::size_t root_shape(std::size_t) override { return root_; }
  std::size_t form(std::span<const ArgumentForm> candidates) override {
    ArgumentForm want = forms_.at(form_calls_++);
    auto it = std::find(candidates.begin(), candidates.end(), want);
    if (it == candidates.end()) throw std::runtime_error("scripted form not offered");
    return static_cast<std::size_t>(it - candidates.begin());
  }
  std::size_t premise(std::span<const PremiseRef> candidates) override {
    PremiseRef want = expand_.at(premise_calls_++);
    auto it = std::find(candidates.begin(), candidates.end(), want);
    if (it == candidates.end()) throw std::runtime_error("scripted premise not offered");
    return static_cast<std::size_t>(it - candidates.begin());
  }
  bool expand_side(PremiseRef) override { return branch_all_; }

 private:
  std::size_t root_;
  std::vector<ArgumentForm> forms_;
  std::vector<PremiseRef> expand_;
  bool branch_all_;
  std::size_t form_calls_ = 0;
  std::size_t premise_calls_ = 0;
};

}  // namespace logicbench::testing

#endif  // LOGICBENCH_TESTS_TEST_SUPPORT_HPP_
