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

#include "logicbench/structure.hpp"

#include <algorithm>
#include <string>

#include "logicbench/error.hpp"

namespace logicbench {

std::optional<std::size_t> ArgumentStructure::support(PremiseRef ref) const {
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (parent[i] && *parent[i] == ref) return i;
  }
  return std::nullopt;
}

std::vector<PremiseRef> ArgumentStructure::leaf_refs() const {
  std::vector<PremiseRef> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (std::size_t k = 0; k < steps[i].premises.size(); ++k) {
      if (!support({i, k})) out.push_back({i, k});
    }
  }
  return out;
}

std::vector<Formula> ArgumentStructure::leaf_premises() const {
  std::vector<Formula> out;
  for (PremiseRef r : leaf_refs()) out.push_back(steps[r.step].premises[r.premise]);
  return out;
}

std::vector<AtomId> ArgumentStructure::atoms() const {
  std::vector<AtomId> out;
  auto add = [&out](const Formula& f) {
    for (AtomId a : f.atoms()) {
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
  };
  add(final_conclusion);
  for (const auto& step : steps) {
    for (const auto& p : step.premises) add(p);
  }
  return out;
}

std::size_t StreamChooser::root_shape(std::size_t count) {
  return static_cast<std::size_t>(stream_.uniform(count));
}
std::size_t StreamChooser::form(std::span<const ArgumentForm> candidates) {
  return static_cast<std::size_t>(stream_.uniform(candidates.size()));
}
std::size_t StreamChooser::premise(std::span<const PremiseRef> candidates) {
  return static_cast<std::size_t>(stream_.uniform(candidates.size()));
}
bool StreamChooser::expand_side(PremiseRef) { return stream_.coin(); }

namespace {

class Builder {
 public:
  Builder(StructureChooser& chooser, AtomAllocator& atoms, const StructureOptions& options)
      : chooser_(chooser), atoms_(atoms), options_(options) {}

  Formula make_root() {
    std::size_t count = options_.compound_roots ? 4 : 2;
    switch (chooser_.root_shape(count) % count) {
      case 0:
        return Formula::atom(atoms_.fresh());
      case 1:
        return Formula::negation(Formula::atom(atoms_.fresh()));
      case 2: {
        Formula a = Formula::atom(atoms_.fresh());
        return Formula::conditional(a, Formula::atom(atoms_.fresh()));
      }
      default: {
        Formula a = Formula::atom(atoms_.fresh());
        return Formula::disjunction(a, Formula::atom(atoms_.fresh()));
      }
    }
  }

  InferenceStep support(const Formula& target) {
    std::vector<ArgumentForm> candidates;
    for (ArgumentForm f : forms_concluding(target)) {
      AtomAllocator scratch = atoms_;
      InferenceStep trial = instantiate_for_conclusion(f, target, scratch);
      bool fits = std::all_of(trial.premises.begin(), trial.premises.end(), [&](const Formula& p) {
        return p.height() <= options_.max_premise_height;
      });
      if (fits) candidates.push_back(f);
    }
    if (candidates.empty()) {
      throw Error(ErrorCode::kInternal,
                  "no argument form can support '" + render_symbolic(target) + "'");
    }
    ArgumentForm chosen = candidates[chooser_.form(candidates) % candidates.size()];
    return instantiate_for_conclusion(chosen, target, atoms_);
  }

 private:
  StructureChooser& chooser_;
  AtomAllocator& atoms_;
  const StructureOptions& options_;
};

}  // namespace

ArgumentStructure generate_structure(unsigned depth, StructureChooser& chooser,
                                     AtomAllocator& atoms, const StructureOptions& options) {
  if (depth < 1 || depth > options.max_depth) {
    throw Error(ErrorCode::kInvalidArgument, "depth " + std::to_string(depth) +
                                                 " outside [1, " +
                                                 std::to_string(options.max_depth) + "]");
  }
  Builder builder(chooser, atoms, options);
  ArgumentStructure s;
  s.final_conclusion = builder.make_root();
  s.steps.push_back(builder.support(s.final_conclusion));
  s.parent.push_back(std::nullopt);

  std::vector<std::size_t> frontier{0};
  for (unsigned level = 2; level <= depth; ++level) {
    std::vector<PremiseRef> candidates;
    for (std::size_t step : frontier) {
      for (std::size_t k = 0; k < s.steps[step].premises.size(); ++k) candidates.push_back({step, k});
    }
    std::size_t main = chooser.premise(candidates) % candidates.size();
    std::vector<std::size_t> next;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      PremiseRef ref = candidates[c];
      if (c != main && !(options.branching && chooser.expand_side(ref))) continue;
      InferenceStep step = builder.support(s.steps[ref.step].premises[ref.premise]);
      s.steps.push_back(std::move(step));
      s.parent.push_back(ref);
      next.push_back(s.steps.size() - 1);
    }
    frontier = std::move(next);
  }
  return s;
}

ArgumentStructure generate_structure(unsigned depth, Stream& stream,
                                     const StructureOptions& options) {
  StreamChooser chooser(stream);
  AtomAllocator atoms;
  return generate_structure(depth, chooser, atoms, options);
}

unsigned measure_depth(const ArgumentStructure& s) {
  std::vector<unsigned> depth(s.steps.size(), 1);
  for (std::size_t i = s.steps.size(); i-- > 1;) {
    std::size_t p = s.parent[i]->step;
    depth[p] = std::max(depth[p], depth[i] + 1);
  }
  return s.steps.empty() ? 0 : depth[0];
}

std::vector<Formula> paragraph_premises(const ArgumentStructure& s, Stream& stream, bool shuffle) {
  std::vector<Formula> out = s.leaf_premises();
  if (shuffle) stream.shuffle(std::span<Formula>(out));
  return out;
}

bool structure_is_well_formed(const ArgumentStructure& s, const OracleOptions& options) {
  if (s.steps.empty() || s.parent.size() != s.steps.size()) return false;
  if (s.parent[0] || !(s.steps[0].conclusion == s.final_conclusion)) return false;
  std::vector<PremiseRef> seen;
  for (std::size_t i = 1; i < s.steps.size(); ++i) {
    if (!s.parent[i]) return false;
    PremiseRef ref = *s.parent[i];
    if (ref.step >= i || ref.premise >= s.steps[ref.step].premises.size()) return false;
    if (!(s.steps[ref.step].premises[ref.premise] == s.steps[i].conclusion)) return false;
    if (std::find(seen.begin(), seen.end(), ref) != seen.end()) return false;
    seen.push_back(ref);
  }
  return std::all_of(s.steps.begin(), s.steps.end(),
                     [&](const InferenceStep& step) { return validate_step(step, options); });
}

}  // namespace logicbench
