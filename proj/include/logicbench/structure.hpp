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

#ifndef LOGICBENCH_STRUCTURE_HPP_
#define LOGICBENCH_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "logicbench/argument_forms.hpp"
#include "logicbench/rng.hpp"

namespace logicbench {

// Position of a premise inside a structure: premise `premise` of step `step`.
struct PremiseRef {
  std::size_t step = 0;
  std::size_t premise = 0;
  bool operator==(const PremiseRef&) const = default;
};

// A tree of inference steps. steps[0] concludes final_conclusion; every
// other step i concludes the premise parent[i] of an earlier step.
struct ArgumentStructure {
  Formula final_conclusion = Formula::atom(0u);
  std::vector<InferenceStep> steps;
  std::vector<std::optional<PremiseRef>> parent;

  // Step supporting the given premise, if that premise is a subconclusion.
  std::optional<std::size_t> support(PremiseRef ref) const;

  // Premises not supported by any step, in step then premise order.
  std::vector<PremiseRef> leaf_refs() const;
  std::vector<Formula> leaf_premises() const;

  // Every atom mentioned by any step.
  std::vector<AtomId> atoms() const;
};

struct StructureOptions {
  unsigned max_depth = 10;
  // Expand every premise of the newest steps with probability 1/2 in addition
  // to the one premise that carries the depth.
  bool branching = false;
  // Allow conditional and disjunction roots in addition to atom/negation.
  bool compound_roots = false;
  // Premises never exceed this many nested connectives.
  std::size_t max_premise_height = 3;
};

// Decisions taken while growing a structure. The default implementation draws
// them from a Stream; tests script them.
class StructureChooser {
 public:
  virtual ~StructureChooser() = default;
  // Index into {atom, negation, conditional, disjunction} truncated to `count`.
  virtual std::size_t root_shape(std::size_t count) = 0;
  virtual std::size_t form(std::span<const ArgumentForm> candidates) = 0;
  virtual std::size_t premise(std::span<const PremiseRef> candidates) = 0;
  // Branching mode only: whether to also expand a side premise.
  virtual bool expand_side(PremiseRef ref) = 0;
};

class StreamChooser : public StructureChooser {
 public:
  explicit StreamChooser(Stream& stream) : stream_(stream) {}
  std::size_t root_shape(std::size_t count) override;
  std::size_t form(std::span<const ArgumentForm> candidates) override;
  std::size_t premise(std::span<const PremiseRef> candidates) override;
  bool expand_side(PremiseRef ref) override;

 private:
  Stream& stream_;
};

// Builds a structure whose measured depth equals `depth`, allocating every
// atom from `atoms`. Throws Error(kInvalidArgument) for depth outside
// [1, options.max_depth].
ArgumentStructure generate_structure(unsigned depth, StructureChooser& chooser,
                                     AtomAllocator& atoms, const StructureOptions& options = {});
ArgumentStructure generate_structure(unsigned depth, Stream& stream,
                                     const StructureOptions& options = {});

// Longest chain of steps from a leaf premise to the final conclusion.
unsigned measure_depth(const ArgumentStructure& s);

// Leaf premises in a seeded shuffled order (derivation order if !shuffle).
std::vector<Formula> paragraph_premises(const ArgumentStructure& s, Stream& stream,
                                        bool shuffle = true);

// Checks the tree invariants and validates every step.
bool structure_is_well_formed(const ArgumentStructure& s, const OracleOptions& options = {});

}  // namespace logicbench

#endif  // LOGICBENCH_STRUCTURE_HPP_
