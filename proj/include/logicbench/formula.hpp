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

#ifndef LOGICBENCH_FORMULA_HPP_
#define LOGICBENCH_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logicbench {

// Atoms are opaque integers. The readable alias is derived from the value:
// 0..25 print as "a".."z", larger values as "x<n>".
struct AtomId {
  std::uint32_t value = 0;
  auto operator<=>(const AtomId&) const = default;
};

std::string atom_name(AtomId id);
std::optional<AtomId> atom_from_name(std::string_view name);

// Immutable propositional formula over atoms, negation, conditional and
// disjunction. Copies share structure.
class Formula {
 public:
  enum class Kind : std::uint8_t { kAtom, kNegation, kConditional, kDisjunction };

  static Formula atom(AtomId id);
  static Formula atom(std::uint32_t id) { return atom(AtomId{id}); }
  static Formula negation(Formula inner);
  static Formula conditional(Formula antecedent, Formula consequent);
  static Formula disjunction(Formula left, Formula right);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_negation() const { return kind() == Kind::kNegation; }
  bool is_binary() const {
    return kind() == Kind::kConditional || kind() == Kind::kDisjunction;
  }

  // Valid only for kAtom.
  AtomId atom_id() const;
  // Valid only for kNegation.
  const Formula& inner() const;
  // Antecedent / left disjunct. Valid only for binary kinds.
  const Formula& lhs() const;
  // Consequent / right disjunct. Valid only for binary kinds.
  const Formula& rhs() const;

  // Number of connectives on the longest root-to-leaf path; atoms are 0.
  std::size_t height() const;

  // Distinct atoms in first-occurrence order.
  std::vector<AtomId> atoms() const;
  bool mentions(AtomId id) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<AtomId, bool>;

// Direct recursive evaluation. Throws Error(kInvalidArgument) if an atom of
// `f` is missing from `assignment`.
bool evaluate(const Formula& f, const Assignment& assignment);

// Symbolic notation: atom | "~" f | "(" f "->" f ")" | "(" f "|" f ")",
// outermost parentheses optional. Throws SyntaxError with a byte offset.
Formula parse_formula(std::string_view text);

// Canonical form: binary subformulas are parenthesized except at top level.
std::string render_symbolic(const Formula& f);

// Negation with double-negation elimination: ~~x becomes x.
Formula negate_normalized(const Formula& f);

// Replaces atoms according to `substitution`; atoms not in the map are kept.
Formula substitute(const Formula& f, const std::map<AtomId, Formula>& substitution);

}  // namespace logicbench

#endif  // LOGICBENCH_FORMULA_HPP_
