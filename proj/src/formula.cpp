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

#include "logicbench/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "logicbench/error.hpp"

namespace logicbench {

struct Formula::Node {
  Kind kind;
  AtomId atom;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t height;
};

std::string atom_name(AtomId id) {
  if (id.value < 26) return std::string(1, static_cast<char>('a' + id.value));
  return "x" + std::to_string(id.value);
}

std::optional<AtomId> atom_from_name(std::string_view name) {
  if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z') {
    return AtomId{static_cast<std::uint32_t>(name[0] - 'a')};
  }
  // Numbered names are canonical only: no leading zero, no alias of a letter.
  if (name.size() >= 3 && name[0] == 'x' && name[1] != '0') {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), v);
    if (ec == std::errc() && ptr == name.data() + name.size() && v >= 26) return AtomId{v};
  }
  return std::nullopt;
}

Formula Formula::atom(AtomId id) {
  return Formula(std::make_shared<const Node>(Node{Kind::kAtom, id, std::nullopt, std::nullopt, 0}));
}

Formula Formula::negation(Formula inner) {
  std::size_t h = inner.height() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Kind::kNegation, {}, std::move(inner), std::nullopt, h}));
}

Formula Formula::conditional(Formula antecedent, Formula consequent) {
  std::size_t h = std::max(antecedent.height(), consequent.height()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Kind::kConditional, {}, std::move(antecedent), std::move(consequent), h}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  std::size_t h = std::max(left.height(), right.height()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Kind::kDisjunction, {}, std::move(left), std::move(right), h}));
}

namespace {

[[noreturn]] void wrong_kind(const char* accessor) {
  throw Error(ErrorCode::kInvalidArgument, std::string(accessor) + "() on a formula of another kind");
}

}  // namespace

Formula::Kind Formula::kind() const { return node_->kind; }

AtomId Formula::atom_id() const {
  if (node_->kind != Kind::kAtom) wrong_kind("atom_id");
  return node_->atom;
}

const Formula& Formula::inner() const {
  if (node_->kind != Kind::kNegation) wrong_kind("inner");
  return *node_->lhs;
}

const Formula& Formula::lhs() const {
  if (!is_binary()) wrong_kind("lhs");
  return *node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!is_binary()) wrong_kind("rhs");
  return *node_->rhs;
}

std::size_t Formula::height() const { return node_->height; }

namespace {

void collect_atoms(const Formula& f, std::vector<AtomId>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      if (std::find(out.begin(), out.end(), f.atom_id()) == out.end()) out.push_back(f.atom_id());
      return;
    case Formula::Kind::kNegation:
      collect_atoms(f.inner(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

}  // namespace

std::vector<AtomId> Formula::atoms() const {
  std::vector<AtomId> out;
  collect_atoms(*this, out);
  return out;
}

bool Formula::mentions(AtomId id) const {
  switch (kind()) {
    case Kind::kAtom:
      return atom_id() == id;
    case Kind::kNegation:
      return inner().mentions(id);
    default:
      return lhs().mentions(id) || rhs().mentions(id);
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::kAtom:
      return a.atom_id() <=> b.atom_id();
    case Formula::Kind::kNegation:
      return a.inner() <=> b.inner();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

bool evaluate(const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      auto it = assignment.find(f.atom_id());
      if (it == assignment.end()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "assignment does not cover atom " + atom_name(f.atom_id()));
      }
      return it->second;
    }
    case Formula::Kind::kNegation:
      return !evaluate(f.inner(), assignment);
    case Formula::Kind::kConditional:
      return !evaluate(f.lhs(), assignment) || evaluate(f.rhs(), assignment);
    case Formula::Kind::kDisjunction:
      return evaluate(f.lhs(), assignment) || evaluate(f.rhs(), assignment);
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_top() {
    Formula first = parse_unary();
    skip_space();
    if (at_end()) return first;
    Formula result = parse_binary_tail(std::move(first));
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return result;
  }

 private:
  Formula parse_binary_tail(Formula lhs) {
    skip_space();
    if (consume("->")) return Formula::conditional(std::move(lhs), parse_unary());
    if (consume("|")) return Formula::disjunction(std::move(lhs), parse_unary());
    fail("expected '->' or '|'");
  }

  Formula parse_unary() {
    skip_space();
    if (at_end()) fail("expected formula");
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula lhs = parse_unary();
      Formula result = parse_binary_tail(std::move(lhs));
      skip_space();
      if (!consume(")")) fail("expected ')'");
      return result;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto id = atom_from_name(text_.substr(start, pos_ - start));
      if (!id) fail_at(start, "invalid atom name");
      return Formula::atom(*id);
    }
    fail("expected formula");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) { throw SyntaxError(at, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render(const Formula& f, bool top, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out += atom_name(f.atom_id());
      return;
    case Formula::Kind::kNegation:
      out += '~';
      render(f.inner(), false, out);
      return;
    default:
      if (!top) out += '(';
      render(f.lhs(), false, out);
      out += f.kind() == Formula::Kind::kConditional ? " -> " : " | ";
      render(f.rhs(), false, out);
      if (!top) out += ')';
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_top(); }

std::string render_symbolic(const Formula& f) {
  std::string out;
  render(f, true, out);
  return out;
}

Formula negate_normalized(const Formula& f) {
  if (f.is_negation()) return f.inner();
  return Formula::negation(f);
}

Formula substitute(const Formula& f, const std::map<AtomId, Formula>& substitution) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      auto it = substitution.find(f.atom_id());
      return it == substitution.end() ? f : it->second;
    }
    case Formula::Kind::kNegation:
      return Formula::negation(substitute(f.inner(), substitution));
    case Formula::Kind::kConditional:
      return Formula::conditional(substitute(f.lhs(), substitution),
                                  substitute(f.rhs(), substitution));
    case Formula::Kind::kDisjunction:
      return Formula::disjunction(substitute(f.lhs(), substitution),
                                  substitute(f.rhs(), substitution));
  }
  return f;
}

}  // namespace logicbench
