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

#include "logicbench/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "logicbench/error.hpp"

namespace logicbench {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kEntailed:
      return "entailed";
    case Verdict::kContradicted:
      return "contradicted";
    case Verdict::kIndependent:
      return "independent";
  }
  return "?";
}

namespace {

// Truth tables are evaluated 64 assignments at a time: assignment number
// (word * 64 + bit) gives atom k the value of bit k of that number.
constexpr std::uint64_t kLanePattern[6] = {
    0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL,
};

class TruthTable {
 public:
  TruthTable(std::span<const Formula> formulas, const OracleOptions& options) {
    for (const auto& f : formulas) {
      for (AtomId a : f.atoms()) {
        if (std::find(atoms_.begin(), atoms_.end(), a) == atoms_.end()) atoms_.push_back(a);
      }
    }
    if (atoms_.size() > options.max_atoms) throw OracleCapError(atoms_.size(), options.max_atoms);
    std::sort(atoms_.begin(), atoms_.end());
    std::size_t n = atoms_.size();
    words_ = n <= 6 ? 1 : (std::size_t{1} << (n - 6));
    last_mask_ = n >= 6 ? ~0ULL : ((1ULL << (1u << n)) - 1);
    lanes_.resize(n);
  }

  std::size_t words() const { return words_; }
  std::uint64_t valid_mask() const { return last_mask_; }

  void load_word(std::size_t word) {
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      lanes_[k] = k < 6 ? kLanePattern[k] : (((word >> (k - 6)) & 1) ? ~0ULL : 0ULL);
    }
  }

  std::uint64_t eval(const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), f.atom_id());
        return lanes_[static_cast<std::size_t>(it - atoms_.begin())];
      }
      case Formula::Kind::kNegation:
        return ~eval(f.inner());
      case Formula::Kind::kConditional:
        return ~eval(f.lhs()) | eval(f.rhs());
      case Formula::Kind::kDisjunction:
        return eval(f.lhs()) | eval(f.rhs());
    }
    return 0;
  }

 private:
  std::vector<AtomId> atoms_;
  std::vector<std::uint64_t> lanes_;
  std::size_t words_ = 1;
  std::uint64_t last_mask_ = ~0ULL;
};

struct Witnesses {
  bool premises_and_statement = false;
  bool premises_and_negation = false;
};

Witnesses scan(std::span<const Formula> premises, const Formula& statement,
               const OracleOptions& options) {
  std::vector<Formula> all(premises.begin(), premises.end());
  all.push_back(statement);
  TruthTable table(all, options);
  Witnesses w;
  for (std::size_t word = 0; word < table.words(); ++word) {
    table.load_word(word);
    std::uint64_t models = table.valid_mask();
    for (const auto& p : premises) {
      models &= table.eval(p);
      if (!models) break;
    }
    if (!models) continue;
    std::uint64_t s = table.eval(statement);
    if (models & s) w.premises_and_statement = true;
    if (models & ~s) w.premises_and_negation = true;
    if (w.premises_and_statement && w.premises_and_negation) break;
  }
  return w;
}

}  // namespace

bool entails(std::span<const Formula> premises, const Formula& conclusion,
             const OracleOptions& options) {
  return !scan(premises, conclusion, options).premises_and_negation;
}

Verdict consistent_with(std::span<const Formula> premises, const Formula& statement,
                        const OracleOptions& options) {
  Witnesses w = scan(premises, statement, options);
  if (!w.premises_and_negation) return Verdict::kEntailed;
  if (!w.premises_and_statement) return Verdict::kContradicted;
  return Verdict::kIndependent;
}

bool satisfiable(std::span<const Formula> formulas, const OracleOptions& options) {
  if (formulas.empty()) return true;
  auto head = formulas.first(formulas.size() - 1);
  Witnesses w = scan(head, formulas.back(), options);
  return w.premises_and_statement;
}

}  // namespace logicbench
