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

#ifndef LOGICBENCH_SURFACE_HPP_
#define LOGICBENCH_SURFACE_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logicbench/formula.hpp"
#include "logicbench/rng.hpp"

namespace logicbench {

enum class TemplateClass : std::size_t { kBasic = 0, kNegation, kConditional, kDisjunction };

inline constexpr std::array<std::size_t, 4> kTemplateCounts = {16, 15, 11, 8};

// Expression templates per logical form. Basic and negation templates carry
// one {x} slot; conditional and disjunction templates carry {x} and {y}.
class TemplateSet {
 public:
  // Parses the sectioned data-file format. Throws Error(kSchema) on a wrong
  // count, unknown section or malformed slot.
  static TemplateSet parse(std::string_view text);
  static TemplateSet load(const std::string& path);
  // The versioned inventory compiled into the library.
  static const TemplateSet& builtin();

  const std::vector<std::string>& of(TemplateClass c) const {
    return classes_[static_cast<std::size_t>(c)];
  }
  // SHA-256 of the source text, hex.
  const std::string& checksum() const { return checksum_; }

 private:
  std::array<std::vector<std::string>, 4> classes_;
  std::string checksum_;
};

enum class BankFormat { kAuto, kTsv, kPlain };

// Simple declarative sentences used to instantiate atoms.
class SentenceBank {
 public:
  // Applies the simplicity filter and removes duplicates. Throws
  // Error(kSchema) if nothing survives.
  static SentenceBank from_lines(std::span<const std::string> lines, std::string checksum);
  // TSV needs a header with a "GENERIC SENTENCE" (or "sentence") column.
  static SentenceBank load(const std::string& path, BankFormat format = BankFormat::kAuto);
  static const SentenceBank& builtin();

  // 3..20 words, printable ASCII, none of if/then/or/either/unless/not.
  static bool passes_filter(std::string_view sentence);

  const std::vector<std::string>& sentences() const { return sentences_; }
  std::size_t size() const { return sentences_.size(); }
  std::size_t accepted() const { return sentences_.size(); }
  std::size_t rejected() const { return rejected_; }
  const std::string& checksum() const { return checksum_; }

  // True when the sentence opens with a word the bank also capitalizes
  // mid-sentence (a proper noun such as "Japan"), so embedding it as a clause
  // must keep the capital.
  bool starts_with_proper_noun(std::string_view sentence) const;

 private:
  std::vector<std::string> sentences_;
  std::set<std::string, std::less<>> proper_words_;
  std::size_t rejected_ = 0;
  std::string checksum_;
};

// Injective map from atoms to bank sentences.
class AtomBinding {
 public:
  // Throws Error(kInvalidArgument) if `sentence` is already bound elsewhere.
  void bind(AtomId atom, std::string sentence, bool keep_initial_case = false);
  bool contains(AtomId atom) const { return by_atom_.count(atom) != 0; }
  bool uses(const std::string& sentence) const { return used_.count(sentence) != 0; }
  // Throws Error(kInvalidArgument) for an unbound atom.
  const std::string& sentence(AtomId atom) const;
  // The bound sentence as an embedded clause (see as_clause).
  std::string clause(AtomId atom) const;
  const std::map<AtomId, std::string>& entries() const { return by_atom_; }

 private:
  std::map<AtomId, std::string> by_atom_;
  std::set<AtomId> keep_case_;
  std::set<std::string> used_;
};

// Binds each atom to a distinct sentence not already used by `binding`.
// Throws Error(kBankExhausted) when the bank runs out.
void bind_atoms(std::span<const AtomId> atoms, const SentenceBank& bank, Stream& stream,
                AtomBinding& binding);

struct RealizeOptions {
  // Chance that a standalone atomic statement is wrapped in a basic template.
  double basic_wrap_probability = 0.5;
};

// Renders a formula as one English sentence.
std::string realize_statement(const Formula& f, const AtomBinding& binding,
                              const TemplateSet& templates, Stream& stream,
                              const RealizeOptions& options = {});

// Substitutes clauses into a template and capitalizes the result.
std::string fill_template(std::string_view tmpl, std::string_view x, std::string_view y = {});

// Bank sentence as an embedded clause: first letter lowercased (unless the
// first word looks like an acronym or keep_initial_case is set), terminal
// punctuation stripped.
std::string as_clause(std::string_view sentence, bool keep_initial_case = false);

// --- readability -----------------------------------------------------------

// Vowel-group count with a silent-e correction; never below 1.
std::size_t count_syllables(std::string_view word);

struct TextCounts {
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::size_t syllables = 0;
};

// Sentences split on runs of . ! ?; a text without terminal punctuation
// counts as one sentence. Words are runs of letters, digits and apostrophes
// containing at least one letter.
TextCounts count_text(std::span<const std::string> texts);

// 0.39 * words/sentences + 11.8 * syllables/words - 15.59.
// Throws Error(kInvalidArgument) on a corpus with no words.
double flesch_kincaid_grade(std::span<const std::string> texts);

// Distinct lowercased runs of ASCII letters.
std::size_t vocabulary_size(std::span<const std::string> texts);

}  // namespace logicbench

#endif  // LOGICBENCH_SURFACE_HPP_
