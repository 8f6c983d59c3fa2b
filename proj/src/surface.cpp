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

#include "logicbench/surface.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "data_blobs.hpp"
#include "logicbench/checksum.hpp"
#include "logicbench/error.hpp"

namespace logicbench {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t count_occurrences(std::string_view text, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void replace_slot(std::string& text, std::string_view slot, std::string_view value) {
  auto pos = text.find(slot);
  if (pos != std::string::npos) text.replace(pos, slot.size(), value);
}

std::string capitalize(std::string s) {
  for (char& c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
    if (c != '\'' && c != '"') break;
  }
  return s;
}

// Normalizes a raw bank line into a sentence: trimmed, capitalized, and
// ending in terminal punctuation.
std::string normalize_sentence(std::string_view raw) {
  std::string s(trim(raw));
  if (s.empty()) return s;
  if (s.back() != '.' && s.back() != '!' && s.back() != '?') s += '.';
  if (std::islower(static_cast<unsigned char>(s[0]))) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

}  // namespace

// --- TemplateSet -------------------------------------------------------------

TemplateSet TemplateSet::parse(std::string_view text) {
  static constexpr std::array<std::string_view, 4> kSections = {"[basic]", "[negation]",
                                                                "[conditional]", "[disjunction]"};
  TemplateSet set;
  int current = -1;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      auto it = std::find(kSections.begin(), kSections.end(), line);
      if (it == kSections.end()) {
        throw Error(ErrorCode::kSchema, "templates line " + std::to_string(line_no) +
                                            ": unknown section " + std::string(line));
      }
      current = static_cast<int>(it - kSections.begin());
      continue;
    }
    if (current < 0) {
      throw Error(ErrorCode::kSchema,
                  "templates line " + std::to_string(line_no) + ": template outside a section");
    }
    bool binary = current >= 2;
    if (count_occurrences(line, "{x}") != 1 || count_occurrences(line, "{y}") != (binary ? 1u : 0u)) {
      throw Error(ErrorCode::kSchema,
                  "templates line " + std::to_string(line_no) + ": wrong slots in '" +
                      std::string(line) + "'");
    }
    set.classes_[static_cast<std::size_t>(current)].emplace_back(line);
  }
  for (std::size_t c = 0; c < 4; ++c) {
    if (set.classes_[c].size() != kTemplateCounts[c]) {
      throw Error(ErrorCode::kSchema, "section " + std::string(kSections[c]) + " has " +
                                          std::to_string(set.classes_[c].size()) +
                                          " templates, expected " +
                                          std::to_string(kTemplateCounts[c]));
    }
  }
  set.checksum_ = sha256_hex(text);
  return set;
}

TemplateSet TemplateSet::load(const std::string& path) { return parse(read_file(path)); }

const TemplateSet& TemplateSet::builtin() {
  static const TemplateSet set = parse(data::kTemplatesText);
  return set;
}

// --- SentenceBank ------------------------------------------------------------

bool SentenceBank::passes_filter(std::string_view sentence) {
  static const std::unordered_set<std::string> kBanned = {"if",     "then", "or",
                                                          "either", "unless", "not"};
  for (char c : sentence) {
    if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) > 0x7e) return false;
  }
  std::size_t words = 0;
  bool in_word = false;
  for (char c : sentence) {
    bool space = c == ' ' || c == '\t';
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  if (words < 3 || words > 20) return false;
  std::string token;
  for (std::size_t i = 0; i <= sentence.size(); ++i) {
    char c = i < sentence.size() ? sentence[i] : ' ';
    if (std::isalpha(static_cast<unsigned char>(c))) {
      token += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      if (kBanned.count(token)) return false;
      token.clear();
    }
  }
  return true;
}

bool SentenceBank::starts_with_proper_noun(std::string_view sentence) const {
  std::string_view first = sentence.substr(0, sentence.find(' '));
  while (!first.empty() && !std::isalnum(static_cast<unsigned char>(first.back()))) {
    first.remove_suffix(1);
  }
  return first == "I" || proper_words_.count(first) != 0;
}

SentenceBank SentenceBank::from_lines(std::span<const std::string> lines, std::string checksum) {
  SentenceBank bank;
  std::unordered_set<std::string> seen;
  for (const auto& raw : lines) {
    std::string s = normalize_sentence(raw);
    if (s.empty()) continue;
    if (!passes_filter(s) || !seen.insert(s).second) {
      ++bank.rejected_;
      continue;
    }
    bank.sentences_.push_back(std::move(s));
  }
  for (const auto& sentence : bank.sentences_) {
    std::size_t pos = sentence.find(' ');
    while (pos != std::string::npos) {
      std::size_t start = pos + 1;
      pos = sentence.find(' ', start);
      std::string word = sentence.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
      while (!word.empty() && !std::isalnum(static_cast<unsigned char>(word.back()))) word.pop_back();
      if (!word.empty() && std::isupper(static_cast<unsigned char>(word[0]))) {
        bank.proper_words_.insert(std::move(word));
      }
    }
  }
  if (bank.sentences_.empty()) {
    throw Error(ErrorCode::kSchema, "sentence bank is empty after filtering (" +
                                        std::to_string(bank.rejected_) + " lines rejected)");
  }
  bank.checksum_ = std::move(checksum);
  return bank;
}

namespace {

std::vector<std::string> tsv_sentences(const std::vector<std::string_view>& lines,
                                       const std::string& path, std::size_t& short_rows) {
  std::vector<std::string> out;
  std::vector<std::string_view> header;
  auto split_tabs = [](std::string_view line) {
    std::vector<std::string_view> cols;
    while (true) {
      auto tab = line.find('\t');
      cols.push_back(line.substr(0, tab));
      if (tab == std::string_view::npos) break;
      line.remove_prefix(tab + 1);
    }
    return cols;
  };
  header = split_tabs(lines.front());
  std::size_t column = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (lower(trim(header[i])) == "generic sentence") column = i;
  }
  if (column == header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (lower(trim(header[i])).find("sentence") != std::string::npos) {
        column = i;
        break;
      }
    }
  }
  if (column == header.size()) {
    throw Error(ErrorCode::kSchema, "'" + path + "': no sentence column in TSV header");
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    auto cols = split_tabs(lines[i]);
    if (column >= cols.size()) {
      ++short_rows;
      continue;
    }
    out.emplace_back(cols[column]);
  }
  return out;
}

}  // namespace

SentenceBank SentenceBank::load(const std::string& path, BankFormat format) {
  std::string text = read_file(path);
  auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kSchema, "'" + path + "' is empty");
  if (format == BankFormat::kAuto) {
    std::string head = lower(lines.front());
    bool tsv = head.find('\t') != std::string::npos && head.find("sentence") != std::string::npos;
    if (!tsv && path.size() >= 4 && lower(path.substr(path.size() - 4)) == ".tsv") tsv = true;
    format = tsv ? BankFormat::kTsv : BankFormat::kPlain;
  }
  std::vector<std::string> raw;
  std::size_t short_rows = 0;
  if (format == BankFormat::kTsv) {
    raw = tsv_sentences(lines, path, short_rows);
  } else {
    for (auto line : lines) {
      if (!trim(line).empty()) raw.emplace_back(line);
    }
  }
  SentenceBank bank = from_lines(raw, sha256_hex(text));
  bank.rejected_ += short_rows;
  return bank;
}

const SentenceBank& SentenceBank::builtin() {
  static const SentenceBank bank = [] {
    std::vector<std::string> raw;
    for (auto line : split_lines(data::kFallbackBankText)) {
      if (!trim(line).empty()) raw.emplace_back(line);
    }
    return from_lines(raw, sha256_hex(data::kFallbackBankText));
  }();
  return bank;
}

// --- binding and realization -------------------------------------------------

void AtomBinding::bind(AtomId atom, std::string sentence, bool keep_initial_case) {
  if (used_.count(sentence)) {
    throw Error(ErrorCode::kInvalidArgument, "sentence already bound: " + sentence);
  }
  if (by_atom_.count(atom)) {
    throw Error(ErrorCode::kInvalidArgument, "atom already bound: " + atom_name(atom));
  }
  used_.insert(sentence);
  if (keep_initial_case) keep_case_.insert(atom);
  by_atom_.emplace(atom, std::move(sentence));
}

std::string AtomBinding::clause(AtomId atom) const {
  return as_clause(sentence(atom), keep_case_.count(atom) != 0);
}

const std::string& AtomBinding::sentence(AtomId atom) const {
  auto it = by_atom_.find(atom);
  if (it == by_atom_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unbound atom " + atom_name(atom));
  }
  return it->second;
}

void bind_atoms(std::span<const AtomId> atoms, const SentenceBank& bank, Stream& stream,
                AtomBinding& binding) {
  const auto& pool = bank.sentences();
  std::size_t in_use = 0;
  for (const auto& s : pool) in_use += binding.uses(s) ? 1 : 0;
  if (pool.size() - in_use < atoms.size()) {
    throw Error(ErrorCode::kBankExhausted,
                "sentence bank exhausted: need " + std::to_string(atoms.size()) + ", " +
                    std::to_string(pool.size() - in_use) + " unused");
  }
  for (AtomId atom : atoms) {
    std::size_t pick = static_cast<std::size_t>(stream.uniform(pool.size()));
    // Probe forward from the drawn index; terminates because an unused
    // sentence is known to exist.
    while (binding.uses(pool[pick])) pick = (pick + 1) % pool.size();
    binding.bind(atom, pool[pick], bank.starts_with_proper_noun(pool[pick]));
  }
}

std::string fill_template(std::string_view tmpl, std::string_view x, std::string_view y) {
  std::string text(tmpl);
  replace_slot(text, "{x}", x);
  replace_slot(text, "{y}", y);
  return capitalize(std::move(text));
}

std::string as_clause(std::string_view sentence, bool keep_initial_case) {
  std::string s(trim(sentence));
  while (!s.empty() && (s.back() == '.' || s.back() == '!' || s.back() == '?')) s.pop_back();
  if (!keep_initial_case && s.size() >= 2 && std::isupper(static_cast<unsigned char>(s[0])) &&
      !std::isupper(static_cast<unsigned char>(s[1]))) {
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  }
  return s;
}

namespace {

class Realizer {
 public:
  Realizer(const AtomBinding& binding, const TemplateSet& templates, Stream& stream)
      : binding_(binding), templates_(templates), stream_(stream) {}

  // Lowercase clause without terminal punctuation.
  std::string clause(const Formula& f) {
    if (f.is_atom()) return binding_.clause(f.atom_id());
    return as_clause(apply(f));
  }

  // Full sentence from the chosen template for a compound formula.
  std::string apply(const Formula& f) {
    std::string text = pick(class_of(f));
    if (f.is_negation()) {
      replace_slot(text, "{x}", slot(f.inner()));
    } else {
      std::string x = slot(f.lhs());
      std::string y = slot(f.rhs());
      replace_slot(text, "{x}", x);
      replace_slot(text, "{y}", y);
    }
    return text;
  }

  std::string pick(TemplateClass c) {
    const auto& options = templates_.of(c);
    return options[static_cast<std::size_t>(stream_.uniform(options.size()))];
  }

 private:
  static TemplateClass class_of(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kNegation:
        return TemplateClass::kNegation;
      case Formula::Kind::kConditional:
        return TemplateClass::kConditional;
      case Formula::Kind::kDisjunction:
        return TemplateClass::kDisjunction;
      default:
        return TemplateClass::kBasic;
    }
  }

  // Binary subformulas are quoted so their scope stays unambiguous.
  std::string slot(const Formula& f) {
    if (f.is_binary()) return "'" + clause(f) + "'";
    return clause(f);
  }

  const AtomBinding& binding_;
  const TemplateSet& templates_;
  Stream& stream_;
};

}  // namespace

std::string realize_statement(const Formula& f, const AtomBinding& binding,
                              const TemplateSet& templates, Stream& stream,
                              const RealizeOptions& options) {
  Realizer r(binding, templates, stream);
  if (f.is_atom()) {
    const std::string& sentence = binding.sentence(f.atom_id());
    if (stream.unit() < options.basic_wrap_probability) {
      std::string text = r.pick(TemplateClass::kBasic);
      replace_slot(text, "{x}", binding.clause(f.atom_id()));
      return capitalize(std::move(text));
    }
    return normalize_sentence(sentence);
  }
  return capitalize(r.apply(f));
}

// --- readability -------------------------------------------------------------

std::size_t count_syllables(std::string_view word) {
  std::string w;
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      w += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (w.empty()) return 0;
  auto vowel = [](char c) { return std::string_view("aeiouy").find(c) != std::string_view::npos; };
  std::size_t groups = 0;
  bool prev = false;
  for (char c : w) {
    bool v = vowel(c);
    if (v && !prev) ++groups;
    prev = v;
  }
  // Silent final e ("make"), except consonant + "le" ("table").
  if (groups > 1 && w.back() == 'e' && !vowel(w[w.size() - 2])) {
    bool consonant_le = w.size() >= 3 && w[w.size() - 2] == 'l' && !vowel(w[w.size() - 3]);
    if (!consonant_le) --groups;
  }
  return std::max<std::size_t>(groups, 1);
}

TextCounts count_text(std::span<const std::string> texts) {
  TextCounts counts;
  for (const auto& text : texts) {
    bool sentence_has_words = false;
    std::string word;
    auto flush_word = [&] {
      auto begin = word.find_first_not_of('\'');
      auto end = word.find_last_not_of('\'');
      if (begin != std::string::npos) {
        std::string_view core(word.data() + begin, end - begin + 1);
        bool has_letter = std::any_of(core.begin(), core.end(), [](char c) {
          return std::isalpha(static_cast<unsigned char>(c));
        });
        if (has_letter) {
          ++counts.words;
          counts.syllables += count_syllables(core);
          sentence_has_words = true;
        }
      }
      word.clear();
    };
    for (char c : text) {
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'') {
        word += c;
        continue;
      }
      flush_word();
      if ((c == '.' || c == '!' || c == '?') && sentence_has_words) {
        ++counts.sentences;
        sentence_has_words = false;
      }
    }
    flush_word();
    if (sentence_has_words) ++counts.sentences;
  }
  return counts;
}

double flesch_kincaid_grade(std::span<const std::string> texts) {
  TextCounts c = count_text(texts);
  if (c.words == 0 || c.sentences == 0) {
    throw Error(ErrorCode::kInvalidArgument, "Flesch-Kincaid grade of an empty corpus");
  }
  return 0.39 * static_cast<double>(c.words) / static_cast<double>(c.sentences) +
         11.8 * static_cast<double>(c.syllables) / static_cast<double>(c.words) - 15.59;
}

std::size_t vocabulary_size(std::span<const std::string> texts) {
  std::unordered_set<std::string> vocab;
  std::string token;
  for (const auto& text : texts) {
    for (std::size_t i = 0; i <= text.size(); ++i) {
      char c = i < text.size() ? text[i] : ' ';
      if (std::isalpha(static_cast<unsigned char>(c))) {
        token += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      } else if (!token.empty()) {
        vocab.insert(token);
        token.clear();
      }
    }
  }
  return vocab.size();
}

}  // namespace logicbench
