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

#ifndef LOGICBENCH_DATASET_HPP_
#define LOGICBENCH_DATASET_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logicbench/oracle.hpp"
#include "logicbench/structure.hpp"
#include "logicbench/surface.hpp"

namespace logicbench {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kQuestion =
    "Is the following statement true, false, or uncertain?";

enum class Label { kTrue, kFalse, kUncertain };
inline constexpr std::array<Label, 3> kAllLabels = {Label::kTrue, Label::kFalse, Label::kUncertain};

std::string_view label_name(Label label);
std::optional<Label> label_from_name(std::string_view name);
Label label_for(Verdict verdict);

enum class Factuality { kAccurate, kInaccurate, kIndeterminate };
std::string_view factuality_name(Factuality f);
std::optional<Factuality> factuality_from_name(std::string_view name);

// Real-world accuracy of a statement whose atoms are all true bank sentences:
// an atom is accurate, a negated atom inaccurate, a disjunction with at least
// one bare atom among its disjuncts accurate, anything else indeterminate.
Factuality tag_factuality(const Formula& query);

struct SymbolicStep {
  std::string form;
  std::vector<std::string> premises;
  std::string conclusion;
  std::optional<PremiseRef> parent;
  bool operator==(const SymbolicStep&) const = default;
};

struct InstanceMeta {
  unsigned depth = 0;
  // Form of every step in generation order; root_form is forms.front().
  std::vector<std::string> forms;
  std::string root_form;
  // Symbolic premises in paragraph order, the query and the final conclusion.
  std::vector<std::string> premises;
  std::string query;
  std::string conclusion;
  std::vector<SymbolicStep> steps;
  // Atom alias -> bank sentence.
  std::map<std::string, std::string> atoms;
  Factuality factuality = Factuality::kIndeterminate;
  std::uint64_t seed = 0;
  std::uint64_t instance_index = 0;
  std::string template_checksum;
  std::string bank_checksum;
  int schema_version = kSchemaVersion;
  std::string generator;
  bool operator==(const InstanceMeta&) const = default;
};

struct Instance {
  std::string id;
  std::vector<std::string> paragraph;
  std::string question{kQuestion};
  std::string statement;
  Label label = Label::kUncertain;
  InstanceMeta meta;
  bool operator==(const Instance&) const = default;
};

struct QueryStatement {
  Formula formula;
  Label label;
};

// True: the final conclusion. False: its negation, with ~~x read as x.
// Uncertain: a fresh atom bound to an unused bank sentence, checked to be
// independent of the leaf premises. Throws Error(kBankExhausted).
QueryStatement make_query(const ArgumentStructure& s, Label target, const SentenceBank& bank,
                          AtomBinding& binding, AtomAllocator& atoms, Stream& stream,
                          const OracleOptions& oracle = {});

struct GenerationConfig {
  StructureOptions structure;
  RealizeOptions realize;
  OracleOptions oracle;
  bool shuffle = true;
};

struct GenerationContext {
  const SentenceBank* bank = nullptr;
  const TemplateSet* templates = nullptr;
  std::uint64_t seed = 0;
  std::uint64_t instance_index = 0;
  GenerationConfig config;
  // Test hook run on the structure before rendering.
  std::function<void(ArgumentStructure&)> tamper;
};

std::string instance_id(std::uint64_t instance_index);
std::string generator_version();

// Generates, renders and labels one instance, re-checking the label with the
// oracle. Throws Error(kInternal) on any inconsistency; never relabels.
Instance assemble_instance(unsigned depth, Label target, const GenerationContext& context);

struct BuildConfig {
  std::size_t count = 7000;
  unsigned depth_min = 1;
  unsigned depth_max = 7;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0: hardware concurrency
  GenerationConfig generation;
};

struct DatasetSplit {
  std::vector<Instance> train;
  std::vector<Instance> validation;
  std::vector<Instance> test;
  bool operator==(const DatasetSplit&) const = default;
};

// Per-depth instance counts for `count` instances over [lo, hi]; the
// remainder goes to the lowest depths.
std::vector<std::size_t> depth_counts(std::size_t count, unsigned lo, unsigned hi);

// Equal per-depth counts, round-robin labels within each depth, and a
// 70/15/15 split stratified by (depth, label). Deterministic in the config.
DatasetSplit build_dataset(const BuildConfig& config, const SentenceBank& bank,
                           const TemplateSet& templates);

// --- persistence -------------------------------------------------------------

std::string instance_to_json_line(const Instance& inst);
// Throws Error(kSchema) naming `line_no`.
Instance instance_from_json_line(std::string_view line, std::size_t line_no);

void write_instances(const std::string& path, std::span<const Instance> instances);
std::vector<Instance> read_instances(const std::string& path);

// train.jsonl, validation.jsonl and test.jsonl under `dir`.
void write_dataset(const DatasetSplit& split, const std::string& dir);
DatasetSplit read_dataset(const std::string& dir);

// --- statistics ----------------------------------------------------------------

struct CorpusStats {
  std::size_t instances = 0;
  TextCounts counts;
  double fk_grade = 0;
  std::size_t vocabulary = 0;
  std::map<unsigned, std::size_t> by_depth;
  std::map<Label, std::size_t> by_label;
  std::map<std::string, std::size_t> by_root_form;
  std::map<Factuality, std::size_t> by_factuality;
};

// Text metrics over every premise and statement (the fixed question is
// excluded) plus metadata histograms.
CorpusStats corpus_stats(std::span<const Instance> instances);
std::string corpus_stats_json(const CorpusStats& stats);

// --- verification ------------------------------------------------------------

struct VerifyIssue {
  std::string id;
  std::string reason;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::size_t verified = 0;
  std::vector<VerifyIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Recomputes every label from the stored symbolic premises and query with
// the oracle, and re-validates the stored derivation.
VerifyReport verify_instances(std::span<const Instance> instances,
                              const OracleOptions& oracle = {.max_atoms = 24});

}  // namespace logicbench

#endif  // LOGICBENCH_DATASET_HPP_
