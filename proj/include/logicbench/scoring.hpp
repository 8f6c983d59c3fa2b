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

#ifndef LOGICBENCH_SCORING_HPP_
#define LOGICBENCH_SCORING_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logicbench/dataset.hpp"

namespace logicbench {

enum class Answer { kTrue, kFalse, kUncertain, kUnparseable };

std::string_view answer_name(Answer a);
std::optional<Answer> answer_from_name(std::string_view name);

struct Extraction {
  Answer answer = Answer::kUnparseable;
  // More than one distinct verdict keyword appeared in the deciding scope.
  bool low_confidence = false;
};

// Looks for the last "Answer:" line and takes the last verdict keyword on it;
// without such a line, the last keyword anywhere in the text. Keywords are
// whole words, case-insensitive.
Extraction extract_answer(std::string_view raw);

struct EvalRecord {
  std::string id;
  std::string prompt_checksum;
  std::string raw;
  Answer answer = Answer::kUnparseable;
  bool low_confidence = false;
  double latency_ms = 0;
  unsigned retries = 0;
  // Empty on success; otherwise e.g. "transport: ..." or "http 400".
  std::string failure;
  std::optional<long long> prompt_tokens;
  std::optional<long long> completion_tokens;
};

std::string record_to_json_line(const EvalRecord& r);
EvalRecord record_from_json_line(std::string_view line, std::size_t line_no);
void write_records(const std::string& path, std::span<const EvalRecord> records);
std::vector<EvalRecord> read_records(const std::string& path);

enum class ScoreMode { kTask, kPkTest };

struct Cell {
  std::size_t correct = 0;
  std::size_t total = 0;
  // Percent, unrounded; 0 for an empty cell.
  double accuracy() const;
};

struct ScoreReport {
  ScoreMode mode = ScoreMode::kTask;
  Cell overall;
  std::map<unsigned, Cell> by_depth;
  // Depth-1 instances only, keyed by form id.
  std::map<std::string, Cell> by_form;
  std::map<Label, Cell> by_label;
  // confusion[gold][answer]; answer index 3 is unparseable.
  std::array<std::array<std::size_t, 4>, 3> confusion{};
  std::size_t parse_failures = 0;
  std::size_t low_confidence = 0;
  std::size_t transport_failures = 0;
  // Prior-knowledge runs: 100/m for m = 3 options, and |accuracy - random|
  // computed on one-decimal values.
  std::optional<double> random_baseline;
  std::optional<double> delta;

  double parse_failure_rate() const;
};

// One decimal place, as reported.
double round1(double percent);

// Throws Error(kInvalidArgument) for a record whose id is not in `gold`.
ScoreReport score(std::span<const EvalRecord> records, std::span<const Instance> gold,
                  ScoreMode mode);

std::string report_to_json(const ScoreReport& report);
// Columns: breakdown,key,correct,total,accuracy
std::string report_to_csv(const ScoreReport& report);

}  // namespace logicbench

#endif  // LOGICBENCH_SCORING_HPP_
