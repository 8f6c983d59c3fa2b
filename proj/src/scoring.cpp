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

#include "logicbench/scoring.hpp"

#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "logicbench/checksum.hpp"
#include "logicbench/error.hpp"

namespace logicbench {

std::string_view answer_name(Answer a) {
  switch (a) {
    case Answer::kTrue:
      return "True";
    case Answer::kFalse:
      return "False";
    case Answer::kUncertain:
      return "Uncertain";
    case Answer::kUnparseable:
      return "unparseable";
  }
  return "?";
}

std::optional<Answer> answer_from_name(std::string_view name) {
  for (Answer a : {Answer::kTrue, Answer::kFalse, Answer::kUncertain, Answer::kUnparseable}) {
    if (answer_name(a) == name) return a;
  }
  return std::nullopt;
}

namespace {

struct Scan {
  std::optional<Answer> last;
  std::set<Answer> seen;
};

Scan scan_keywords(std::string_view text) {
  Scan scan;
  std::string word;
  auto flush = [&] {
    if (word == "true") {
      scan.last = Answer::kTrue;
    } else if (word == "false") {
      scan.last = Answer::kFalse;
    } else if (word == "uncertain") {
      scan.last = Answer::kUncertain;
    } else {
      word.clear();
      return;
    }
    scan.seen.insert(*scan.last);
    word.clear();
  };
  for (char c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      flush();
    }
  }
  flush();
  return scan;
}

Extraction from_scan(const Scan& scan) {
  return {*scan.last, scan.seen.size() > 1};
}

}  // namespace

Extraction extract_answer(std::string_view raw) {
  std::vector<std::string_view> lines;
  for (std::string_view rest = raw; !rest.empty();) {
    auto nl = rest.find('\n');
    lines.push_back(rest.substr(0, nl));
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    std::string lowered(*it);
    for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto pos = lowered.find("answer");
    if (pos == std::string::npos) continue;
    auto colon = lowered.find(':', pos);
    if (colon == std::string::npos) continue;
    Scan scan = scan_keywords(std::string_view(*it).substr(colon + 1));
    if (scan.last) return from_scan(scan);
  }
  Scan scan = scan_keywords(raw);
  if (!scan.last) return {};
  return from_scan(scan);
}

// --- records -------------------------------------------------------------------

std::string record_to_json_line(const EvalRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["prompt_sha256"] = r.prompt_checksum;
  j["raw"] = r.raw;
  j["extracted"] = answer_name(r.answer);
  j["low_confidence"] = r.low_confidence;
  j["latency_ms"] = std::round(r.latency_ms * 1000.0) / 1000.0;
  j["retries"] = r.retries;
  j["failure"] = r.failure.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.failure);
  j["prompt_tokens"] = r.prompt_tokens ? nlohmann::ordered_json(*r.prompt_tokens) : nlohmann::ordered_json(nullptr);
  j["completion_tokens"] =
      r.completion_tokens ? nlohmann::ordered_json(*r.completion_tokens) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

EvalRecord record_from_json_line(std::string_view line, std::size_t line_no) {
  try {
    auto j = nlohmann::json::parse(line);
    EvalRecord r;
    r.id = j.at("id").get<std::string>();
    r.prompt_checksum = j.value("prompt_sha256", std::string());
    r.raw = j.value("raw", std::string());
    // Records may carry only raw text (e.g. produced by another harness).
    if (j.contains("extracted") && !j["extracted"].is_null()) {
      auto a = answer_from_name(j["extracted"].get<std::string>());
      if (!a) {
        throw Error(ErrorCode::kSchema,
                    "line " + std::to_string(line_no) + ": unknown extracted answer");
      }
      r.answer = *a;
      r.low_confidence = j.value("low_confidence", false);
    } else {
      Extraction e = extract_answer(r.raw);
      r.answer = e.answer;
      r.low_confidence = e.low_confidence;
    }
    r.latency_ms = j.value("latency_ms", 0.0);
    r.retries = j.value("retries", 0u);
    if (j.contains("failure") && !j["failure"].is_null()) r.failure = j["failure"].get<std::string>();
    if (j.contains("prompt_tokens") && !j["prompt_tokens"].is_null()) {
      r.prompt_tokens = j["prompt_tokens"].get<long long>();
    }
    if (j.contains("completion_tokens") && !j["completion_tokens"].is_null()) {
      r.completion_tokens = j["completion_tokens"].get<long long>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchema, "line " + std::to_string(line_no) + ": " + e.what());
  }
}

void write_records(const std::string& path, std::span<const EvalRecord> records) {
  std::string out;
  for (const auto& r : records) {
    out += record_to_json_line(r);
    out += '\n';
  }
  write_file_atomic(path, out);
}

std::vector<EvalRecord> read_records(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<EvalRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json_line(line, line_no));
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
  }
  return out;
}

// --- scoring -------------------------------------------------------------------

double Cell::accuracy() const {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

double ScoreReport::parse_failure_rate() const {
  return overall.total == 0
             ? 0.0
             : 100.0 * static_cast<double>(parse_failures) / static_cast<double>(overall.total);
}

double round1(double percent) { return std::round(percent * 10.0) / 10.0; }

ScoreReport score(std::span<const EvalRecord> records, std::span<const Instance> gold,
                  ScoreMode mode) {
  std::map<std::string, const Instance*> by_id;
  for (const auto& inst : gold) by_id.emplace(inst.id, &inst);

  ScoreReport report;
  report.mode = mode;
  for (const auto& r : records) {
    auto it = by_id.find(r.id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kInvalidArgument, "record '" + r.id + "' matches no gold instance");
    }
    const Instance& inst = *it->second;
    bool correct = r.answer != Answer::kUnparseable &&
                   static_cast<int>(r.answer) == static_cast<int>(inst.label);
    auto tally = [correct](Cell& c) {
      ++c.total;
      if (correct) ++c.correct;
    };
    tally(report.overall);
    tally(report.by_depth[inst.meta.depth]);
    tally(report.by_label[inst.label]);
    if (inst.meta.depth == 1) tally(report.by_form[inst.meta.root_form]);
    ++report.confusion[static_cast<std::size_t>(inst.label)][static_cast<std::size_t>(r.answer)];
    if (r.answer == Answer::kUnparseable) ++report.parse_failures;
    if (r.low_confidence) ++report.low_confidence;
    if (!r.failure.empty()) ++report.transport_failures;
  }
  if (mode == ScoreMode::kPkTest) {
    double random = 100.0 / 3.0;
    report.random_baseline = random;
    report.delta = round1(std::abs(round1(report.overall.accuracy()) - round1(random)));
  }
  return report;
}

namespace {

nlohmann::ordered_json cell_json(const Cell& c) {
  nlohmann::ordered_json j;
  j["correct"] = c.correct;
  j["total"] = c.total;
  j["accuracy"] = round1(c.accuracy());
  return j;
}

}  // namespace

std::string report_to_json(const ScoreReport& report) {
  nlohmann::ordered_json j;
  j["mode"] = report.mode == ScoreMode::kPkTest ? "pk_test" : "task";
  j["overall"] = cell_json(report.overall);
  auto& depth = j["by_depth"] = nlohmann::ordered_json::object();
  for (const auto& [d, c] : report.by_depth) depth[std::to_string(d)] = cell_json(c);
  auto& form = j["by_form_depth1"] = nlohmann::ordered_json::object();
  for (const auto& [f, c] : report.by_form) form[f] = cell_json(c);
  auto& label = j["by_label"] = nlohmann::ordered_json::object();
  for (const auto& [l, c] : report.by_label) label[std::string(label_name(l))] = cell_json(c);
  auto& confusion = j["confusion"] = nlohmann::ordered_json::object();
  for (Label g : kAllLabels) {
    auto& row = confusion[std::string(label_name(g))] = nlohmann::ordered_json::object();
    for (Answer a : {Answer::kTrue, Answer::kFalse, Answer::kUncertain, Answer::kUnparseable}) {
      row[std::string(answer_name(a))] =
          report.confusion[static_cast<std::size_t>(g)][static_cast<std::size_t>(a)];
    }
  }
  j["parse_failures"] = report.parse_failures;
  j["parse_failure_rate"] = round1(report.parse_failure_rate());
  j["low_confidence"] = report.low_confidence;
  j["transport_failures"] = report.transport_failures;
  if (report.random_baseline) {
    j["random_baseline"] = round1(*report.random_baseline);
    j["delta"] = *report.delta;
  }
  return j.dump(2);
}

std::string report_to_csv(const ScoreReport& report) {
  std::ostringstream out;
  out << "breakdown,key,correct,total,accuracy\n";
  auto row = [&out](std::string_view breakdown, const std::string& key, const Cell& c) {
    char acc[32];
    std::snprintf(acc, sizeof acc, "%.1f", round1(c.accuracy()));
    out << breakdown << ',' << key << ',' << c.correct << ',' << c.total << ',' << acc << '\n';
  };
  row("overall", "all", report.overall);
  for (const auto& [d, c] : report.by_depth) row("depth", std::to_string(d), c);
  for (const auto& [f, c] : report.by_form) row("form", f, c);
  for (const auto& [l, c] : report.by_label) row("label", std::string(label_name(l)), c);
  if (report.random_baseline) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "pk,random_baseline,,,%.1f\npk,delta,,,%.1f\n",
                  round1(*report.random_baseline), *report.delta);
    out << buf;
  }
  return out.str();
}

}  // namespace logicbench
