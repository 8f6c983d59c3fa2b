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

#include "logicbench/prompts.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "data_blobs.hpp"
#include "logicbench/checksum.hpp"
#include "logicbench/error.hpp"

namespace logicbench {

std::string_view prompt_mode_name(PromptMode mode) {
  switch (mode) {
    case PromptMode::kZeroShot:
      return "zero_shot";
    case PromptMode::kFewShot:
      return "few_shot";
    case PromptMode::kChainOfThought:
      return "chain_of_thought";
    case PromptMode::kPkTest:
      return "pk_test";
  }
  return "?";
}

std::optional<PromptMode> prompt_mode_from_name(std::string_view name) {
  for (PromptMode m : {PromptMode::kZeroShot, PromptMode::kFewShot, PromptMode::kChainOfThought,
                       PromptMode::kPkTest}) {
    if (prompt_mode_name(m) == name) return m;
  }
  if (name == "cot") return PromptMode::kChainOfThought;
  return std::nullopt;
}

std::string_view task_preamble() {
  static constexpr std::string_view kPreamble =
      "You are given a paragraph of facts/premises, followed by a statement. Perform logical "
      "reasoning with propositional logic on the paragraph to determine the truth value of the "
      "statement.\n"
      "\n"
      "Here is the list of argument forms:\n"
      "- Modus Ponens\n"
      "- Modus Tollens\n"
      "- Hypothetical Syllogism\n"
      "- Disjunctive Syllogism\n"
      "- Reductio ad absurdum\n"
      "- Constructive Dilemma\n"
      "- Disjunction Elimination\n"
      "\n"
      "You must answer with either one of the 3 options:\n"
      "- TRUE: When the premises in the paragraph lead to the statement\n"
      "- FALSE: When the premises in the paragraph directly contradict the statement\n"
      "- UNCERTAIN: When the premises in the paragraph neither support nor contradict the "
      "statement\n"
      "\n"
      "Do not use your prior knowledge; your answer must be solely determined by the information "
      "within the paragraph. Assume that all premises in the paragraph are true.\n";
  return kPreamble;
}

PromptSpec PromptSpec::defaults(PromptMode mode) {
  switch (mode) {
    case PromptMode::kFewShot:
    case PromptMode::kChainOfThought:
      return {mode, 3};
    default:
      return {mode, 0};
  }
}

const std::vector<CotExemplar>& cot_exemplars() {
  static const std::vector<CotExemplar> exemplars = [] {
    std::vector<CotExemplar> out;
    for (const auto& j : nlohmann::json::parse(data::kCotExemplarsText)) {
      out.push_back({j.at("paragraph").get<std::vector<std::string>>(),
                     j.at("statement").get<std::string>(), j.at("reasoning").get<std::string>(),
                     j.at("answer").get<std::string>()});
    }
    return out;
  }();
  return exemplars;
}

std::string cot_exemplars_checksum() { return sha256_hex(data::kCotExemplarsText); }

std::vector<Instance> select_exemplars(std::span<const Instance> pool, unsigned shots,
                                       std::uint64_t seed) {
  std::array<std::vector<std::size_t>, 3> by_label;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    by_label[static_cast<std::size_t>(pool[i].label)].push_back(i);
  }
  Stream stream = Stream::derive(seed, 0xe8e3ULL);
  for (auto& members : by_label) stream.shuffle(std::span<std::size_t>(members));
  std::vector<Instance> out;
  std::array<std::size_t, 3> taken{};
  while (out.size() < shots) {
    bool progressed = false;
    for (std::size_t l = 0; l < 3 && out.size() < shots; ++l) {
      if (taken[l] < by_label[l].size()) {
        out.push_back(pool[by_label[l][taken[l]++]]);
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  if (out.size() < shots) {
    throw Error(ErrorCode::kInvalidArgument, "exemplar pool has only " +
                                                 std::to_string(out.size()) + " instances, need " +
                                                 std::to_string(shots));
  }
  return out;
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void append_paragraph(std::ostringstream& out, const std::vector<std::string>& paragraph) {
  out << "Paragraph:\n";
  for (std::size_t i = 0; i < paragraph.size(); ++i) out << (i + 1) << ". " << paragraph[i] << "\n";
}

}  // namespace

std::string build_task_prompt(const Instance& inst, const PromptSpec& spec,
                              std::span<const Instance> exemplars) {
  if (spec.mode == PromptMode::kPkTest) return build_pk_prompt(inst, spec, exemplars);
  for (const auto& ex : exemplars) {
    if (ex.id == inst.id) {
      throw Error(ErrorCode::kInvalidArgument, "exemplar " + ex.id + " is the target instance");
    }
  }
  std::ostringstream out;
  out << task_preamble() << "\n";

  if (spec.mode == PromptMode::kFewShot) {
    if (spec.shots == 0 || exemplars.size() < spec.shots) {
      throw Error(ErrorCode::kInvalidArgument, "few-shot prompt needs " +
                                                   std::to_string(spec.shots) + " exemplars (>= 1)");
    }
    out << "Here are some examples.\n\n";
    for (unsigned k = 0; k < spec.shots; ++k) {
      const Instance& ex = exemplars[k];
      out << "Example " << (k + 1) << "\n";
      append_paragraph(out, ex.paragraph);
      out << "Statement: " << ex.statement << "\n";
      out << "Answer: " << upper(label_name(ex.label)) << "\n\n";
    }
  } else if (spec.mode == PromptMode::kChainOfThought) {
    const auto& worked = cot_exemplars();
    if (spec.shots == 0 || spec.shots > worked.size()) {
      throw Error(ErrorCode::kInvalidArgument, "chain-of-thought supports 1.." +
                                                   std::to_string(worked.size()) + " exemplars");
    }
    out << "Here are some examples.\n\n";
    for (unsigned k = 0; k < spec.shots; ++k) {
      out << "Example " << (k + 1) << "\n";
      append_paragraph(out, worked[k].paragraph);
      out << "Statement: " << worked[k].statement << "\n";
      out << "Reasoning: " << worked[k].reasoning << "\n";
      out << "Answer: " << worked[k].answer << "\n\n";
    }
  }

  append_paragraph(out, inst.paragraph);
  out << "Statement: " << inst.statement << "\n\n";
  out << "Question: Is the statement true, false, or uncertain?\n";
  if (spec.mode == PromptMode::kChainOfThought) {
    out << "Reason step by step, then give your final answer on a line starting with \"Answer:\".\n";
  }
  return out.str();
}

std::string build_pk_prompt(const Instance& inst, const PromptSpec& spec,
                            std::span<const Instance> exemplars) {
  std::ostringstream out;
  out << "Instructions:\n"
      << "- Use the knowledge you currently have to answer as accurately as possible.\n"
      << "- You have 3 answer options: True, False, and Uncertain.\n"
      << "- There should be roughly an equal proportion of each option.\n\n";
  unsigned shown = 0;
  for (const auto& ex : exemplars) {
    if (shown >= spec.shots) break;
    if (ex.id == inst.id) continue;
    bool leaks = std::any_of(inst.paragraph.begin(), inst.paragraph.end(), [&](const std::string& p) {
      return p.find(ex.statement) != std::string::npos || ex.statement.find(p) != std::string::npos;
    });
    if (leaks) continue;
    out << "Question: " << kQuestion << "\n"
        << "Statement: " << ex.statement << "\n"
        << "Answer: " << label_name(ex.label) << ".\n\n";
    ++shown;
  }
  out << "Question: " << kQuestion << "\n"
      << "Statement: " << inst.statement << "\n"
      << "Answer:";
  return out.str();
}

std::vector<PromptItem> build_prompts(std::span<const Instance> targets, const PromptSpec& spec,
                                      std::span<const Instance> exemplar_pool, std::uint64_t seed) {
  std::vector<Instance> exemplars;
  if (spec.mode == PromptMode::kFewShot || (spec.mode == PromptMode::kPkTest && spec.shots > 0)) {
    // Extra pk candidates cover exemplars skipped for overlapping a premise.
    unsigned wanted = spec.mode == PromptMode::kPkTest ? spec.shots * 3 : spec.shots;
    wanted = static_cast<unsigned>(std::min<std::size_t>(wanted, exemplar_pool.size()));
    exemplars = select_exemplars(exemplar_pool, std::max(wanted, spec.shots), seed);
  }
  std::vector<PromptItem> out;
  out.reserve(targets.size());
  for (const auto& inst : targets) {
    std::string prompt = spec.mode == PromptMode::kPkTest ? build_pk_prompt(inst, spec, exemplars)
                                                          : build_task_prompt(inst, spec, exemplars);
    std::string sum = sha256_hex(prompt);
    out.push_back({inst.id, std::move(prompt), std::move(sum)});
  }
  return out;
}

void write_prompts(const std::string& path, std::span<const PromptItem> prompts, PromptMode mode) {
  std::string out;
  for (const auto& p : prompts) {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["mode"] = prompt_mode_name(mode);
    j["prompt_sha256"] = p.checksum;
    j["prompt"] = p.prompt;
    out += j.dump();
    out += '\n';
  }
  write_file_atomic(path, out);
}

std::vector<PromptItem> read_prompts(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<PromptItem> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto j = nlohmann::json::parse(line);
      PromptItem item{j.at("id").get<std::string>(), j.at("prompt").get<std::string>(), {}};
      item.checksum = sha256_hex(item.prompt);
      out.push_back(std::move(item));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kSchema, path + ": line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace logicbench
