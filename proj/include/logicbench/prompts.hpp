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

#ifndef LOGICBENCH_PROMPTS_HPP_
#define LOGICBENCH_PROMPTS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logicbench/dataset.hpp"

namespace logicbench {

enum class PromptMode { kZeroShot, kFewShot, kChainOfThought, kPkTest };

std::string_view prompt_mode_name(PromptMode mode);
std::optional<PromptMode> prompt_mode_from_name(std::string_view name);

// Task instructions shared by every prompting mode.
std::string_view task_preamble();

struct PromptSpec {
  PromptMode mode = PromptMode::kZeroShot;
  // Exemplars for few-shot and chain-of-thought; statement-only examples for
  // the prior-knowledge test.
  unsigned shots = 0;

  static PromptSpec defaults(PromptMode mode);
};

// A worked example for chain-of-thought prompts.
struct CotExemplar {
  std::vector<std::string> paragraph;
  std::string statement;
  std::string reasoning;
  std::string answer;
};

const std::vector<CotExemplar>& cot_exemplars();
std::string cot_exemplars_checksum();

// Picks `shots` exemplars from `pool`, cycling through True/False/Uncertain
// and drawing each label's members in a seeded order.
std::vector<Instance> select_exemplars(std::span<const Instance> pool, unsigned shots,
                                       std::uint64_t seed);

// Preamble, exemplars for the mode, target paragraph and statement, question.
// Throws Error(kInvalidArgument) if an exemplar is the target instance.
std::string build_task_prompt(const Instance& inst, const PromptSpec& spec,
                              std::span<const Instance> exemplars);

// Question and statement only; never the paragraph. Exemplars (spec.shots of
// them, taken from `exemplars`) are statement/answer pairs and are skipped when
// their statement coincides with one of the target's premises.
std::string build_pk_prompt(const Instance& inst, const PromptSpec& spec,
                            std::span<const Instance> exemplars = {});

struct PromptItem {
  std::string id;
  std::string prompt;
  std::string checksum;  // sha256 of prompt
};

std::vector<PromptItem> build_prompts(std::span<const Instance> targets, const PromptSpec& spec,
                                      std::span<const Instance> exemplar_pool, std::uint64_t seed);

void write_prompts(const std::string& path, std::span<const PromptItem> prompts, PromptMode mode);
std::vector<PromptItem> read_prompts(const std::string& path);

}  // namespace logicbench

#endif  // LOGICBENCH_PROMPTS_HPP_
