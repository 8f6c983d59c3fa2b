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

#include "logicbench/logicbench.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "logicbench/client.hpp"
#include "logicbench/dataset.hpp"
#include "logicbench/error.hpp"
#include "logicbench/formula.hpp"
#include "logicbench/oracle.hpp"
#include "logicbench/prompts.hpp"
#include "logicbench/scoring.hpp"
#include "logicbench/surface.hpp"

#ifndef LOGICBENCH_VERSION
#define LOGICBENCH_VERSION "0.0.0"
#endif

using namespace logicbench;

struct lb_formula {
  Formula value;
};
struct lb_bank {
  SentenceBank value;
};
struct lb_templates {
  TemplateSet value;
};
struct lb_instances {
  std::vector<Instance> value;
};
struct lb_dataset {
  lb_instances train, validation, test;
};
struct lb_report {
  ScoreReport value;
};

namespace {

thread_local std::string g_last_error;

lb_status fail(lb_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
lb_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return LB_OK;
  } catch (const SyntaxError& e) {
    return fail(LB_ERR_SYNTAX, e.what());
  } catch (const Error& e) {
    return fail(static_cast<lb_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LB_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, what);
}

std::vector<Formula> formulas(const lb_formula* const* items, size_t count) {
  require(count == 0 || items, "premise array is NULL");
  std::vector<Formula> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    require(items[i], "premise is NULL");
    out.push_back(items[i]->value);
  }
  return out;
}

OracleOptions oracle_options(size_t max_atoms) {
  OracleOptions o;
  if (max_atoms) o.max_atoms = max_atoms;
  return o;
}

PromptSpec prompt_spec(lb_prompt_mode mode, int shots) {
  require(mode >= LB_ZERO_SHOT && mode <= LB_PK_TEST, "unknown prompt mode");
  PromptSpec spec = PromptSpec::defaults(static_cast<PromptMode>(mode));
  if (shots >= 0) spec.shots = static_cast<unsigned>(shots);
  return spec;
}

}  // namespace

extern "C" {

const char* lb_version(void) { return LOGICBENCH_VERSION; }
const char* lb_last_error(void) { return g_last_error.c_str(); }
void lb_string_free(char* s) { std::free(s); }

// ---- formulas -----------------------------------------------------------------

lb_status lb_formula_parse(const char* text, lb_formula** out, size_t* error_offset) {
  return guarded([&] {
    require(text && out, "NULL argument");
    try {
      *out = new lb_formula{parse_formula(text)};
    } catch (const SyntaxError& e) {
      if (error_offset) *error_offset = e.offset();
      throw;
    }
  });
}

lb_status lb_formula_render(const lb_formula* f, char** out) {
  return guarded([&] {
    require(f && out, "NULL argument");
    *out = dup_string(render_symbolic(f->value));
  });
}

void lb_formula_free(lb_formula* f) { delete f; }

lb_status lb_entails(const lb_formula* const* premises, size_t count, const lb_formula* conclusion,
                     size_t max_atoms, int* out) {
  return guarded([&] {
    require(conclusion && out, "NULL argument");
    *out = entails(formulas(premises, count), conclusion->value, oracle_options(max_atoms)) ? 1 : 0;
  });
}

lb_status lb_consistent_with(const lb_formula* const* premises, size_t count,
                             const lb_formula* statement, size_t max_atoms, lb_verdict* out) {
  return guarded([&] {
    require(statement && out, "NULL argument");
    Verdict v = consistent_with(formulas(premises, count), statement->value, oracle_options(max_atoms));
    *out = static_cast<lb_verdict>(v);
  });
}

// ---- bank and templates ---------------------------------------------------------

lb_status lb_bank_load(const char* path, lb_bank_format format, lb_bank** out) {
  return guarded([&] {
    require(path && out, "NULL argument");
    BankFormat f = format == LB_BANK_TSV     ? BankFormat::kTsv
                   : format == LB_BANK_PLAIN ? BankFormat::kPlain
                                             : BankFormat::kAuto;
    *out = new lb_bank{SentenceBank::load(path, f)};
  });
}

lb_status lb_bank_builtin(lb_bank** out) {
  return guarded([&] {
    require(out, "NULL argument");
    *out = new lb_bank{SentenceBank::builtin()};
  });
}

size_t lb_bank_size(const lb_bank* bank) { return bank ? bank->value.size() : 0; }
size_t lb_bank_rejected(const lb_bank* bank) { return bank ? bank->value.rejected() : 0; }
const char* lb_bank_checksum(const lb_bank* bank) { return bank ? bank->value.checksum().c_str() : ""; }
void lb_bank_free(lb_bank* bank) { delete bank; }

lb_status lb_templates_load(const char* path, lb_templates** out) {
  return guarded([&] {
    require(path && out, "NULL argument");
    *out = new lb_templates{TemplateSet::load(path)};
  });
}

lb_status lb_templates_builtin(lb_templates** out) {
  return guarded([&] {
    require(out, "NULL argument");
    *out = new lb_templates{TemplateSet::builtin()};
  });
}

const char* lb_templates_checksum(const lb_templates* templates) {
  return templates ? templates->value.checksum().c_str() : "";
}
void lb_templates_free(lb_templates* templates) { delete templates; }

// ---- generation -----------------------------------------------------------------

void lb_gen_config_init(lb_gen_config* config) {
  if (!config) return;
  BuildConfig defaults;
  config->seed = defaults.seed;
  config->count = defaults.count;
  config->depth_min = defaults.depth_min;
  config->depth_max = defaults.depth_max;
  config->max_depth = defaults.generation.structure.max_depth;
  config->workers = defaults.workers;
  config->shuffle = defaults.generation.shuffle ? 1 : 0;
  config->branching = defaults.generation.structure.branching ? 1 : 0;
  config->compound_roots = defaults.generation.structure.compound_roots ? 1 : 0;
  config->oracle_max_atoms = defaults.generation.oracle.max_atoms;
}

lb_status lb_dataset_build(const lb_gen_config* config, const lb_bank* bank,
                           const lb_templates* templates, lb_dataset** out) {
  return guarded([&] {
    require(config && bank && templates && out, "NULL argument");
    BuildConfig c;
    c.seed = config->seed;
    c.count = config->count;
    c.depth_min = config->depth_min;
    c.depth_max = config->depth_max;
    c.workers = config->workers;
    c.generation.structure.max_depth = config->max_depth ? config->max_depth : 10;
    c.generation.structure.branching = config->branching != 0;
    c.generation.structure.compound_roots = config->compound_roots != 0;
    c.generation.shuffle = config->shuffle != 0;
    if (config->oracle_max_atoms) c.generation.oracle.max_atoms = config->oracle_max_atoms;
    DatasetSplit split = build_dataset(c, bank->value, templates->value);
    *out = new lb_dataset{{std::move(split.train)}, {std::move(split.validation)}, {std::move(split.test)}};
  });
}

lb_status lb_dataset_write(const lb_dataset* dataset, const char* dir) {
  return guarded([&] {
    require(dataset && dir, "NULL argument");
    DatasetSplit split{dataset->train.value, dataset->validation.value, dataset->test.value};
    write_dataset(split, dir);
  });
}

lb_status lb_dataset_read(const char* dir, lb_dataset** out) {
  return guarded([&] {
    require(dir && out, "NULL argument");
    DatasetSplit split = read_dataset(dir);
    *out = new lb_dataset{{std::move(split.train)}, {std::move(split.validation)}, {std::move(split.test)}};
  });
}

const lb_instances* lb_dataset_split(const lb_dataset* dataset, lb_split which) {
  if (!dataset) return nullptr;
  switch (which) {
    case LB_SPLIT_TRAIN:
      return &dataset->train;
    case LB_SPLIT_VALIDATION:
      return &dataset->validation;
    case LB_SPLIT_TEST:
      return &dataset->test;
  }
  return nullptr;
}

void lb_dataset_free(lb_dataset* dataset) { delete dataset; }

lb_status lb_instances_read(const char* path, lb_instances** out) {
  return guarded([&] {
    require(path && out, "NULL argument");
    *out = new lb_instances{read_instances(path)};
  });
}

lb_status lb_instances_write(const lb_instances* instances, const char* path) {
  return guarded([&] {
    require(instances && path, "NULL argument");
    write_instances(path, instances->value);
  });
}

size_t lb_instances_count(const lb_instances* instances) {
  return instances ? instances->value.size() : 0;
}

lb_status lb_instances_get_json(const lb_instances* instances, size_t index, char** out) {
  return guarded([&] {
    require(instances && out, "NULL argument");
    require(index < instances->value.size(), "instance index out of range");
    *out = dup_string(instance_to_json_line(instances->value[index]));
  });
}

void lb_instances_free(lb_instances* instances) { delete instances; }

lb_status lb_verify(const lb_instances* instances, size_t max_atoms, lb_verify_result* out,
                    char** first_issue) {
  return guarded([&] {
    require(instances && out, "NULL argument");
    OracleOptions o;
    o.max_atoms = max_atoms ? max_atoms : 24;
    VerifyReport report = verify_instances(instances->value, o);
    out->checked = report.checked;
    out->verified = report.verified;
    if (first_issue) {
      *first_issue = report.issues.empty()
                         ? nullptr
                         : dup_string(report.issues.front().id + ": " + report.issues.front().reason);
    }
  });
}

lb_status lb_stats_json(const lb_instances* const* sets, size_t count, char** out) {
  return guarded([&] {
    require(out && (count == 0 || sets), "NULL argument");
    std::vector<Instance> all;
    for (size_t i = 0; i < count; ++i) {
      require(sets[i], "instance set is NULL");
      all.insert(all.end(), sets[i]->value.begin(), sets[i]->value.end());
    }
    *out = dup_string(corpus_stats_json(corpus_stats(all)));
  });
}

// ---- prompting, evaluation, scoring ---------------------------------------------

lb_status lb_prompts_write(const lb_instances* targets, const lb_instances* pool,
                           lb_prompt_mode mode, int shots, uint64_t seed, const char* path,
                           size_t* written) {
  return guarded([&] {
    require(targets && path, "NULL argument");
    PromptSpec spec = prompt_spec(mode, shots);
    std::span<const Instance> exemplars;
    if (pool) exemplars = pool->value;
    auto prompts = build_prompts(targets->value, spec, exemplars, seed);
    write_prompts(path, prompts, spec.mode);
    if (written) *written = prompts.size();
  });
}

lb_status lb_prompt_render(const lb_instances* targets, size_t index, const lb_instances* pool,
                           lb_prompt_mode mode, int shots, uint64_t seed, char** out) {
  return guarded([&] {
    require(targets && out, "NULL argument");
    require(index < targets->value.size(), "instance index out of range");
    PromptSpec spec = prompt_spec(mode, shots);
    std::span<const Instance> exemplars;
    if (pool) exemplars = pool->value;
    auto prompts = build_prompts(std::span<const Instance>(&targets->value[index], 1), spec, exemplars, seed);
    *out = dup_string(prompts.front().prompt);
  });
}

void lb_endpoint_init(lb_endpoint* endpoint) {
  if (!endpoint) return;
  ModelEndpoint d;
  endpoint->base_url = nullptr;
  endpoint->model = nullptr;
  endpoint->token_env = "OPENAI_API_KEY";
  endpoint->temperature = d.temperature;
  endpoint->top_p = d.top_p;
  endpoint->max_parallel = d.max_parallel;
  endpoint->timeout_ms = d.timeout_ms;
  endpoint->max_retries = d.retry.max_retries;
  endpoint->initial_backoff_ms = d.retry.initial_backoff_ms;
}

lb_status lb_eval_run(const lb_endpoint* endpoint, const char* prompts_path,
                      const char* responses_path, lb_eval_summary* summary) {
  return guarded([&] {
    require(endpoint && prompts_path && responses_path, "NULL argument");
    ModelEndpoint e;
    e.base_url = endpoint->base_url ? endpoint->base_url : "";
    e.model = endpoint->model ? endpoint->model : "";
    e.token_env = endpoint->token_env ? endpoint->token_env : "";
    e.temperature = endpoint->temperature;
    e.top_p = endpoint->top_p;
    e.max_parallel = endpoint->max_parallel;
    e.timeout_ms = endpoint->timeout_ms;
    e.retry.max_retries = endpoint->max_retries;
    e.retry.initial_backoff_ms = endpoint->initial_backoff_ms;
    validate_endpoint(e);
    auto prompts = read_prompts(prompts_path);
    auto records = query_model(e, prompts);
    write_records(responses_path, records);
    if (summary) {
      *summary = {records.size(), 0, 0};
      for (const auto& r : records) {
        if (!r.failure.empty()) ++summary->failures;
        summary->retries += r.retries;
      }
    }
  });
}

lb_status lb_extract_answer(const char* raw, lb_answer* out, int* low_confidence) {
  return guarded([&] {
    require(raw && out, "NULL argument");
    Extraction e = extract_answer(raw);
    *out = static_cast<lb_answer>(e.answer);
    if (low_confidence) *low_confidence = e.low_confidence ? 1 : 0;
  });
}

lb_status lb_score(const char* responses_path, const lb_instances* gold, int pk_mode,
                   lb_report** out) {
  return guarded([&] {
    require(responses_path && gold && out, "NULL argument");
    auto records = read_records(responses_path);
    *out = new lb_report{score(records, gold->value, pk_mode ? ScoreMode::kPkTest : ScoreMode::kTask)};
  });
}

double lb_report_accuracy(const lb_report* report) {
  return report ? report->value.overall.accuracy() : 0.0;
}

lb_status lb_report_delta(const lb_report* report, double* out) {
  return guarded([&] {
    require(report && out, "NULL argument");
    require(report->value.delta.has_value(), "report is not a prior-knowledge test report");
    *out = *report->value.delta;
  });
}

lb_status lb_report_json(const lb_report* report, char** out) {
  return guarded([&] {
    require(report && out, "NULL argument");
    *out = dup_string(report_to_json(report->value));
  });
}

lb_status lb_report_csv(const lb_report* report, char** out) {
  return guarded([&] {
    require(report && out, "NULL argument");
    *out = dup_string(report_to_csv(report->value));
  });
}

void lb_report_free(lb_report* report) { delete report; }

}  // extern "C"
