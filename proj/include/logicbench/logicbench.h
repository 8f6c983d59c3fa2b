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

/* Stable C interface to the logicbench shared library.
 *
 * Objects are opaque handles created by lb_*_load / lb_*_build / lb_*_parse
 * and released with the matching lb_*_free. Every fallible call returns an
 * lb_status; on failure lb_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap-allocated and
 * released with lb_string_free. */
#ifndef LOGICBENCH_LOGICBENCH_H_
#define LOGICBENCH_LOGICBENCH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LB_API __declspec(dllexport)
#else
#define LB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lb_status {
  LB_OK = 0,
  LB_ERR_INVALID_ARGUMENT = 1,
  LB_ERR_SYNTAX = 2,
  LB_ERR_IO = 3,
  LB_ERR_SCHEMA = 4,
  LB_ERR_ORACLE_CAP = 5,
  LB_ERR_BANK_EXHAUSTED = 6,
  LB_ERR_INTERNAL = 7,
  LB_ERR_NETWORK = 8,
  LB_ERR_VERIFICATION = 9,
  LB_ERR_SHAPE_MISMATCH = 10,
  LB_ERR_CONFIG = 11
} lb_status;

LB_API const char* lb_version(void);
/* Message for the last failed call on this thread; "" if none. */
LB_API const char* lb_last_error(void);
LB_API void lb_string_free(char* s);

/* ---- formulas and the entailment oracle -------------------------------- */

typedef struct lb_formula lb_formula;

typedef enum lb_verdict {
  LB_ENTAILED = 0,
  LB_CONTRADICTED = 1,
  LB_INDEPENDENT = 2
} lb_verdict;

/* On LB_ERR_SYNTAX, *error_offset (if non-NULL) receives the byte offset. */
LB_API lb_status lb_formula_parse(const char* text, lb_formula** out, size_t* error_offset);
LB_API lb_status lb_formula_render(const lb_formula* f, char** out);
LB_API void lb_formula_free(lb_formula* f);

/* max_atoms = 0 selects the default cap (20). */
LB_API lb_status lb_entails(const lb_formula* const* premises, size_t count,
                            const lb_formula* conclusion, size_t max_atoms, int* out);
LB_API lb_status lb_consistent_with(const lb_formula* const* premises, size_t count,
                                    const lb_formula* statement, size_t max_atoms,
                                    lb_verdict* out);

/* ---- sentence bank and templates ---------------------------------------- */

typedef struct lb_bank lb_bank;
typedef struct lb_templates lb_templates;

typedef enum lb_bank_format { LB_BANK_AUTO = 0, LB_BANK_TSV = 1, LB_BANK_PLAIN = 2 } lb_bank_format;

LB_API lb_status lb_bank_load(const char* path, lb_bank_format format, lb_bank** out);
LB_API lb_status lb_bank_builtin(lb_bank** out);
LB_API size_t lb_bank_size(const lb_bank* bank);
LB_API size_t lb_bank_rejected(const lb_bank* bank);
LB_API const char* lb_bank_checksum(const lb_bank* bank);
LB_API void lb_bank_free(lb_bank* bank);

LB_API lb_status lb_templates_load(const char* path, lb_templates** out);
LB_API lb_status lb_templates_builtin(lb_templates** out);
LB_API const char* lb_templates_checksum(const lb_templates* templates);
LB_API void lb_templates_free(lb_templates* templates);

/* ---- dataset generation and files --------------------------------------- */

typedef struct lb_gen_config {
  uint64_t seed;
  size_t count;
  unsigned depth_min;
  unsigned depth_max;
  unsigned max_depth;
  unsigned workers; /* 0: hardware concurrency */
  int shuffle;
  int branching;
  int compound_roots;
  size_t oracle_max_atoms;
} lb_gen_config;

/* Defaults: 7000 instances, depths 1..7, seed 0, shuffled paragraphs. */
LB_API void lb_gen_config_init(lb_gen_config* config);

typedef struct lb_instances lb_instances;
typedef struct lb_dataset lb_dataset;

typedef enum lb_split { LB_SPLIT_TRAIN = 0, LB_SPLIT_VALIDATION = 1, LB_SPLIT_TEST = 2 } lb_split;

LB_API lb_status lb_dataset_build(const lb_gen_config* config, const lb_bank* bank,
                                  const lb_templates* templates, lb_dataset** out);
/* Writes train.jsonl, validation.jsonl and test.jsonl into dir. */
LB_API lb_status lb_dataset_write(const lb_dataset* dataset, const char* dir);
LB_API lb_status lb_dataset_read(const char* dir, lb_dataset** out);
/* Borrowed; valid while the dataset lives. */
LB_API const lb_instances* lb_dataset_split(const lb_dataset* dataset, lb_split which);
LB_API void lb_dataset_free(lb_dataset* dataset);

LB_API lb_status lb_instances_read(const char* path, lb_instances** out);
LB_API lb_status lb_instances_write(const lb_instances* instances, const char* path);
LB_API size_t lb_instances_count(const lb_instances* instances);
/* One JSONL line (no newline) for instance `index`. */
LB_API lb_status lb_instances_get_json(const lb_instances* instances, size_t index, char** out);
LB_API void lb_instances_free(lb_instances* instances);

typedef struct lb_verify_result {
  size_t checked;
  size_t verified;
} lb_verify_result;

/* Re-derives every label with the oracle. *first_issue (if non-NULL) receives
 * "<id>: <reason>" for the first mismatch, or NULL. Returns LB_OK even when
 * mismatches are found; compare checked and verified. */
LB_API lb_status lb_verify(const lb_instances* instances, size_t max_atoms,
                           lb_verify_result* out, char** first_issue);

/* Complexity and histogram statistics over one or more instance sets, JSON. */
LB_API lb_status lb_stats_json(const lb_instances* const* sets, size_t count, char** out);

/* ---- prompting, model queries and scoring -------------------------------- */

typedef enum lb_prompt_mode {
  LB_ZERO_SHOT = 0,
  LB_FEW_SHOT = 1,
  LB_CHAIN_OF_THOUGHT = 2,
  LB_PK_TEST = 3
} lb_prompt_mode;

/* Renders one prompt per target into a JSONL file. `pool` supplies few-shot
 * exemplars and may be NULL for other modes. shots < 0 picks the mode's
 * default (3 for few-shot and chain-of-thought, 0 otherwise). */
LB_API lb_status lb_prompts_write(const lb_instances* targets, const lb_instances* pool,
                                  lb_prompt_mode mode, int shots, uint64_t seed,
                                  const char* path, size_t* written);

/* Prompt text for one target instance. */
LB_API lb_status lb_prompt_render(const lb_instances* targets, size_t index,
                                  const lb_instances* pool, lb_prompt_mode mode, int shots,
                                  uint64_t seed, char** out);

typedef struct lb_endpoint {
  const char* base_url;
  const char* model;
  const char* token_env; /* NULL or "": no Authorization header */
  double temperature;
  double top_p;
  unsigned max_parallel;
  unsigned timeout_ms;
  unsigned max_retries;
  unsigned initial_backoff_ms;
} lb_endpoint;

/* temperature 0.6, top_p 0.9, 4 parallel requests, 4 retries. */
LB_API void lb_endpoint_init(lb_endpoint* endpoint);

typedef struct lb_eval_summary {
  size_t records;
  size_t failures;
  size_t retries;
} lb_eval_summary;

/* Sends every prompt in prompts_path and writes one response record per
 * prompt to responses_path. Configuration problems fail with LB_ERR_CONFIG
 * before any request; per-request failures are recorded, not returned. */
LB_API lb_status lb_eval_run(const lb_endpoint* endpoint, const char* prompts_path,
                             const char* responses_path, lb_eval_summary* summary);

typedef enum lb_answer {
  LB_ANSWER_TRUE = 0,
  LB_ANSWER_FALSE = 1,
  LB_ANSWER_UNCERTAIN = 2,
  LB_ANSWER_UNPARSEABLE = 3
} lb_answer;

LB_API lb_status lb_extract_answer(const char* raw, lb_answer* out, int* low_confidence);

typedef struct lb_report lb_report;

LB_API lb_status lb_score(const char* responses_path, const lb_instances* gold, int pk_mode,
                          lb_report** out);
/* Overall accuracy in percent, unrounded. */
LB_API double lb_report_accuracy(const lb_report* report);
/* |accuracy - random| for pk-test reports; LB_ERR_INVALID_ARGUMENT otherwise. */
LB_API lb_status lb_report_delta(const lb_report* report, double* out);
LB_API lb_status lb_report_json(const lb_report* report, char** out);
LB_API lb_status lb_report_csv(const lb_report* report, char** out);
LB_API void lb_report_free(lb_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LOGICBENCH_LOGICBENCH_H_ */
