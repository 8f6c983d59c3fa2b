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

#ifndef LOGICBENCH_CLIENT_HPP_
#define LOGICBENCH_CLIENT_HPP_

#include <span>
#include <string>
#include <vector>

#include "logicbench/prompts.hpp"
#include "logicbench/scoring.hpp"

namespace logicbench {

struct RetryPolicy {
  unsigned max_retries = 4;
  unsigned initial_backoff_ms = 500;
  unsigned max_backoff_ms = 16000;
};

// Chat-completion endpoint. The bearer token is read from the environment
// variable named by token_env at request time and never stored here.
struct ModelEndpoint {
  std::string base_url;  // e.g. "https://api.openai.com/v1"
  std::string model;
  std::string token_env = "OPENAI_API_KEY";  // empty: no Authorization header
  double temperature = 0.6;
  double top_p = 0.9;
  unsigned max_parallel = 4;
  unsigned timeout_ms = 120000;
  RetryPolicy retry;
};

// Throws Error(kConfig) for an unusable URL, empty model or missing token.
void validate_endpoint(const ModelEndpoint& endpoint);

// Endpoint settings without secrets, for embedding in reports.
std::string endpoint_to_json(const ModelEndpoint& endpoint);

// Sends every prompt; returns one record per prompt in input order. Failed
// requests become records with `failure` set; the batch never aborts.
std::vector<EvalRecord> query_model(const ModelEndpoint& endpoint,
                                    std::span<const PromptItem> prompts);

}  // namespace logicbench

#endif  // LOGICBENCH_CLIENT_HPP_
