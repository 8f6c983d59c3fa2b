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

#include "logicbench/client.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "logicbench/error.hpp"

namespace logicbench {

namespace {

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // without trailing slash
};

ParsedUrl parse_base_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kConfig, "base URL '" + url + "' has no scheme");
  }
  std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw Error(ErrorCode::kConfig, "base URL scheme must be http or https, got '" + scheme + "'");
  }
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") throw Error(ErrorCode::kConfig, "built without TLS support");
#endif
  auto host_begin = scheme_end + 3;
  auto slash = url.find('/', host_begin);
  std::string host = url.substr(host_begin, slash == std::string::npos ? std::string::npos : slash - host_begin);
  if (host.empty()) throw Error(ErrorCode::kConfig, "base URL '" + url + "' has no host");
  std::string path = slash == std::string::npos ? "" : url.substr(slash);
  while (!path.empty() && path.back() == '/') path.pop_back();
  return {scheme + "://" + host, path};
}

std::string read_token(const ModelEndpoint& endpoint) {
  if (endpoint.token_env.empty()) return {};
  const char* value = std::getenv(endpoint.token_env.c_str());
  if (!value || !*value) {
    throw Error(ErrorCode::kConfig,
                "environment variable " + endpoint.token_env + " is not set (API token)");
  }
  return value;
}

bool retryable_status(int status) {
  return status == 408 || status == 409 || status == 429 || status >= 500;
}

}  // namespace

void validate_endpoint(const ModelEndpoint& endpoint) {
  parse_base_url(endpoint.base_url);
  if (endpoint.model.empty()) throw Error(ErrorCode::kConfig, "model name is empty");
  if (endpoint.max_parallel == 0) throw Error(ErrorCode::kConfig, "max_parallel must be >= 1");
  read_token(endpoint);
}

std::string endpoint_to_json(const ModelEndpoint& endpoint) {
  nlohmann::ordered_json j;
  j["base_url"] = endpoint.base_url;
  j["model"] = endpoint.model;
  j["token_env"] = endpoint.token_env;
  j["temperature"] = endpoint.temperature;
  j["top_p"] = endpoint.top_p;
  j["max_parallel"] = endpoint.max_parallel;
  j["timeout_ms"] = endpoint.timeout_ms;
  j["max_retries"] = endpoint.retry.max_retries;
  return j.dump();
}

std::vector<EvalRecord> query_model(const ModelEndpoint& endpoint,
                                    std::span<const PromptItem> prompts) {
  validate_endpoint(endpoint);
  const ParsedUrl url = parse_base_url(endpoint.base_url);
  const std::string token = read_token(endpoint);
  const std::string path = url.path + "/chat/completions";

  std::vector<EvalRecord> records(prompts.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    httplib::Client client(url.origin);
    auto timeout = std::chrono::milliseconds(endpoint.timeout_ms);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers headers;
    if (!token.empty()) headers.emplace("Authorization", "Bearer " + token);

    for (std::size_t i = next++; i < prompts.size(); i = next++) {
      const PromptItem& item = prompts[i];
      EvalRecord& rec = records[i];
      rec.id = item.id;
      rec.prompt_checksum = item.checksum;

      nlohmann::json body;
      body["model"] = endpoint.model;
      body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", item.prompt}}});
      body["temperature"] = endpoint.temperature;
      body["top_p"] = endpoint.top_p;
      const std::string payload = body.dump();

      unsigned backoff = endpoint.retry.initial_backoff_ms;
      auto started = std::chrono::steady_clock::now();
      for (unsigned attempt = 0;; ++attempt) {
        auto res = client.Post(path, headers, payload, "application/json");
        std::string problem;
        bool retry = false;
        unsigned wait_ms = backoff;
        if (!res) {
          problem = "transport: " + httplib::to_string(res.error());
          retry = true;
        } else if (res->status != 200) {
          problem = "http " + std::to_string(res->status);
          retry = retryable_status(res->status);
          if (res->has_header("Retry-After")) {
            // Seconds form only; a date form falls back to the backoff.
            char* end = nullptr;
            const std::string value = res->get_header_value("Retry-After");
            unsigned long secs = std::strtoul(value.c_str(), &end, 10);
            if (end && *end == '\0' && !value.empty()) {
              wait_ms = static_cast<unsigned>(std::min<unsigned long>(secs * 1000, endpoint.retry.max_backoff_ms));
            }
          }
        } else {
          try {
            auto j = nlohmann::json::parse(res->body);
            rec.raw = j.at("choices").at(0).at("message").at("content").get<std::string>();
            if (j.contains("usage") && j["usage"].is_object()) {
              const auto& u = j["usage"];
              if (u.contains("prompt_tokens")) rec.prompt_tokens = u["prompt_tokens"].get<long long>();
              if (u.contains("completion_tokens")) {
                rec.completion_tokens = u["completion_tokens"].get<long long>();
              }
            }
          } catch (const nlohmann::json::exception& e) {
            problem = std::string("malformed response: ") + e.what();
          }
        }
        if (problem.empty()) {
          rec.failure.clear();
          Extraction e = extract_answer(rec.raw);
          rec.answer = e.answer;
          rec.low_confidence = e.low_confidence;
          break;
        }
        rec.failure = problem;
        rec.answer = Answer::kUnparseable;
        if (!retry || attempt >= endpoint.retry.max_retries) break;
        ++rec.retries;
        std::this_thread::sleep_for(std::chrono::milliseconds(wait_ms));
        backoff = std::min(backoff * 2, endpoint.retry.max_backoff_ms);
      }
      rec.latency_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
  };

  unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(endpoint.max_parallel, std::max<std::size_t>(prompts.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  return records;
}

}  // namespace logicbench
