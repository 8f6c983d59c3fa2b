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

// Command-line front end. Everything goes through the C API in liblogicbench.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logicbench/logicbench.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 runtime failure (IO, network, verification), 2 usage.
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

void check(lb_status status) {
  if (status == LB_OK) return;
  const bool usage = status == LB_ERR_INVALID_ARGUMENT || status == LB_ERR_CONFIG;
  throw Failure{usage ? kExitUsage : kExitFailure, lb_last_error()};
}

struct CString {
  char* p = nullptr;
  ~CString() { lb_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Bank = Handle<lb_bank, lb_bank_free>;
using Templates = Handle<lb_templates, lb_templates_free>;
using Dataset = Handle<lb_dataset, lb_dataset_free>;
using Instances = Handle<lb_instances, lb_instances_free>;
using Report = Handle<lb_report, lb_report_free>;

void write_text_atomic(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw Failure{kExitFailure, "cannot write '" + tmp.string() + "'"};
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Failure{kExitFailure, "cannot rename onto '" + path.string() + "'"};
}

std::pair<unsigned, unsigned> parse_depths(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      unsigned d = static_cast<unsigned>(std::stoul(text));
      return {d, d};
    }
    return {static_cast<unsigned>(std::stoul(text.substr(0, colon))),
            static_cast<unsigned>(std::stoul(text.substr(colon + 1)))};
  } catch (const std::exception&) {
    throw Failure{kExitUsage, "depth range must look like lo:hi, got '" + text + "'"};
  }
}

// A path names either a dataset directory or a single JSONL file.
std::vector<std::unique_ptr<Instances>> load_sets(const std::vector<std::string>& paths) {
  std::vector<std::unique_ptr<Instances>> sets;
  for (const auto& path : paths) {
    if (fs::is_directory(path)) {
      for (const char* name : {"train.jsonl", "validation.jsonl", "test.jsonl"}) {
        auto set = std::make_unique<Instances>();
        check(lb_instances_read((fs::path(path) / name).string().c_str(), &set->p));
        sets.push_back(std::move(set));
      }
    } else {
      auto set = std::make_unique<Instances>();
      check(lb_instances_read(path.c_str(), &set->p));
      sets.push_back(std::move(set));
    }
  }
  return sets;
}

lb_prompt_mode parse_mode(const std::string& name) {
  if (name == "zero_shot") return LB_ZERO_SHOT;
  if (name == "few_shot") return LB_FEW_SHOT;
  if (name == "chain_of_thought" || name == "cot") return LB_CHAIN_OF_THOUGHT;
  if (name == "pk_test") return LB_PK_TEST;
  throw Failure{kExitUsage, "unknown prompt mode '" + name + "'"};
}

// ---- gen ------------------------------------------------------------------------

struct GenArgs {
  size_t n = 7000;
  std::string depths = "1:7";
  uint64_t seed = 0;
  unsigned max_depth = 10;
  std::string bank;
  std::string bank_format = "auto";
  std::string templates;
  std::string out = "data";
  unsigned workers = 0;
  bool no_shuffle = false;
  bool branching = false;
  bool compound_roots = false;
};

int run_gen(const GenArgs& a) {
  lb_gen_config config;
  lb_gen_config_init(&config);
  std::tie(config.depth_min, config.depth_max) = parse_depths(a.depths);
  config.count = a.n;
  config.seed = a.seed;
  config.max_depth = a.max_depth;
  config.workers = a.workers;
  config.shuffle = a.no_shuffle ? 0 : 1;
  config.branching = a.branching ? 1 : 0;
  config.compound_roots = a.compound_roots ? 1 : 0;

  Bank bank;
  if (a.bank.empty()) {
    check(lb_bank_builtin(&bank.p));
  } else {
    lb_bank_format fmt = a.bank_format == "tsv"     ? LB_BANK_TSV
                         : a.bank_format == "plain" ? LB_BANK_PLAIN
                                                    : LB_BANK_AUTO;
    check(lb_bank_load(a.bank.c_str(), fmt, &bank.p));
  }
  Templates templates;
  if (a.templates.empty()) {
    check(lb_templates_builtin(&templates.p));
  } else {
    check(lb_templates_load(a.templates.c_str(), &templates.p));
  }

  // The worker count never changes the output, so it stays out of the manifest.
  ordered_json effective;
  effective["count"] = config.count;
  effective["depth_min"] = config.depth_min;
  effective["depth_max"] = config.depth_max;
  effective["max_depth"] = config.max_depth;
  effective["seed"] = config.seed;
  effective["shuffle"] = config.shuffle != 0;
  effective["branching"] = config.branching != 0;
  effective["compound_roots"] = config.compound_roots != 0;
  effective["oracle_max_atoms"] = config.oracle_max_atoms;
  effective["bank"] = a.bank.empty() ? "builtin" : fs::path(a.bank).filename().string();
  effective["bank_sentences"] = lb_bank_size(bank.p);
  effective["bank_rejected"] = lb_bank_rejected(bank.p);
  effective["bank_sha256"] = lb_bank_checksum(bank.p);
  effective["templates"] = a.templates.empty() ? "builtin" : fs::path(a.templates).filename().string();
  effective["templates_sha256"] = lb_templates_checksum(templates.p);
  std::cerr << "effective config: " << effective.dump() << "\n";

  Dataset dataset;
  check(lb_dataset_build(&config, bank.p, templates.p, &dataset.p));
  check(lb_dataset_write(dataset.p, a.out.c_str()));

  ordered_json manifest;
  manifest["generator"] = std::string("logicbench ") + lb_version();
  manifest["config"] = effective;
  ordered_json files;
  const std::pair<const char*, lb_split> splits[] = {
      {"train.jsonl", LB_SPLIT_TRAIN}, {"validation.jsonl", LB_SPLIT_VALIDATION}, {"test.jsonl", LB_SPLIT_TEST}};
  for (const auto& [name, which] : splits) {
    files[name] = lb_instances_count(lb_dataset_split(dataset.p, which));
  }
  manifest["instances"] = files;
  write_text_atomic(fs::path(a.out) / "manifest.json", manifest.dump(2) + "\n");

  std::cout << "wrote " << files["train.jsonl"].get<size_t>() << " train, "
            << files["validation.jsonl"].get<size_t>() << " validation, "
            << files["test.jsonl"].get<size_t>() << " test instances to " << a.out << "\n";
  return 0;
}

// ---- verify / stats -------------------------------------------------------------

int run_verify(const std::vector<std::string>& paths, size_t max_atoms) {
  auto sets = load_sets(paths);
  size_t checked = 0, verified = 0;
  std::string first;
  for (const auto& set : sets) {
    lb_verify_result result{};
    CString issue;
    check(lb_verify(set->p, max_atoms, &result, &issue.p));
    checked += result.checked;
    verified += result.verified;
    if (first.empty() && issue.p) first = issue.str();
  }
  std::cout << verified << "/" << checked << " labels verified\n";
  if (verified != checked) {
    std::cerr << "verification failed: " << first << "\n";
    return kExitFailure;
  }
  return 0;
}

int run_stats(const std::vector<std::string>& paths) {
  auto sets = load_sets(paths);
  std::vector<const lb_instances*> raw;
  for (const auto& s : sets) raw.push_back(s->p);
  CString json;
  check(lb_stats_json(raw.data(), raw.size(), &json.p));
  std::cout << json.str() << "\n";
  return 0;
}

// ---- prompts --------------------------------------------------------------------

struct PromptArgs {
  std::string data;
  std::string pool;
  std::string mode = "zero_shot";
  int shots = -1;
  uint64_t seed = 0;
  std::string out;
};

int run_prompts(const PromptArgs& a) {
  lb_prompt_mode mode = parse_mode(a.mode);
  Instances targets, pool;
  check(lb_instances_read(a.data.c_str(), &targets.p));
  if (!a.pool.empty()) check(lb_instances_read(a.pool.c_str(), &pool.p));
  if ((mode == LB_FEW_SHOT) && !pool.p && a.shots != 0) {
    throw Failure{kExitUsage, "few_shot prompts need --pool (normally train.jsonl)"};
  }
  size_t written = 0;
  check(lb_prompts_write(targets.p, pool.p, mode, a.shots, a.seed, a.out.c_str(), &written));
  std::cout << "wrote " << written << " " << a.mode << " prompts to " << a.out << "\n";
  return 0;
}

// ---- eval -----------------------------------------------------------------------

struct EvalArgs {
  std::string prompts;
  std::string out;
  std::string base_url;
  std::string model;
  std::string token_env = "OPENAI_API_KEY";
  double temperature = 0.6;
  double top_p = 0.9;
  unsigned parallel = 4;
  unsigned timeout_ms = 120000;
  unsigned retries = 4;
  unsigned backoff_ms = 500;
};

int run_eval(const EvalArgs& a) {
  lb_endpoint endpoint;
  lb_endpoint_init(&endpoint);
  endpoint.base_url = a.base_url.c_str();
  endpoint.model = a.model.c_str();
  endpoint.token_env = a.token_env.c_str();
  endpoint.temperature = a.temperature;
  endpoint.top_p = a.top_p;
  endpoint.max_parallel = a.parallel;
  endpoint.timeout_ms = a.timeout_ms;
  endpoint.max_retries = a.retries;
  endpoint.initial_backoff_ms = a.backoff_ms;
  lb_eval_summary summary{};
  check(lb_eval_run(&endpoint, a.prompts.c_str(), a.out.c_str(), &summary));
  std::cout << "wrote " << summary.records << " records to " << a.out << " (" << summary.failures
            << " failed, " << summary.retries << " retries)\n";
  return summary.failures == summary.records && summary.records > 0 ? kExitFailure : 0;
}

// ---- score / pk-test ------------------------------------------------------------

struct ScoreArgs {
  std::string responses;
  std::string gold;
  std::string json_out;
  std::string csv_out;
};

int run_score(const ScoreArgs& a, bool pk_mode) {
  Instances gold;
  check(lb_instances_read(a.gold.c_str(), &gold.p));
  Report report;
  check(lb_score(a.responses.c_str(), gold.p, pk_mode ? 1 : 0, &report.p));
  CString json, csv;
  check(lb_report_json(report.p, &json.p));
  if (!a.json_out.empty()) write_text_atomic(a.json_out, json.str() + "\n");
  if (!a.csv_out.empty()) {
    check(lb_report_csv(report.p, &csv.p));
    write_text_atomic(a.csv_out, csv.str());
  }
  std::cout << json.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logicbench: synthetic deductive-reasoning benchmark generator and evaluator"};
  app.set_version_flag("--version", std::string(lb_version()));
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a train/validation/test dataset");
  gen_cmd->add_option("--n", gen.n, "Instance count")->capture_default_str();
  gen_cmd->add_option("--depths", gen.depths, "Inclusive depth range lo:hi")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  gen_cmd->add_option("--max-depth", gen.max_depth, "Upper bound accepted for depths")->capture_default_str();
  gen_cmd->add_option("--bank", gen.bank, "Sentence bank (TSV or one sentence per line); default: built-in");
  gen_cmd->add_option("--bank-format", gen.bank_format, "auto, tsv or plain")
      ->check(CLI::IsMember({"auto", "tsv", "plain"}))
      ->capture_default_str();
  gen_cmd->add_option("--templates", gen.templates, "Template file; default: built-in");
  gen_cmd->add_option("--out", gen.out, "Output directory")->capture_default_str();
  gen_cmd->add_option("--workers", gen.workers, "Worker threads (0: logical CPUs)")->capture_default_str();
  gen_cmd->add_flag("--no-shuffle", gen.no_shuffle, "Keep premises in derivation order");
  gen_cmd->add_flag("--branching", gen.branching, "Expand more than one premise per level");
  gen_cmd->add_flag("--compound-roots", gen.compound_roots, "Allow conditional and disjunctive conclusions");

  std::vector<std::string> verify_paths;
  size_t verify_cap = 24;
  auto* verify_cmd = app.add_subcommand("verify", "Re-derive every stored label with the truth-table oracle");
  verify_cmd->add_option("paths", verify_paths, "JSONL files or dataset directories")->required();
  verify_cmd->add_option("--max-atoms", verify_cap, "Oracle atom cap")->capture_default_str();

  std::vector<std::string> stats_paths;
  auto* stats_cmd = app.add_subcommand("stats", "Readability, vocabulary and histogram statistics");
  stats_cmd->add_option("paths", stats_paths, "JSONL files or dataset directories")->required();

  PromptArgs prompts;
  auto* prompts_cmd = app.add_subcommand("prompts", "Render prompts without network access");
  prompts_cmd->add_option("--data", prompts.data, "Target instances (JSONL)")->required();
  prompts_cmd->add_option("--pool", prompts.pool, "Exemplar pool for few-shot (train.jsonl)");
  prompts_cmd->add_option("--mode", prompts.mode, "zero_shot, few_shot, chain_of_thought or pk_test")
      ->capture_default_str();
  prompts_cmd->add_option("--shots", prompts.shots, "Exemplar count (-1: mode default)")->capture_default_str();
  prompts_cmd->add_option("--seed", prompts.seed, "Exemplar selection seed")->capture_default_str();
  prompts_cmd->add_option("--out", prompts.out, "Output JSONL")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Query a chat-completion endpoint with rendered prompts");
  eval_cmd->add_option("--prompts", eval.prompts, "Prompt JSONL from `prompts`")->required();
  eval_cmd->add_option("--out", eval.out, "Response records JSONL")->required();
  eval_cmd->add_option("--base-url", eval.base_url, "Endpoint base URL, e.g. https://host/v1")->required();
  eval_cmd->add_option("--model", eval.model, "Model name")->required();
  eval_cmd->add_option("--token-env", eval.token_env, "Environment variable holding the API token ('' for none)")
      ->capture_default_str();
  eval_cmd->add_option("--temperature", eval.temperature)->capture_default_str();
  eval_cmd->add_option("--top-p", eval.top_p)->capture_default_str();
  eval_cmd->add_option("--parallel", eval.parallel, "Max concurrent requests")->capture_default_str();
  eval_cmd->add_option("--timeout-ms", eval.timeout_ms)->capture_default_str();
  eval_cmd->add_option("--retries", eval.retries)->capture_default_str();
  eval_cmd->add_option("--backoff-ms", eval.backoff_ms, "Initial retry backoff")->capture_default_str();

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score response records against gold labels");
  ScoreArgs pk;
  auto* pk_cmd = app.add_subcommand("pk-test", "Score a prior-knowledge run against the random baseline");
  for (auto [cmd, args] : {std::pair{score_cmd, &score}, std::pair{pk_cmd, &pk}}) {
    cmd->add_option("--responses", args->responses, "Response records JSONL")->required();
    cmd->add_option("--gold", args->gold, "Gold instances JSONL")->required();
    cmd->add_option("--json", args->json_out, "Write the JSON report here");
    cmd->add_option("--csv", args->csv_out, "Write the CSV breakdown here");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify_paths, verify_cap);
    if (*stats_cmd) return run_stats(stats_paths);
    if (*prompts_cmd) return run_prompts(prompts);
    if (*eval_cmd) return run_eval(eval);
    if (*score_cmd) return run_score(score, false);
    if (*pk_cmd) return run_score(pk, true);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
