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

#include "logicbench/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "logicbench/checksum.hpp"
#include "logicbench/error.hpp"

#ifndef LOGICBENCH_VERSION
#define LOGICBENCH_VERSION "0.0.0"
#endif

namespace logicbench {

using ojson = nlohmann::ordered_json;

std::string_view label_name(Label label) {
  switch (label) {
    case Label::kTrue:
      return "True";
    case Label::kFalse:
      return "False";
    case Label::kUncertain:
      return "Uncertain";
  }
  return "?";
}

std::optional<Label> label_from_name(std::string_view name) {
  for (Label l : kAllLabels) {
    if (label_name(l) == name) return l;
  }
  return std::nullopt;
}

Label label_for(Verdict verdict) {
  switch (verdict) {
    case Verdict::kEntailed:
      return Label::kTrue;
    case Verdict::kContradicted:
      return Label::kFalse;
    case Verdict::kIndependent:
      return Label::kUncertain;
  }
  return Label::kUncertain;
}

std::string_view factuality_name(Factuality f) {
  switch (f) {
    case Factuality::kAccurate:
      return "accurate";
    case Factuality::kInaccurate:
      return "inaccurate";
    case Factuality::kIndeterminate:
      return "indeterminate";
  }
  return "?";
}

std::optional<Factuality> factuality_from_name(std::string_view name) {
  for (Factuality f : {Factuality::kAccurate, Factuality::kInaccurate, Factuality::kIndeterminate}) {
    if (factuality_name(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

void collect_disjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Formula::Kind::kDisjunction) {
    collect_disjuncts(f.lhs(), out);
    collect_disjuncts(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

Factuality tag_factuality(const Formula& query) {
  switch (query.kind()) {
    case Formula::Kind::kAtom:
      return Factuality::kAccurate;
    case Formula::Kind::kNegation:
      return query.inner().is_atom() ? Factuality::kInaccurate : Factuality::kIndeterminate;
    case Formula::Kind::kDisjunction: {
      std::vector<Formula> parts;
      collect_disjuncts(query, parts);
      bool any_atom = std::any_of(parts.begin(), parts.end(), [](const Formula& f) { return f.is_atom(); });
      return any_atom ? Factuality::kAccurate : Factuality::kIndeterminate;
    }
    case Formula::Kind::kConditional:
      return Factuality::kIndeterminate;
  }
  return Factuality::kIndeterminate;
}

QueryStatement make_query(const ArgumentStructure& s, Label target, const SentenceBank& bank,
                          AtomBinding& binding, AtomAllocator& atoms, Stream& stream,
                          const OracleOptions& oracle) {
  switch (target) {
    case Label::kTrue:
      return {s.final_conclusion, Label::kTrue};
    case Label::kFalse:
      return {negate_normalized(s.final_conclusion), Label::kFalse};
    case Label::kUncertain:
      break;
  }
  AtomId fresh = atoms.fresh();
  std::vector<AtomId> one{fresh};
  bind_atoms(one, bank, stream, binding);
  Formula query = Formula::atom(fresh);
  auto leaves = s.leaf_premises();
  if (consistent_with(leaves, query, oracle) != Verdict::kIndependent) {
    throw Error(ErrorCode::kInternal, "fresh query atom is not independent of the premises");
  }
  return {query, Label::kUncertain};
}

std::string instance_id(std::uint64_t instance_index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "lb-%06llu", static_cast<unsigned long long>(instance_index));
  return buf;
}

std::string generator_version() { return std::string("logicbench ") + LOGICBENCH_VERSION; }

namespace {

[[noreturn]] void inconsistent(const GenerationContext& ctx, const std::string& what) {
  throw Error(ErrorCode::kInternal, "internal consistency error in instance " +
                                        instance_id(ctx.instance_index) + ": " + what);
}

}  // namespace

Instance assemble_instance(unsigned depth, Label target, const GenerationContext& ctx) {
  if (!ctx.bank || !ctx.templates) {
    throw Error(ErrorCode::kInvalidArgument, "generation context needs a bank and templates");
  }
  const GenerationConfig& cfg = ctx.config;
  Stream stream = Stream::derive(ctx.seed, ctx.instance_index);
  StreamChooser chooser(stream);
  AtomAllocator atoms;
  ArgumentStructure s = generate_structure(depth, chooser, atoms, cfg.structure);
  if (ctx.tamper) ctx.tamper(s);

  if (!structure_is_well_formed(s, cfg.oracle)) inconsistent(ctx, "invalid derivation step");
  if (measure_depth(s) != depth) inconsistent(ctx, "depth mismatch");
  if (!entails(s.leaf_premises(), s.final_conclusion, cfg.oracle)) {
    inconsistent(ctx, "premises do not entail the conclusion");
  }

  AtomBinding binding;
  std::vector<AtomId> used = s.atoms();
  std::sort(used.begin(), used.end());
  bind_atoms(used, *ctx.bank, stream, binding);

  std::vector<Formula> premises = paragraph_premises(s, stream, cfg.shuffle);
  QueryStatement query = make_query(s, target, *ctx.bank, binding, atoms, stream, cfg.oracle);
  Verdict verdict = consistent_with(premises, query.formula, cfg.oracle);
  if (label_for(verdict) != query.label) {
    inconsistent(ctx, std::string("oracle says ") + std::string(verdict_name(verdict)) +
                          " for target " + std::string(label_name(query.label)));
  }

  Instance inst;
  inst.id = instance_id(ctx.instance_index);
  for (const auto& p : premises) {
    inst.paragraph.push_back(realize_statement(p, binding, *ctx.templates, stream, cfg.realize));
  }
  inst.statement = realize_statement(query.formula, binding, *ctx.templates, stream, cfg.realize);
  inst.label = query.label;

  InstanceMeta& m = inst.meta;
  m.depth = depth;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const InferenceStep& step = s.steps[i];
    m.forms.emplace_back(form_id(step.form));
    SymbolicStep sym{std::string(form_id(step.form)), {}, render_symbolic(step.conclusion), s.parent[i]};
    for (const auto& p : step.premises) sym.premises.push_back(render_symbolic(p));
    m.steps.push_back(std::move(sym));
  }
  m.root_form = m.forms.front();
  for (const auto& p : premises) m.premises.push_back(render_symbolic(p));
  m.query = render_symbolic(query.formula);
  m.conclusion = render_symbolic(s.final_conclusion);
  for (const auto& [atom, sentence] : binding.entries()) m.atoms.emplace(atom_name(atom), sentence);
  m.factuality = tag_factuality(query.formula);
  m.seed = ctx.seed;
  m.instance_index = ctx.instance_index;
  m.template_checksum = ctx.templates->checksum();
  m.bank_checksum = ctx.bank->checksum();
  m.generator = generator_version();
  return inst;
}

std::vector<std::size_t> depth_counts(std::size_t count, unsigned lo, unsigned hi) {
  std::size_t k = hi - lo + 1;
  std::vector<std::size_t> out(k, count / k);
  for (std::size_t i = 0; i < count % k; ++i) ++out[i];
  return out;
}

DatasetSplit build_dataset(const BuildConfig& config, const SentenceBank& bank,
                           const TemplateSet& templates) {
  const unsigned lo = config.depth_min;
  const unsigned hi = config.depth_max;
  if (lo < 1 || hi < lo || hi > config.generation.structure.max_depth) {
    throw Error(ErrorCode::kInvalidArgument, "invalid depth range " + std::to_string(lo) + ":" +
                                                 std::to_string(hi));
  }
  std::size_t cells = static_cast<std::size_t>(hi - lo + 1) * kAllLabels.size();
  if (config.count < cells) {
    throw Error(ErrorCode::kInvalidArgument,
                "need at least " + std::to_string(cells) + " instances for " +
                    std::to_string(hi - lo + 1) + " depths x 3 labels");
  }

  struct Job {
    unsigned depth;
    Label label;
  };
  std::vector<Job> jobs;
  auto counts = depth_counts(config.count, lo, hi);
  for (unsigned d = lo; d <= hi; ++d) {
    for (std::size_t j = 0; j < counts[d - lo]; ++j) {
      jobs.push_back({d, kAllLabels[(j + (d - lo)) % 3]});
    }
  }

  std::vector<Instance> all(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    GenerationContext ctx;
    ctx.bank = &bank;
    ctx.templates = &templates;
    ctx.seed = config.seed;
    ctx.config = config.generation;
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        ctx.instance_index = i;
        all[i] = assemble_instance(jobs[i].depth, jobs[i].label, ctx);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  // Stratify by (depth, label): each cell is shuffled with its own stream and
  // cut 70/15/15.
  DatasetSplit split;
  std::map<std::pair<unsigned, int>, std::vector<std::size_t>> by_cell;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    by_cell[{jobs[i].depth, static_cast<int>(jobs[i].label)}].push_back(i);
  }
  std::vector<std::size_t> train, validation, test;
  for (auto& [cell, members] : by_cell) {
    Stream stream = Stream::derive(config.seed ^ 0x5eed5b117ULL, cell.first * 3u + static_cast<unsigned>(cell.second));
    stream.shuffle(std::span<std::size_t>(members));
    auto m = static_cast<double>(members.size());
    auto n_val = static_cast<std::size_t>(std::lround(0.15 * m));
    auto n_test = static_cast<std::size_t>(std::lround(0.15 * m));
    std::size_t n_train = members.size() - n_val - n_test;
    train.insert(train.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(n_train));
    validation.insert(validation.end(), members.begin() + static_cast<std::ptrdiff_t>(n_train),
                      members.begin() + static_cast<std::ptrdiff_t>(n_train + n_val));
    test.insert(test.end(), members.begin() + static_cast<std::ptrdiff_t>(n_train + n_val), members.end());
  }
  auto gather = [&all](std::vector<std::size_t>& idx, std::vector<Instance>& out) {
    std::sort(idx.begin(), idx.end());
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(std::move(all[i]));
  };
  gather(train, split.train);
  gather(validation, split.validation);
  gather(test, split.test);
  return split;
}

// --- persistence -------------------------------------------------------------

std::string instance_to_json_line(const Instance& inst) {
  const InstanceMeta& m = inst.meta;
  ojson steps = ojson::array();
  for (const auto& s : m.steps) {
    ojson step;
    step["form"] = s.form;
    step["premises"] = s.premises;
    step["conclusion"] = s.conclusion;
    step["parent"] = s.parent ? ojson::array({s.parent->step, s.parent->premise}) : ojson(nullptr);
    steps.push_back(std::move(step));
  }
  ojson symbolic;
  symbolic["premises"] = m.premises;
  symbolic["query"] = m.query;
  symbolic["conclusion"] = m.conclusion;
  symbolic["steps"] = std::move(steps);
  ojson atoms = ojson::object();
  for (const auto& [alias, sentence] : m.atoms) atoms[alias] = sentence;

  ojson meta;
  meta["depth"] = m.depth;
  meta["forms"] = m.forms;
  meta["root_form"] = m.root_form;
  meta["symbolic"] = std::move(symbolic);
  meta["atoms"] = std::move(atoms);
  meta["factuality"] = factuality_name(m.factuality);
  meta["seed"] = m.seed;
  meta["instance_index"] = m.instance_index;
  meta["template_checksum"] = m.template_checksum;
  meta["bank_checksum"] = m.bank_checksum;
  meta["schema_version"] = m.schema_version;
  meta["generator"] = m.generator;

  ojson j;
  j["id"] = inst.id;
  j["paragraph"] = inst.paragraph;
  j["question"] = inst.question;
  j["statement"] = inst.statement;
  j["label"] = label_name(inst.label);
  j["meta"] = std::move(meta);
  return j.dump();
}

Instance instance_from_json_line(std::string_view line, std::size_t line_no) {
  auto fail = [line_no](const std::string& what) -> Error {
    return Error(ErrorCode::kSchema, "line " + std::to_string(line_no) + ": " + what);
  };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto& meta = j.at("meta");
    int version = meta.at("schema_version").get<int>();
    if (version != kSchemaVersion) {
      throw fail("unsupported schema_version " + std::to_string(version) + " (expected " +
                 std::to_string(kSchemaVersion) + ")");
    }
    Instance inst;
    inst.id = j.at("id").get<std::string>();
    inst.paragraph = j.at("paragraph").get<std::vector<std::string>>();
    inst.question = j.at("question").get<std::string>();
    inst.statement = j.at("statement").get<std::string>();
    auto label = label_from_name(j.at("label").get<std::string>());
    if (!label) throw fail("label '" + j.at("label").get<std::string>() + "' is not True/False/Uncertain");
    inst.label = *label;

    InstanceMeta& m = inst.meta;
    m.schema_version = version;
    m.depth = meta.at("depth").get<unsigned>();
    m.forms = meta.at("forms").get<std::vector<std::string>>();
    m.root_form = meta.at("root_form").get<std::string>();
    const auto& sym = meta.at("symbolic");
    m.premises = sym.at("premises").get<std::vector<std::string>>();
    m.query = sym.at("query").get<std::string>();
    m.conclusion = sym.at("conclusion").get<std::string>();
    for (const auto& s : sym.at("steps")) {
      SymbolicStep step{s.at("form").get<std::string>(),
                        s.at("premises").get<std::vector<std::string>>(),
                        s.at("conclusion").get<std::string>(), std::nullopt};
      if (!s.at("parent").is_null()) {
        auto p = s.at("parent").get<std::vector<std::size_t>>();
        if (p.size() != 2) throw fail("step parent must be [step, premise]");
        step.parent = PremiseRef{p[0], p[1]};
      }
      m.steps.push_back(std::move(step));
    }
    m.atoms = meta.at("atoms").get<std::map<std::string, std::string>>();
    auto fact = factuality_from_name(meta.at("factuality").get<std::string>());
    if (!fact) throw fail("unknown factuality tag");
    m.factuality = *fact;
    m.seed = meta.at("seed").get<std::uint64_t>();
    m.instance_index = meta.at("instance_index").get<std::uint64_t>();
    m.template_checksum = meta.at("template_checksum").get<std::string>();
    m.bank_checksum = meta.at("bank_checksum").get<std::string>();
    m.generator = meta.at("generator").get<std::string>();
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw fail(std::string("schema error: ") + e.what());
  }
}

void write_instances(const std::string& path, std::span<const Instance> instances) {
  std::string out;
  for (const auto& inst : instances) {
    out += instance_to_json_line(inst);
    out += '\n';
  }
  write_file_atomic(path, out);
}

std::vector<Instance> read_instances(const std::string& path) {
  std::string text = read_file(path);
  std::vector<Instance> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(instance_from_json_line(line, line_no));
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
  }
  return out;
}

void write_dataset(const DatasetSplit& split, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create directory '" + dir + "'");
  auto base = std::filesystem::path(dir);
  write_instances((base / "train.jsonl").string(), split.train);
  write_instances((base / "validation.jsonl").string(), split.validation);
  write_instances((base / "test.jsonl").string(), split.test);
}

DatasetSplit read_dataset(const std::string& dir) {
  auto base = std::filesystem::path(dir);
  DatasetSplit split;
  split.train = read_instances((base / "train.jsonl").string());
  split.validation = read_instances((base / "validation.jsonl").string());
  split.test = read_instances((base / "test.jsonl").string());
  return split;
}

// --- statistics ----------------------------------------------------------------

CorpusStats corpus_stats(std::span<const Instance> instances) {
  CorpusStats stats;
  std::vector<std::string> texts;
  for (const auto& inst : instances) {
    ++stats.instances;
    texts.insert(texts.end(), inst.paragraph.begin(), inst.paragraph.end());
    texts.push_back(inst.statement);
    ++stats.by_depth[inst.meta.depth];
    ++stats.by_label[inst.label];
    ++stats.by_root_form[inst.meta.root_form];
    ++stats.by_factuality[inst.meta.factuality];
  }
  stats.counts = count_text(texts);
  if (stats.counts.words > 0) stats.fk_grade = flesch_kincaid_grade(texts);
  stats.vocabulary = vocabulary_size(texts);
  return stats;
}

std::string corpus_stats_json(const CorpusStats& stats) {
  ojson j;
  j["instances"] = stats.instances;
  j["sentences"] = stats.counts.sentences;
  j["words"] = stats.counts.words;
  j["syllables"] = stats.counts.syllables;
  j["fk_grade"] = std::round(stats.fk_grade * 100.0) / 100.0;
  j["vocabulary"] = stats.vocabulary;
  auto& depth = j["depth_histogram"] = ojson::object();
  for (const auto& [d, n] : stats.by_depth) depth[std::to_string(d)] = n;
  auto& label = j["label_histogram"] = ojson::object();
  for (const auto& [l, n] : stats.by_label) label[std::string(label_name(l))] = n;
  auto& forms = j["root_form_histogram"] = ojson::object();
  for (const auto& [f, n] : stats.by_root_form) forms[f] = n;
  auto& fact = j["factuality_histogram"] = ojson::object();
  for (const auto& [f, n] : stats.by_factuality) fact[std::string(factuality_name(f))] = n;
  return j.dump(2);
}

// --- verification ------------------------------------------------------------

namespace {

std::optional<std::string> check_instance(const Instance& inst, const OracleOptions& oracle) {
  const InstanceMeta& m = inst.meta;
  std::vector<Formula> premises;
  for (const auto& p : m.premises) premises.push_back(parse_formula(p));
  Formula query = parse_formula(m.query);
  if (premises.size() != inst.paragraph.size()) return "paragraph and symbolic premise counts differ";

  Label oracle_label = label_for(consistent_with(premises, query, oracle));
  if (oracle_label != inst.label) {
    return "stored label " + std::string(label_name(inst.label)) + " but oracle gives " +
           std::string(label_name(oracle_label));
  }
  if (inst.label == Label::kUncertain) {
    for (AtomId a : query.atoms()) {
      for (const auto& p : premises) {
        if (p.mentions(a)) return "uncertain query atom appears in a premise";
      }
    }
  }

  ArgumentStructure s;
  s.final_conclusion = parse_formula(m.conclusion);
  for (const auto& step : m.steps) {
    auto form = form_from_id(step.form);
    if (!form) return "unknown argument form '" + step.form + "'";
    InferenceStep parsed{*form, {}, parse_formula(step.conclusion)};
    for (const auto& p : step.premises) parsed.premises.push_back(parse_formula(p));
    s.steps.push_back(std::move(parsed));
    s.parent.push_back(step.parent);
  }
  if (!structure_is_well_formed(s, oracle)) return "stored derivation is not well formed";
  if (measure_depth(s) != m.depth) return "stored depth does not match the derivation";
  auto leaves = s.leaf_premises();
  auto sorted = [](std::vector<Formula> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(leaves) != sorted(premises)) return "paragraph premises are not the derivation's leaves";
  return std::nullopt;
}

}  // namespace

VerifyReport verify_instances(std::span<const Instance> instances, const OracleOptions& oracle) {
  VerifyReport report;
  for (const auto& inst : instances) {
    ++report.checked;
    std::optional<std::string> problem;
    try {
      problem = check_instance(inst, oracle);
    } catch (const Error& e) {
      problem = e.what();
    }
    if (problem) {
      report.issues.push_back({inst.id, *problem});
    } else {
      ++report.verified;
    }
  }
  return report;
}

}  // namespace logicbench
