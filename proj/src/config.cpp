// Copyright 2026 The sarcpipe Authors.
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

#include "sarc/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <initializer_list>

#include "sarc/error.hpp"
#include "sarc/io.hpp"

namespace sarc {

namespace {

// A mapping node plus its dotted key path, for error messages.
class Section {
 public:
  Section(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) throw ConfigError(where() + "must be a mapping");
  }

  void allow(std::initializer_list<std::string_view> keys) const {
    if (!node_ || node_.IsNull()) return;
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (std::find(keys.begin(), keys.end(), key) == keys.end())
        throw ConfigError("unknown key '" + join(key) + "'");
    }
  }

  bool has(std::string_view key) const { return node_ && node_.IsMap() && node_[std::string(key)]; }
  YAML::Node raw(std::string_view key) const { return node_[std::string(key)]; }
  std::string join(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }
  Section child(std::string_view key) const { return Section(raw(key), join(key)); }

  std::string str(std::string_view key, std::string fallback) const {
    if (!has(key)) return fallback;
    return scalar<std::string>(key, "a string");
  }
  bool boolean(std::string_view key, bool fallback) const {
    if (!has(key)) return fallback;
    return scalar<bool>(key, "true or false");
  }
  double real(std::string_view key, double fallback) const {
    if (!has(key)) return fallback;
    return scalar<double>(key, "a number");
  }
  std::uint64_t count(std::string_view key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const auto s = scalar<std::string>(key, "a non-negative integer");
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError(join(key) + ": expected a non-negative integer, got '" + s + "'");
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ConfigError(join(key) + ": integer out of range");
    }
  }
  char delimiter(std::string_view key, char fallback) const {
    if (!has(key)) return fallback;
    const auto s = scalar<std::string>(key, "a single character");
    if (s == "\\t" || s == "tab") return '\t';
    if (s.size() != 1) throw ConfigError(join(key) + ": expected a single character, got '" + s + "'");
    return s[0];
  }
  std::vector<std::string> strings(std::string_view key) const {
    const auto n = raw(key);
    if (!n.IsSequence()) throw ConfigError(join(key) + ": expected a list");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (!n[i].IsScalar()) throw ConfigError(join(key) + "[" + std::to_string(i) + "]: expected a string");
      out.push_back(n[i].as<std::string>());
    }
    return out;
  }

  const YAML::Node& node() const { return node_; }
  const std::string& path() const { return path_; }

 private:
  std::string where() const { return path_.empty() ? std::string() : path_ + ": "; }

  template <typename T>
  T scalar(std::string_view key, const char* expected) const {
    const auto n = raw(key);
    if (!n.IsScalar()) throw ConfigError(join(key) + ": expected " + expected);
    try {
      return n.as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError(join(key) + ": expected " + expected + ", got '" + n.Scalar() + "'");
    }
  }

  YAML::Node node_;
  std::string path_;
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) return base / path;
  return path;
}

// Re-raise module validation errors with the section path prefixed.
template <typename F>
void checked(const std::string& path, F&& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw ConfigError(path + ": " + msg);
  } catch (const SpecError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

PreprocessConfig parse_preprocess(const Section& s, const std::filesystem::path& base) {
  s.allow({"case", "stopwords", "clean", "stopword_list", "order", "keep_uppercase_stopwords"});
  PreprocessConfig pp;
  pp.enable_case = s.boolean("case", true);
  pp.enable_stopwords = s.boolean("stopwords", true);
  pp.enable_clean = s.boolean("clean", true);
  pp.keep_uppercase_stopwords = s.boolean("keep_uppercase_stopwords", true);
  const auto list = s.str("stopword_list", "english-v1");
  if (list != "english-v1") {
    try {
      pp.stopword_list = load_stopwords(resolve(base, list));
    } catch (const Error& e) {
      throw ConfigError(s.join("stopword_list") + ": " + e.what());
    }
  }
  if (s.has("order")) pp.step_order = s.strings("order");
  checked(s.path(), [&] { validate(pp); });
  return pp;
}

BinaryAdapter parse_adapter(const Section& s, Source source) {
  s.allow({"text", "label", "id", "delimiter", "labels"});
  BinaryAdapter a = default_adapter(source);
  a.text_column = s.str("text", a.text_column);
  a.label_column = s.str("label", a.label_column);
  if (s.has("id")) a.id_column = s.str("id", "");
  a.delimiter = s.delimiter("delimiter", a.delimiter);
  if (s.has("labels")) {
    const Section labels = s.child("labels");
    a.label_map.clear();
    for (const auto& kv : labels.node()) a.label_map[kv.first.as<std::string>()] = labels.boolean(kv.first.as<std::string>(), false);
  }
  return a;
}

IsarcasmColumns parse_isarcasm_columns(const Section& s) {
  s.allow({"text", "sarcastic", "rephrase", "delimiter", "sarcasm", "irony", "satire", "understatement",
           "overstatement", "rhetorical_question"});
  IsarcasmColumns c;
  c.text = s.str("text", c.text);
  c.sarcastic = s.str("sarcastic", c.sarcastic);
  c.rephrase = s.str("rephrase", c.rephrase);
  c.delimiter = s.delimiter("delimiter", c.delimiter);
  for (std::size_t k = 0; k < kNumCategories; ++k)
    c.categories[k] = s.str(category_name(kAllCategories[k]), c.categories[k]);
  return c;
}

std::vector<CorpusSource> parse_sources(const Section& parent, const std::filesystem::path& base) {
  const auto key = parent.join("sources");
  const auto n = parent.raw("sources");
  if (!n || !n.IsSequence() || n.size() == 0) throw ConfigError(key + ": expected a non-empty list of corpora");
  std::vector<CorpusSource> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const Section s(n[i], key + "[" + std::to_string(i) + "]");
    s.allow({"path", "source", "row_policy", "columns"});
    if (!s.has("path")) throw ConfigError(s.join("path") + ": required");
    CorpusSource src;
    src.path = resolve(base, s.str("path", ""));
    const auto source = s.str("source", "isarcasm");
    try {
      src.source = parse_source(source);
    } catch (const Error&) {
      throw ConfigError(s.join("source") + ": unknown source '" + source + "'");
    }
    const auto policy = s.str("row_policy", "strict");
    if (policy == "strict")
      src.policy = RowPolicy::kStrict;
    else if (policy == "warn_and_drop")
      src.policy = RowPolicy::kWarnAndDrop;
    else
      throw ConfigError(s.join("row_policy") + ": expected strict or warn_and_drop, got '" + policy + "'");
    if (s.has("columns")) {
      if (src.source == Source::kIsarcasm)
        src.columns = parse_isarcasm_columns(s.child("columns"));
      else
        src.adapter = parse_adapter(s.child("columns"), src.source);
    }
    out.push_back(std::move(src));
  }
  return out;
}

AugmentConfig parse_augment(const Section& s, std::uint64_t seed) {
  s.allow({"variants_per_input", "replace_fraction", "masker", "seed", "top_k", "max_resamples"});
  AugmentConfig a;
  a.variants_per_input = s.count("variants_per_input", a.variants_per_input);
  a.replace_fraction = s.real("replace_fraction", a.replace_fraction);
  a.masker_id = s.str("masker", a.masker_id);
  a.seed = s.count("seed", seed);
  a.top_k = s.count("top_k", a.top_k);
  a.max_resamples = s.count("max_resamples", a.max_resamples);
  checked(s.path(), [&] { validate(a); });
  return a;
}

EncoderSpec parse_encoder(const Section& s) {
  s.allow({"id", "num_classes", "freeze_policy"});
  EncoderSpec e;
  e.encoder_id = s.str("id", e.encoder_id);
  try {
    lookup_encoder(e.encoder_id);
  } catch (const RegistryError& err) {
    throw ConfigError(s.join("id") + ": " + err.what());
  }
  e.num_classes = s.count("num_classes", e.num_classes);
  checked(s.join("freeze_policy"),
          [&] { e.freeze_policy = parse_freeze_policy(s.str("freeze_policy", "HEAD_AND_LAST_LAYERS")); });
  return e;
}

HyperParams parse_hparams(const Section& s, std::uint64_t seed) {
  s.allow({"preset", "learning_rate", "max_seq_len", "batch_size", "epochs", "seed", "weight_decay",
           "warmup_fraction"});
  HyperParams h;
  if (s.has("preset")) checked(s.join("preset"), [&] { h = hyperparams_preset(s.str("preset", "")); });
  h.learning_rate = s.real("learning_rate", h.learning_rate);
  h.max_seq_len = s.count("max_seq_len", h.max_seq_len);
  h.batch_size = s.count("batch_size", h.batch_size);
  h.epochs = s.count("epochs", h.epochs);
  h.seed = s.count("seed", seed);
  h.weight_decay = s.real("weight_decay", h.weight_decay);
  h.warmup_fraction = s.real("warmup_fraction", h.warmup_fraction);
  checked(s.path(), [&] { validate(h); });
  return h;
}

SplitSpec parse_split(const Section& s, std::uint64_t seed) {
  s.allow({"ratios", "seed", "stratify_on"});
  SplitSpec sp;
  if (s.has("ratios")) {
    const auto n = s.raw("ratios");
    if (!n.IsSequence() || n.size() != 3) throw ConfigError(s.join("ratios") + ": expected a list of three numbers");
    for (std::size_t i = 0; i < 3; ++i) {
      try {
        sp.ratios[i] = n[i].as<double>();
      } catch (const YAML::Exception&) {
        throw ConfigError(s.join("ratios") + "[" + std::to_string(i) + "]: expected a number");
      }
    }
  }
  sp.seed = s.count("seed", seed);
  sp.stratify_on = s.str("stratify_on", sp.stratify_on);
  checked(s.path(), [&] { validate(sp); });
  return sp;
}

EvalInput parse_eval(const Section& s, const std::filesystem::path& base, bool pairs) {
  if (pairs)
    s.allow({"path", "text_0", "text_1", "delimiter"});
  else
    s.allow({"path", "column", "delimiter"});
  if (!s.has("path")) throw ConfigError(s.join("path") + ": required");
  EvalInput e;
  e.path = resolve(base, s.str("path", ""));
  if (s.has("column")) e.column = s.str("column", "");
  e.column_0 = s.str("text_0", e.column_0);
  e.column_1 = s.str("text_1", e.column_1);
  e.delimiter = s.delimiter("delimiter", e.delimiter);
  return e;
}

// Keys shared by the task sections.
void allow_task_a_keys(const Section& s) {
  s.allow({"sources", "use_rephrases", "augment", "encoder", "hparams", "split", "preprocess", "eval"});
}

TaskAConfig parse_task_a(const Section& s, const std::filesystem::path& base, std::uint64_t seed) {
  TaskAConfig c;
  c.sources = parse_sources(s, base);
  c.use_rephrases = s.boolean("use_rephrases", true);
  if (s.has("augment") && !s.raw("augment").IsNull()) c.augment = parse_augment(s.child("augment"), seed);
  c.spec = parse_encoder(s.child("encoder"));
  c.hparams = parse_hparams(s.child("hparams"), seed);
  c.split = parse_split(s.child("split"), seed);
  c.preprocess = parse_preprocess(s.child("preprocess"), base);
  return c;
}

TaskBConfig parse_task_b(const Section& s, const std::filesystem::path& base, std::uint64_t seed) {
  s.allow({"sources", "labels", "augment", "include_auxiliary", "concurrent", "encoder", "hparams", "split",
           "preprocess", "eval"});
  TaskBConfig c;
  c.sources = parse_sources(s, base);
  if (s.has("labels")) c.labels = s.strings("labels");
  const Section aug = s.child("augment");
  aug.allow({"default", "per_label"});
  c.default_augment = parse_augment(aug.child("default"), seed);
  if (aug.has("per_label")) {
    const Section per = aug.child("per_label");
    for (const auto& kv : per.node()) {
      const auto name = kv.first.as<std::string>();
      if (kv.second.IsNull())
        c.augment_overrides[name] = std::nullopt;
      else
        c.augment_overrides[name] = parse_augment(per.child(name), seed);
    }
  }
  c.include_auxiliary = s.boolean("include_auxiliary", false);
  c.concurrent = s.boolean("concurrent", true);
  c.spec = parse_encoder(s.child("encoder"));
  c.hparams = parse_hparams(s.child("hparams"), seed);
  c.split = parse_split(s.child("split"), seed);
  c.preprocess = parse_preprocess(s.child("preprocess"), base);
  checked(s.path(), [&] { validate(c); });
  return c;
}

}  // namespace

std::string_view task_name(TaskKind t) {
  switch (t) {
    case TaskKind::kA:
      return "A";
    case TaskKind::kB:
      return "B";
    case TaskKind::kC:
      return "C";
  }
  return "?";
}

void check_log_level(std::string_view level) {
  for (std::string_view ok : {"trace", "debug", "info", "warn", "error", "off"})
    if (level == ok) return;
  throw ConfigError("log_level: expected one of trace, debug, info, warn, error, off; got '" + std::string(level) + "'");
}

ExperimentConfig parse_experiment(std::string_view yaml, const std::filesystem::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("malformed YAML: ") + e.what());
  }
  const Section s(root, "");
  s.allow({"task", "seed", "output_dir", "log_level", "task_a", "task_b", "task_c"});

  ExperimentConfig cfg;
  if (!s.has("task")) throw ConfigError("task: required (A, B or C)");
  const auto task = s.str("task", "");
  if (task == "A" || task == "a")
    cfg.task = TaskKind::kA;
  else if (task == "B" || task == "b")
    cfg.task = TaskKind::kB;
  else if (task == "C" || task == "c")
    cfg.task = TaskKind::kC;
  else
    throw ConfigError("task: expected A, B or C, got '" + task + "'");

  cfg.seed = s.count("seed", cfg.seed);
  cfg.output_dir = resolve(base_dir, s.str("output_dir", cfg.output_dir.string()));
  cfg.log_level = s.str("log_level", cfg.log_level);
  check_log_level(cfg.log_level);

  const std::array<std::string_view, 3> sections = {"task_a", "task_b", "task_c"};
  const std::string expected = "task_" + std::string(1, static_cast<char>(std::tolower(task[0])));
  for (auto sec : sections) {
    if (sec == expected) {
      if (!s.has(sec)) throw ConfigError(std::string(sec) + ": required when task is " + task);
    } else if (s.has(sec)) {
      throw ConfigError(std::string(sec) + ": present but task is " + task + "; exactly one task section is allowed");
    }
  }

  const Section body = s.child(expected);
  switch (cfg.task) {
    case TaskKind::kA:
      allow_task_a_keys(body);
      cfg.task_a = parse_task_a(body, base_dir, cfg.seed);
      if (body.has("eval")) cfg.eval = parse_eval(body.child("eval"), base_dir, false);
      break;
    case TaskKind::kB:
      cfg.task_b = parse_task_b(body, base_dir, cfg.seed);
      if (body.has("eval")) cfg.eval = parse_eval(body.child("eval"), base_dir, false);
      break;
    case TaskKind::kC: {
      allow_task_a_keys(body);
      TaskCConfig c{parse_task_a(body, base_dir, cfg.seed), std::nullopt};
      if (body.has("eval")) c.eval = parse_eval(body.child("eval"), base_dir, true);
      cfg.task_c = std::move(c);
      break;
    }
  }
  return cfg;
}

ExperimentConfig load_experiment(const std::filesystem::path& path) {
  std::string text;
  try {
    text = io::read_text(path);
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot read config: ") + e.what());
  }
  return parse_experiment(text, path.parent_path());
}

PreprocessConfig parse_preprocess_config(std::string_view yaml, const std::filesystem::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("malformed YAML: ") + e.what());
  }
  return parse_preprocess(Section(root, "preprocess"), base_dir);
}

void override_seed(ExperimentConfig& config, std::uint64_t seed) {
  config.seed = seed;
  auto apply_a = [&](TaskAConfig& a) {
    a.hparams.seed = seed;
    a.split.seed = seed;
    if (a.augment) a.augment->seed = seed;
  };
  if (config.task_a) apply_a(*config.task_a);
  if (config.task_c) apply_a(config.task_c->train);
  if (config.task_b) {
    auto& b = *config.task_b;
    b.hparams.seed = seed;
    b.split.seed = seed;
    b.default_augment.seed = seed;
    for (auto& [name, aug] : b.augment_overrides)
      if (aug) aug->seed = seed;
  }
}

}  // namespace sarc
