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

#include "sarc/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/basic_file_sink.h>
#include <spdlog/sinks/ostream_sink.h>
#include <yaml-cpp/yaml.h>

#include <filesystem>
#include <optional>
#include <unordered_set>

#include "sarc/config.hpp"
#include "sarc/csv.hpp"
#include "sarc/error.hpp"
#include "sarc/io.hpp"
#include "sarc/log.hpp"
#include "sarc/tasks.hpp"
#include "sarc/text.hpp"

namespace sarc {

namespace fs = std::filesystem;

namespace {

// Raw removal count implied by the published merge (20337 rows in, 19986
// out). Reported next to the observed count, never enforced.
constexpr std::size_t kReferenceDuplicates = 351;

struct GlobalOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string output_dir;
  std::string log_level;
};

// Routes log records to `err` for the duration of a command.
class LogToStream {
 public:
  explicit LogToStream(std::ostream& err) : sink_(std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true)) {
    sink_->set_pattern("[%l] %v");
    log::set_stderr_enabled(false);
    log::add_sink(sink_);
  }
  ~LogToStream() {
    log::remove_sink(sink_);
    log::set_stderr_enabled(true);
  }

 private:
  spdlog::sink_ptr sink_;
};

class FileLog {
 public:
  explicit FileLog(const fs::path& path) : sink_(std::make_shared<spdlog::sinks::basic_file_sink_mt>(path.string(), true)) {
    sink_->set_pattern("[%l] %v");
    log::add_sink(sink_);
  }
  ~FileLog() { close(); }
  void close() {
    if (!sink_) return;
    sink_->flush();
    log::remove_sink(sink_);
    sink_.reset();
  }

 private:
  spdlog::sink_ptr sink_;
};

void apply_log_level(const std::string& level) {
  check_log_level(level);
  log::set_level(spdlog::level::from_str(level));
}

CorpusSource source_from_arg(const std::string& arg) {
  CorpusSource src;
  const auto eq = arg.find('=');
  if (eq == std::string::npos) {
    src.path = arg;
    return src;
  }
  try {
    src.source = parse_source(arg.substr(0, eq));
  } catch (const SpecError&) {
    throw ConfigError("unknown source '" + arg.substr(0, eq) + "' in '" + arg + "'");
  }
  src.path = arg.substr(eq + 1);
  return src;
}

std::string to_lower_ascii(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> read_eval_texts(const EvalInput& in) {
  if (!in.column) return io::read_lines(in.path);
  const auto table = csv::read_file(in.path, in.delimiter);
  const auto col = table.column(*in.column);
  if (!col) throw LoadError(in.path.string() + ": no column '" + *in.column + "'");
  std::vector<std::string> texts;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (*col >= table.rows[r].size()) throw ValidationError(r + 1, "missing column '" + *in.column + "'");
    texts.push_back(table.rows[r][*col]);
  }
  return texts;
}

std::vector<TextPair> read_eval_pairs(const EvalInput& in) {
  const auto table = csv::read_file(in.path, in.delimiter);
  const auto c0 = table.column(in.column_0), c1 = table.column(in.column_1);
  if (!c0 || !c1)
    throw LoadError(in.path.string() + ": needs columns '" + in.column_0 + "' and '" + in.column_1 + "'");
  std::vector<TextPair> pairs;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (std::max(*c0, *c1) >= row.size()) throw ValidationError(r + 1, "pair row has too few columns");
    pairs.emplace_back(row[*c0], row[*c1]);
  }
  return pairs;
}

std::string history_tsv(const TrainHistory& h) {
  std::string out = "epoch\ttrain_loss\tval_loss\tval_f1_positive\n";
  auto opt = [](const std::optional<double>& v) { return v ? fmt::format("{:.6f}", *v) : std::string("NA"); };
  for (const auto& e : h.epochs)
    out += fmt::format("{}\t{:.6f}\t{}\t{}\n", e.epoch, e.train_loss, opt(e.val_loss), opt(e.val_f1_positive));
  if (h.best_epoch) out += fmt::format("# best_epoch {}\n", *h.best_epoch);
  return out;
}

void write_report(const fs::path& dir, const EvalReport& report) {
  io::write_text(dir / "report.txt", format_report(report));
  io::write_text(dir / "report.jsonl", report_json_line(report) + "\n");
}

void log_counts(const PoolCounts& c) {
  log::get().info("counts: ingested={} duplicates_removed={} rephrases_added={} augmented_added={} pool={}",
                  c.ingested, c.duplicates_removed, c.rephrases_added, c.augmented_added, c.pool);
  log::get().info("counts: train={} validation={} test={}", c.train, c.validation, c.test);
}

void execute_task_a(const ExperimentConfig& cfg, const fs::path& stage) {
  const auto eval = cfg.eval ? read_eval_texts(*cfg.eval) : std::vector<std::string>{};
  auto result = run_task_a(*cfg.task_a, eval);
  log_counts(result.counts);
  save_checkpoint(result.handle, stage / "checkpoint");
  io::write_text(stage / "history.tsv", history_tsv(result.history));
  write_report(stage, result.report);
  if (cfg.eval) io::write_text(stage / "submission.txt", format_task_a_submission(result.predictions));
  log::get().info("test split: f1_positive={:.4f} accuracy={:.4f}", result.report.f1_positive,
                  result.report.accuracy);
}

void execute_task_b(const ExperimentConfig& cfg, const fs::path& stage) {
  const auto eval = cfg.eval ? read_eval_texts(*cfg.eval) : std::vector<std::string>{};
  const auto suite = train_task_b_suite(*cfg.task_b);
  for (const auto& [label, run] : suite.runs) {
    const std::string name(category_name(label));
    save_checkpoint(run.handle, stage / "checkpoints" / name);
    io::write_text(stage / "history" / (name + ".tsv"), history_tsv(run.history));
    log::get().info("label '{}': positives={} negatives={} augmented={} test f1_positive={:.4f}", name, run.positives,
                    run.negatives, run.augmented, run.report.f1_positive);
  }
  write_report(stage, suite.summary);
  if (cfg.eval)
    io::write_text(stage / "submission.csv",
                   format_task_b_submission(predict_task_b(suite, eval, cfg.task_b->preprocess)));
  log::get().info("label-wise test macro_f1={:.4f}", *suite.summary.macro_f1);
}

void execute_task_c(const ExperimentConfig& cfg, const fs::path& stage) {
  const auto& c = *cfg.task_c;
  const auto pairs = c.eval ? read_eval_pairs(*c.eval) : std::vector<TextPair>{};
  auto result = run_task_a(c.train);
  log_counts(result.counts);
  save_checkpoint(result.handle, stage / "checkpoint");
  io::write_text(stage / "history.tsv", history_tsv(result.history));
  write_report(stage, result.report);
  if (c.eval) {
    const auto decisions = run_task_c_pairwise(result.handle, pairs, c.train.preprocess);
    io::write_text(stage / "submission.txt", format_task_c_submission(decisions));
    log::get().info("task C: {} pair decision(s) written", decisions.size());
  }
}

// Runs the experiment in output_dir/.partial, then promotes the files into
// output_dir; on failure the partial outputs are kept under output_dir/failed.
int cmd_run(const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  if (g.config.empty()) throw ConfigError("run needs --config");
  auto cfg = load_experiment(g.config);
  if (g.seed) override_seed(cfg, *g.seed);
  if (!g.output_dir.empty()) cfg.output_dir = g.output_dir;
  if (!g.log_level.empty()) cfg.log_level = g.log_level;
  apply_log_level(cfg.log_level);

  const fs::path out_dir = cfg.output_dir;
  const fs::path stage = out_dir / ".partial";
  fs::remove_all(stage);
  fs::create_directories(stage);
  FileLog run_log(stage / "run.log");
  log::get().info("run: task {} seed {} output_dir {}", task_name(cfg.task), cfg.seed, out_dir.string());
  try {
    switch (cfg.task) {
      case TaskKind::kA:
        execute_task_a(cfg, stage);
        break;
      case TaskKind::kB:
        execute_task_b(cfg, stage);
        break;
      case TaskKind::kC:
        execute_task_c(cfg, stage);
        break;
    }
  } catch (const std::exception& e) {
    log::get().error("{}", e.what());
    run_log.close();
    const fs::path failed = out_dir / "failed";
    fs::remove_all(failed);
    fs::rename(stage, failed);
    err << "partial outputs kept in " << failed.string() << "\n";
    return 1;
  }
  log::get().info("run: finished");
  run_log.close();
  for (const auto& entry : fs::directory_iterator(stage)) {
    const auto target = out_dir / entry.path().filename();
    fs::remove_all(target);
    fs::rename(entry.path(), target);
  }
  fs::remove_all(stage);
  fs::remove_all(out_dir / "failed");
  out << "run complete: " << out_dir.string() << "\n";
  return 0;
}

int cmd_stats(const std::string& path, const std::string& source, std::ostream& out) {
  CorpusSource src;
  src.path = path;
  try {
    src.source = parse_source(source);
  } catch (const SpecError&) {
    throw ConfigError("unknown --source '" + source + "'");
  }
  const auto corpus = load_source(src);
  for (const auto& [label, count] : stats_rows(label_stats(corpus))) out << label << '\t' << count << '\n';
  return 0;
}

PreprocessConfig preprocess_config_from(const std::string& config_path) {
  if (config_path.empty()) return PreprocessConfig{};
  const fs::path path(config_path);
  std::string text;
  try {
    text = io::read_text(path);
  } catch (const Error& e) {
    throw ConfigError(std::string("cannot read config: ") + e.what());
  }
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("malformed YAML: ") + e.what());
  }
  if (root.IsMap() && root["task"]) {
    const auto cfg = parse_experiment(text, path.parent_path());
    if (cfg.task_a) return cfg.task_a->preprocess;
    if (cfg.task_b) return cfg.task_b->preprocess;
    return cfg.task_c->train.preprocess;
  }
  if (root.IsMap() && root["preprocess"]) return parse_preprocess_config(YAML::Dump(root["preprocess"]), path.parent_path());
  return parse_preprocess_config(text, path.parent_path());
}

int cmd_preprocess(const GlobalOptions& g, const std::string& input, const std::string& output, std::ostream& out) {
  const auto pp = preprocess_config_from(g.config);
  const auto lines = io::read_lines(input);
  const auto cleaned = preprocess_all(lines, pp);
  io::write_lines(output, cleaned);
  out << cleaned.size() << " line(s) written to " << output << "\n";
  return 0;
}

struct AugmentArgs {
  std::string input;
  std::string output;
  std::string source = "isarcasm";
  std::string label;
  bool all = false;
  AugmentConfig config;
};

int cmd_augment(const GlobalOptions& g, AugmentArgs a, std::ostream& out) {
  if (g.seed) a.config.seed = *g.seed;
  validate(a.config);
  CorpusSource src;
  src.path = a.input;
  src.source = parse_source(a.source);
  const auto corpus = load_source(src);
  std::optional<Category> label;
  if (!a.label.empty()) {
    try {
      label = parse_category(a.label);
    } catch (const SpecError&) {
      throw ConfigError("unknown --label '" + a.label + "'");
    }
  }
  Corpus inputs{corpus.name, {}};
  for (const auto& inst : corpus.instances)
    if (a.all || label || inst.sarcastic == true) inputs.instances.push_back(inst);
  const auto masker = resolve_masker(a.config.masker_id, &corpus);
  const auto synthetic = augment_corpus(inputs, label, a.config, *masker);
  write_jsonl(synthetic, a.output);
  out << synthetic.size() << " variant(s) from " << inputs.size() << " input(s) written to " << a.output << "\n";
  return 0;
}

std::vector<bool> read_binary_column(const fs::path& path, const char* what) {
  std::vector<bool> out;
  const auto lines = io::read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto v = text::trim(lines[i]);
    if (v == "1")
      out.push_back(true);
    else if (v == "0")
      out.push_back(false);
    else
      throw ValidationError(i + 1, std::string(what) + " value '" + v + "' is not 0 or 1");
  }
  return out;
}

std::vector<bool> read_task_a_labels(const fs::path& path, const char* what) {
  if (path.extension() != ".csv") return read_binary_column(path, what);
  const auto corpus = load_isarcasm(path);
  std::vector<bool> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!corpus.instances[i].sarcastic) throw ValidationError(i + 1, std::string(what) + " row is unlabeled");
    out.push_back(*corpus.instances[i].sarcastic);
  }
  return out;
}

std::vector<MultiLabelPrediction> read_task_b_flags(const fs::path& path, const char* what) {
  std::vector<MultiLabelPrediction> out;
  if (path.extension() == ".csv") {
    const auto table = csv::read_file(path);
    // A submission file has exactly the six category names as its header.
    if (table.header.size() != kNumCategories || table.column("tweet")) {
      const auto corpus = load_isarcasm(path);
      for (const auto& inst : corpus.instances) out.push_back({inst.category_flags});
      return out;
    }
  }
  const auto lines = io::read_lines(path);
  if (lines.empty()) return out;
  std::array<std::size_t, kNumCategories> order{};
  for (std::size_t k = 0; k < kNumCategories; ++k) order[k] = k;
  std::size_t first = 0;
  const auto head = csv::parse_records(lines[0]);
  if (!head.empty() && !head[0].empty() && head[0][0] != "0" && head[0][0] != "1") {
    if (head[0].size() != kNumCategories)
      throw ValidationError(0, std::string(what) + " header must list the six category names");
    for (std::size_t col = 0; col < kNumCategories; ++col) {
      try {
        order[static_cast<std::size_t>(parse_category(text::trim(head[0][col])))] = col;
      } catch (const SpecError& e) {
        throw ValidationError(0, std::string(what) + " header: " + e.what());
      }
    }
    first = 1;
  }
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto rec = csv::parse_records(lines[i]);
    if (rec.empty() || rec[0].size() != kNumCategories)
      throw ValidationError(i + 1 - first, std::string(what) + " row needs six 0/1 flags");
    MultiLabelPrediction p;
    for (std::size_t k = 0; k < kNumCategories; ++k) {
      const auto v = text::trim(rec[0][order[k]]);
      if (v != "0" && v != "1") throw ValidationError(i + 1 - first, std::string(what) + " flag '" + v + "' is not 0 or 1");
      p.flags[k] = v == "1";
    }
    out.push_back(p);
  }
  return out;
}

template <typename T>
void check_rows(const std::vector<T>& gold, const std::vector<T>& pred) {
  if (gold.size() != pred.size())
    throw MetricError(fmt::format("row count mismatch: gold has {} row(s), predictions have {}", gold.size(),
                                  pred.size()));
}

int cmd_evaluate(const std::string& gold, const std::string& pred, const std::string& task,
                 const std::vector<double>& per_class, std::ostream& out) {
  const auto t = to_lower_ascii(task);
  if (!per_class.empty()) {
    if (t != "b") throw ConfigError("--per-class-f1 applies to task B only");
    EvalReport r;
    r.per_class_f1 = per_class;
    r.macro_f1 = macro_f1(per_class);
    r.f1 = *r.macro_f1;
    out << fmt::format("macro_f1: {:.4f}\n", *r.macro_f1);
    for (std::size_t i = 0; i < per_class.size(); ++i) out << fmt::format("per_class_f1[{}]: {:.4f}\n", i, per_class[i]);
    return 0;
  }
  if (gold.empty() || pred.empty()) throw ConfigError("evaluate needs GOLD and PREDICTIONS files");
  EvalReport report;
  if (t == "a") {
    const auto g = read_task_a_labels(gold, "gold");
    const auto p = read_binary_column(pred, "prediction");
    check_rows(g, p);
    report = evaluate_task_a(g, p);
  } else if (t == "b") {
    const auto g = read_task_b_flags(gold, "gold");
    const auto p = read_task_b_flags(pred, "prediction");
    check_rows(g, p);
    report = evaluate_task_b(g, p);
  } else if (t == "c") {
    const auto g = read_binary_column(gold, "gold");
    const auto p = read_binary_column(pred, "prediction");
    check_rows(g, p);
    std::vector<int> truth;
    std::vector<PairDecision> decisions;
    for (std::size_t i = 0; i < g.size(); ++i) {
      truth.push_back(g[i] ? 1 : 0);
      decisions.push_back({p[i] ? 1 : 0, 0.0, 0.0});
    }
    report = evaluate_task_c(truth, decisions);
  } else {
    throw ConfigError("--task must be A, B or C");
  }
  out << format_report(report);
  return 0;
}

std::vector<CorpusSource> export_sources(const GlobalOptions& g, const std::vector<std::string>& inputs) {
  std::vector<CorpusSource> sources;
  for (const auto& arg : inputs) sources.push_back(source_from_arg(arg));
  if (!sources.empty()) return sources;
  if (g.config.empty()) throw ConfigError("export corpus needs --input or a --config with sources");
  const auto cfg = load_experiment(g.config);
  if (cfg.task_a) return cfg.task_a->sources;
  if (cfg.task_b) return cfg.task_b->sources;
  return cfg.task_c->train.sources;
}

int cmd_export_corpus(const GlobalOptions& g, const std::vector<std::string>& inputs, const std::string& output,
                      std::ostream& out) {
  std::vector<Corpus> corpora;
  std::size_t ingested = 0;
  for (const auto& src : export_sources(g, inputs)) {
    corpora.push_back(load_source(src));
    log::get().info("export: {} ({}) {} instance(s)", src.path.string(), source_name(src.source),
                    corpora.back().size());
    ingested += corpora.back().size();
  }
  const auto merged = merge_dedup(corpora);
  std::unordered_set<std::string> keys;
  std::size_t remaining_duplicates = 0;
  for (const auto& inst : merged.instances) remaining_duplicates += !keys.insert(text::dedup_key(inst.text)).second;
  const std::size_t removed = ingested - merged.size();
  log::get().info("dedup audit: {} ingested, {} duplicate(s) removed, {} kept; reference removal count {} ({})",
                  ingested, removed, merged.size(), kReferenceDuplicates,
                  removed == kReferenceDuplicates ? "matches" : "differs");
  write_jsonl(merged, output);
  out << fmt::format("ingested\t{}\nremoved_duplicates\t{}\nkept\t{}\nremaining_duplicate_keys\t{}\n", ingested,
                     removed, merged.size(), remaining_duplicates);
  return remaining_duplicates == 0 ? 0 : 1;
}

int cmd_export_predictions(const std::string& checkpoint, const std::string& input, const std::string& output,
                           const GlobalOptions& g, double threshold, bool scores, std::ostream& out) {
  const auto handle = load_checkpoint(checkpoint);
  const auto pp = preprocess_config_from(g.config);
  const auto texts = io::read_lines(input);
  const auto s = predict_scores(handle, texts, pp);
  std::string body;
  if (scores) {
    for (double v : s) body += fmt::format("{:.6f}\n", v);
  } else {
    body = format_task_a_submission(threshold_scores(s, threshold));
  }
  io::write_text(output, body);
  out << texts.size() << " prediction(s) written to " << output << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intended-sarcasm detection pipeline", "sarcpipe"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--config", g.config, "Experiment configuration (YAML)");
  app.add_option("--seed", g.seed, "Override every seed in the configuration");
  app.add_option("--output-dir", g.output_dir, "Override the configured output directory");
  app.add_option("--log-level", g.log_level, "trace, debug, info, warn, error or off");

  std::string stats_path, stats_source = "isarcasm";
  auto* stats = app.add_subcommand("stats", "Label-combination counts of a corpus");
  stats->add_option("corpus", stats_path, "Corpus file")->required();
  stats->add_option("--source", stats_source, "Source layout of the file")->capture_default_str();

  std::string pp_in, pp_out;
  auto* prep = app.add_subcommand("preprocess", "Preprocess a file of texts, one per line");
  prep->add_option("input", pp_in)->required();
  prep->add_option("output", pp_out)->required();

  AugmentArgs aug;
  auto* augment = app.add_subcommand("augment", "Generate word-replacement variants of a corpus");
  augment->add_option("input", aug.input)->required();
  augment->add_option("output", aug.output, "JSON-lines output of the synthetic instances")->required();
  augment->add_option("--source", aug.source)->capture_default_str();
  augment->add_option("--label", aug.label, "Only augment sarcastic instances with this category");
  augment->add_flag("--all", aug.all, "Augment every instance, not only sarcastic ones");
  augment->add_option("--variants", aug.config.variants_per_input)->capture_default_str();
  augment->add_option("--fraction", aug.config.replace_fraction)->capture_default_str();
  augment->add_option("--masker", aug.config.masker_id)->capture_default_str();
  augment->add_option("--top-k", aug.config.top_k)->capture_default_str();

  auto* run = app.add_subcommand("run", "Run the configured experiment end to end");

  std::string ev_gold, ev_pred, ev_task = "A";
  std::vector<double> ev_per_class;
  auto* evaluate = app.add_subcommand("evaluate", "Score predictions against gold labels");
  evaluate->add_option("gold", ev_gold);
  evaluate->add_option("predictions", ev_pred);
  evaluate->add_option("--task", ev_task)->capture_default_str();
  evaluate->add_option("--per-class-f1", ev_per_class, "Task B: average given per-label F1 values")->delimiter(',');

  auto* exp = app.add_subcommand("export", "Export a merged corpus or model predictions");
  exp->require_subcommand(1);
  std::vector<std::string> ex_inputs;
  std::string ex_out;
  auto* ex_corpus = exp->add_subcommand("corpus", "Merge and deduplicate sources into a JSON-lines file");
  ex_corpus->add_option("output", ex_out)->required();
  ex_corpus->add_option("--input", ex_inputs, "[SOURCE=]PATH; defaults to the configured sources");
  std::string ex_ckpt, ex_texts, ex_pred_out;
  double ex_threshold = 0.5;
  bool ex_scores = false;
  auto* ex_pred = exp->add_subcommand("predictions", "Predict labels for a file of texts from a checkpoint");
  ex_pred->add_option("--checkpoint", ex_ckpt)->required();
  ex_pred->add_option("--input", ex_texts)->required();
  ex_pred->add_option("--output", ex_pred_out)->required();
  ex_pred->add_option("--threshold", ex_threshold)->capture_default_str();
  ex_pred->add_flag("--scores", ex_scores, "Write positive-class probabilities instead of labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  LogToStream route(err);
  // The level is process-wide; restore it for callers that embed the CLI.
  struct LevelGuard {
    spdlog::level::level_enum saved = log::get().level();
    ~LevelGuard() { log::set_level(saved); }
  } level_guard;
  try {
    if (!g.log_level.empty()) apply_log_level(g.log_level);
    if (*stats) return cmd_stats(stats_path, stats_source, out);
    if (*prep) return cmd_preprocess(g, pp_in, pp_out, out);
    if (*augment) return cmd_augment(g, aug, out);
    if (*run) return cmd_run(g, out, err);
    if (*evaluate) return cmd_evaluate(ev_gold, ev_pred, ev_task, ev_per_class, out);
    if (*ex_corpus) return cmd_export_corpus(g, ex_inputs, ex_out, out);
    if (*ex_pred) return cmd_export_predictions(ex_ckpt, ex_texts, ex_pred_out, g, ex_threshold, ex_scores, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sarc
