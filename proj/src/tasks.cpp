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

#include "sarc/tasks.hpp"

#include <fmt/format.h>

#include <exception>
#include <set>

#include "sarc/error.hpp"
#include "sarc/log.hpp"
#include "sarc/text.hpp"

namespace sarc {

namespace {

// Label-wise dataset sizes as originally reported. Two of them disagree with
// 867 + augmented; kept only to log the comparison.
constexpr std::array<std::size_t, kNumCategories> kReferenceLabelTotals = {
    867,   // sarcasm
    1332,  // irony
    942,   // satire
    98,    // understatement
    906,   // overstatement
    1170,  // rhetorical_question
};

struct StageLog {
  std::vector<std::string>& stages;
  void enter(std::string name, const std::string& detail) {
    log::get().info("stage {}: {}", name, detail);
    stages.push_back(std::move(name));
  }
};

std::vector<std::string> texts_of(const Corpus& c) {
  std::vector<std::string> out;
  out.reserve(c.size());
  for (const auto& inst : c.instances) out.push_back(inst.text);
  return out;
}

std::vector<bool> labels_of(const Corpus& c) {
  std::vector<bool> out;
  out.reserve(c.size());
  for (const auto& inst : c.instances) out.push_back(inst.sarcastic.value_or(false));
  return out;
}

Corpus sarcastic_official(const Corpus& corpus) {
  Corpus out{corpus.name + "/sarcastic", {}};
  for (const auto& inst : corpus.instances)
    if (inst.source == Source::kIsarcasm && inst.sarcastic == true) out.instances.push_back(inst);
  return out;
}

Corpus labeled_only(const Corpus& corpus) {
  Corpus out{corpus.name, {}};
  std::size_t dropped = 0;
  for (const auto& inst : corpus.instances) {
    if (inst.sarcastic)
      out.instances.push_back(inst);
    else
      ++dropped;
  }
  if (dropped) log::get().warn("dropped {} unlabeled instance(s) from the training pool", dropped);
  return out;
}

}  // namespace

Corpus load_source(const CorpusSource& src) {
  if (src.path.extension() == ".jsonl") return read_jsonl(src.path, src.policy);
  if (src.source == Source::kIsarcasm) return load_isarcasm(src.path, src.columns, src.policy);
  return load_binary_source(src.path, src.source, src.adapter ? *src.adapter : default_adapter(src.source),
                            src.policy);
}

void validate(const TaskAConfig& config) {
  if (config.sources.empty()) throw ConfigError("task_a.sources must list at least one corpus");
  if (config.augment) validate(*config.augment);
  validate(config.split);
  validate(config.preprocess);
  build_classifier(config.spec, config.hparams);
}

TaskAResult run_task_a(const TaskAConfig& config, const std::vector<Corpus>& corpora,
                       const std::vector<std::string>& eval_texts) {
  if (corpora.empty()) throw ConfigError("task_a.sources must list at least one corpus");
  if (config.augment) validate(*config.augment);
  validate(config.split);
  validate(config.preprocess);

  TaskAResult result{build_classifier(config.spec, config.hparams), {}, {}, {}, {}, {}, {}};
  StageLog stages{result.stages};
  auto& counts = result.counts;

  for (const auto& c : corpora) counts.ingested += c.size();
  stages.enter("ingest", fmt::format("{} corpora, {} instances", corpora.size(), counts.ingested));

  Corpus pool = merge_dedup(corpora);
  counts.duplicates_removed = counts.ingested - pool.size();
  stages.enter("merge/dedup",
               fmt::format("{} duplicate(s) removed, {} instances remain", counts.duplicates_removed, pool.size()));

  if (config.use_rephrases) {
    const std::size_t before = pool.size();
    pool = inject_rephrases(pool);
    counts.rephrases_added = pool.size() - before;
  }
  stages.enter("rephrase-inject", config.use_rephrases
                                      ? fmt::format("{} rephrase(s) added as non-sarcastic", counts.rephrases_added)
                                      : std::string("disabled"));

  if (config.augment) {
    const Corpus base = sarcastic_official(pool);
    const auto masker = resolve_masker(config.augment->masker_id, &pool);
    const Corpus synthetic = augment_corpus(base, std::nullopt, *config.augment, *masker, config.exec);
    const std::size_t before = pool.size();
    pool = merge_dedup({pool, synthetic});
    counts.augmented_added = pool.size() - before;
    stages.enter("augment", fmt::format("{} sarcastic input(s), {} variant(s) generated, {} added", base.size(),
                                        synthetic.size(), counts.augmented_added));
  } else {
    stages.enter("augment", "disabled");
  }

  pool = labeled_only(pool);
  counts.pool = pool.size();
  const Splits splits = stratified_split(pool, config.split);
  counts.train = splits.train.size();
  counts.validation = splits.validation.size();
  counts.test = splits.test.size();
  stages.enter("split", fmt::format("train {}, validation {}, test {} (seed {})", counts.train, counts.validation,
                                    counts.test, config.split.seed));
  if (splits.test.empty()) throw DatasetError("the test split is empty; the pool is too small to evaluate");

  stages.enter("preprocess-at-tokenize", fmt::format("encoder '{}', max_seq_len {}", config.spec.encoder_id,
                                                     config.hparams.max_seq_len));

  stages.enter("train", fmt::format("{} epoch(s), seed {}", config.hparams.epochs, config.hparams.seed));
  auto [trained, history] = fine_tune(result.handle, splits.train, splits.validation, config.preprocess, config.exec);
  result.handle = std::move(trained);
  result.history = std::move(history);

  stages.enter("predict", fmt::format("{} test text(s), {} evaluation text(s)", splits.test.size(), eval_texts.size()));
  const auto test_scores = predict_scores(result.handle, texts_of(splits.test), config.preprocess, config.exec);
  result.report = evaluate_task_a(labels_of(splits.test), threshold_scores(test_scores, 0.5));
  result.scores = predict_scores(result.handle, eval_texts, config.preprocess, config.exec);
  result.predictions = threshold_scores(result.scores, 0.5);
  return result;
}

TaskAResult run_task_a(const TaskAConfig& config, const std::vector<std::string>& eval_texts) {
  validate(config);
  std::vector<Corpus> corpora;
  for (const auto& src : config.sources) corpora.push_back(load_source(src));
  return run_task_a(config, corpora, eval_texts);
}

void validate(const TaskBConfig& config) {
  if (config.labels.size() != kNumCategories)
    throw ConfigError(fmt::format("task_b.labels must list exactly {} categories, got {}", kNumCategories,
                                  config.labels.size()));
  std::set<Category> seen;
  for (const auto& name : config.labels) {
    Category c{};
    try {
      c = parse_category(name);
    } catch (const Error&) {
      throw ConfigError("task_b.labels: unknown category '" + name + "'");
    }
    if (!seen.insert(c).second) throw ConfigError("task_b.labels: category '" + name + "' listed twice");
  }
  for (const auto& [name, aug] : config.augment_overrides) {
    try {
      parse_category(name);
    } catch (const Error&) {
      throw ConfigError("task_b.augment: unknown category '" + name + "'");
    }
    if (aug) validate(*aug);
  }
  validate(config.default_augment);
  validate(config.split);
  validate(config.preprocess);
  build_classifier(config.spec, config.hparams);
}

std::optional<AugmentConfig> label_augment(const TaskBConfig& config, Category label) {
  if (auto it = config.augment_overrides.find(std::string(category_name(label)));
      it != config.augment_overrides.end())
    return it->second;
  if (label == Category::kSarcasm) return std::nullopt;
  return config.default_augment;
}

namespace {

LabelRun train_label(const TaskBConfig& config, const Corpus& sarcastic, Category label) {
  const std::string name(category_name(label));
  LabelRun run{build_classifier(config.spec, config.hparams), {}, {}, {}, 0, 0, 0};
  Corpus synthetic{"augmented", {}};
  if (const auto aug = label_augment(config, label)) {
    const auto masker = resolve_masker(aug->masker_id, &sarcastic);
    // Nested parallel regions are serialized, so the suite-level threads do
    // not oversubscribe.
    synthetic = augment_corpus(sarcastic, label, *aug, *masker);
  }
  Corpus dataset;
  try {
    dataset = build_label_dataset(sarcastic, label, synthetic);
  } catch (const DatasetError& e) {
    throw DatasetError("task B label '" + name + "': " + e.what());
  }
  run.augmented = synthetic.size();
  for (const auto& inst : dataset.instances) (*inst.sarcastic ? run.positives : run.negatives) += 1;
  const std::size_t reference = kReferenceLabelTotals[static_cast<std::size_t>(label)];
  log::get().info("task B label '{}': {} instances = {} base + {} augmented ({} positive); reference total {}{}", name,
                  dataset.size(), sarcastic.size(), run.augmented, run.positives, reference,
                  dataset.size() == reference ? "" : " (differs)");

  const Splits splits = stratified_split(dataset, config.split);
  if (splits.test.empty()) throw DatasetError("task B label '" + name + "': the test split is empty");
  try {
    auto [handle, history] = fine_tune(run.handle, splits.train, splits.validation, config.preprocess);
    run.handle = std::move(handle);
    run.history = std::move(history);
  } catch (const TrainingError& e) {
    throw TrainingError("task B label '" + name + "': " + e.what());
  }
  const auto scores = predict_scores(run.handle, texts_of(splits.test), config.preprocess);
  const auto truth = labels_of(splits.test);
  const auto pred = threshold_scores(scores, 0.5);
  run.report = evaluate_task_a(truth, pred);
  run.test_counts = confusion(truth, pred);
  return run;
}

}  // namespace

TaskBSuite train_task_b_suite(const TaskBConfig& config, const Corpus& corpus) {
  validate(config);
  Corpus sarcastic{corpus.name + "/sarcastic", {}};
  for (const auto& inst : corpus.instances)
    if (inst.sarcastic == true && (config.include_auxiliary || inst.source == Source::kIsarcasm))
      sarcastic.instances.push_back(inst);
  if (sarcastic.empty()) throw DatasetError("task B needs sarcastic instances; the corpus has none");
  log::get().info("task B: {} sarcastic base instance(s)", sarcastic.size());

  std::array<std::optional<LabelRun>, kNumCategories> runs;
  std::array<std::exception_ptr, kNumCategories> errors;
  std::array<std::vector<log::Entry>, kNumCategories> logs;
  const auto n = static_cast<std::ptrdiff_t>(kNumCategories);
#pragma omp parallel for schedule(dynamic, 1) if (config.concurrent)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    log::Capture capture;
    try {
      runs[k] = train_label(config, sarcastic, kAllCategories[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
    logs[k] = capture.take();
  }
  for (const auto& l : logs) log::replay(l);
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  TaskBSuite suite;
  std::vector<double> per_class;
  ConfusionCounts micro;
  double p_sum = 0.0, r_sum = 0.0, acc_sum = 0.0;
  for (std::size_t k = 0; k < kNumCategories; ++k) {
    const auto& c = runs[k]->test_counts;
    const auto s = prf1(c);
    per_class.push_back(s.f1);
    p_sum += s.precision;
    r_sum += s.recall;
    acc_sum += accuracy(c);
    micro.tp += c.tp;
    micro.fp += c.fp;
    micro.tn += c.tn;
    micro.fn += c.fn;
    suite.summary.n += runs[k]->report.n;
    suite.runs.emplace(kAllCategories[k], std::move(*runs[k]));
  }
  auto& sum = suite.summary;
  sum.per_class_f1 = per_class;
  sum.macro_f1 = macro_f1(per_class);
  sum.f1 = *sum.macro_f1;
  sum.precision = p_sum / kNumCategories;
  sum.recall = r_sum / kNumCategories;
  sum.accuracy = acc_sum / kNumCategories;
  sum.f1_positive = prf1(micro).f1;
  return suite;
}

TaskBSuite train_task_b_suite(const TaskBConfig& config) {
  validate(config);
  if (config.sources.empty()) throw ConfigError("task_b.sources must list at least one corpus");
  std::vector<Corpus> corpora;
  for (const auto& src : config.sources) corpora.push_back(load_source(src));
  return train_task_b_suite(config, merge_dedup(corpora));
}

std::vector<MultiLabelPrediction> merge_task_b_predictions(const std::map<Category, std::vector<bool>>& per_label) {
  std::optional<std::size_t> length;
  for (auto c : kAllCategories) {
    auto it = per_label.find(c);
    if (it == per_label.end())
      throw MergeError("missing predictions for label '" + std::string(category_name(c)) + "'");
    if (length && *length != it->second.size())
      throw MergeError(fmt::format("label '{}' has {} predictions, expected {}", category_name(c), it->second.size(),
                                   *length));
    length = it->second.size();
  }
  std::vector<MultiLabelPrediction> out(*length);
  for (std::size_t k = 0; k < kNumCategories; ++k) {
    const auto& column = per_label.at(kAllCategories[k]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].flags[k] = column[i];
  }
  return out;
}

std::vector<MultiLabelPrediction> predict_task_b(const TaskBSuite& suite, const std::vector<std::string>& texts,
                                                 const PreprocessConfig& preprocess) {
  std::map<Category, std::vector<bool>> columns;
  for (const auto& [c, run] : suite.runs) columns[c] = predict_labels(run.handle, texts, preprocess);
  return merge_task_b_predictions(columns);
}

PairDecision decide_pair(double score_0, double score_1) {
  return PairDecision{score_0 >= score_1 ? 0 : 1, score_0, score_1};
}

std::vector<PairDecision> run_task_c_pairwise(const PairScorer& scorer, const std::vector<TextPair>& pairs) {
  std::vector<std::string> texts;
  texts.reserve(pairs.size() * 2);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (text::trim(pairs[i].first).empty()) throw ValidationError(i + 1, "text_0 of the pair is empty");
    if (text::trim(pairs[i].second).empty()) throw ValidationError(i + 1, "text_1 of the pair is empty");
    texts.push_back(pairs[i].first);
    texts.push_back(pairs[i].second);
  }
  const auto scores = scorer(texts);
  if (scores.size() != texts.size())
    throw MetricError(fmt::format("scorer returned {} scores for {} texts", scores.size(), texts.size()));
  std::vector<PairDecision> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) out.push_back(decide_pair(scores[2 * i], scores[2 * i + 1]));
  return out;
}

std::vector<PairDecision> run_task_c_pairwise(const ClassifierHandle& handle, const std::vector<TextPair>& pairs,
                                              const PreprocessConfig& preprocess) {
  return run_task_c_pairwise(
      [&](const std::vector<std::string>& texts) { return predict_scores(handle, texts, preprocess); }, pairs);
}

std::string format_task_a_submission(const std::vector<bool>& predictions) {
  std::string out;
  for (bool p : predictions) out += p ? "1\n" : "0\n";
  return out;
}

std::string format_task_b_submission(const std::vector<MultiLabelPrediction>& predictions) {
  std::string out;
  for (std::size_t k = 0; k < kNumCategories; ++k) {
    if (k) out += ',';
    out += category_name(kAllCategories[k]);
  }
  out += '\n';
  for (const auto& p : predictions) {
    for (std::size_t k = 0; k < kNumCategories; ++k) {
      if (k) out += ',';
      out += p.flags[k] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string format_task_c_submission(const std::vector<PairDecision>& decisions) {
  std::string out;
  for (const auto& d : decisions) out += d.chosen_index == 1 ? "1\n" : "0\n";
  return out;
}

}  // namespace sarc
