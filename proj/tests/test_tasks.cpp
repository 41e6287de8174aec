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


#include <doctest.h>

#include <cmath>

#include "sarc/error.hpp"
#include "sarc/tasks.hpp"
#include "support.hpp"

using namespace sarc;

namespace {

HyperParams fast_hparams(std::size_t epochs) {
  HyperParams h;
  h.learning_rate = 0.01;
  h.max_seq_len = 32;
  h.batch_size = 16;
  h.epochs = epochs;
  return h;
}

TaskBConfig fast_task_b() {
  TaskBConfig c;
  c.hparams = fast_hparams(1);
  c.default_augment.masker_id = "test-lookup";
  c.default_augment.variants_per_input = 1;
  return c;
}

}  // namespace

TEST_CASE("task A runs its stages in order and reports on the test split") {
  TaskAConfig cfg;
  cfg.hparams = fast_hparams(4);
  const auto corpus = testing::separable_corpus(400, 40);
  std::size_t rephrases = 0;
  for (const auto& inst : corpus.instances) rephrases += inst.rephrase.has_value();
  const auto eval = testing::separable_texts(30, 41);
  const auto r = run_task_a(cfg, {corpus}, eval);
  CHECK(r.stages == std::vector<std::string>{"ingest", "merge/dedup", "rephrase-inject", "augment", "split",
                                             "preprocess-at-tokenize", "train", "predict"});
  CHECK(r.counts.ingested == 400);
  CHECK(r.counts.rephrases_added == rephrases);
  CHECK(r.counts.pool == 400 + rephrases);
  CHECK(r.counts.train + r.counts.validation + r.counts.test == r.counts.pool);
  CHECK(r.report.n == r.counts.test);
  CHECK(r.report.f1_positive >= 0.9);
  CHECK(r.predictions.size() == eval.size());
  CHECK(r.scores.size() == eval.size());

  cfg.use_rephrases = false;
  cfg.hparams.epochs = 1;
  CHECK(run_task_a(cfg, {corpus}).counts.rephrases_added == 0);
}

TEST_CASE("task A augmentation covers official sarcastic instances only") {
  TaskAConfig cfg;
  cfg.hparams = fast_hparams(1);
  cfg.augment = AugmentConfig{};
  cfg.augment->masker_id = "test-lookup";
  cfg.augment->variants_per_input = 2;
  cfg.use_rephrases = false;
  auto official = testing::separable_corpus(60, 1, "official");
  auto other = testing::separable_corpus(60, 2, "other");
  for (auto& inst : other.instances) {
    inst.source = Source::kSemEval18Train;
    inst.category_flags = {};
    inst.rephrase.reset();
  }
  const auto r = run_task_a(cfg, {official, other});
  CHECK(r.counts.augmented_added <= 60);
  CHECK(r.counts.augmented_added >= 50);
  CHECK(r.stages[3] == "augment");
}

TEST_CASE("task A fails early on configuration and data problems") {
  TaskAConfig cfg;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  CorpusSource missing;
  missing.path = "missing.csv";
  cfg.sources.push_back(missing);
  cfg.spec.encoder_id = "tiny-distilbert";
  cfg.hparams = hyperparams_preset("distilbert");
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.spec.encoder_id = "roberta-base";
  cfg.hparams = fast_hparams(1);
  CHECK_THROWS_AS(validate(cfg), EnvironmentError);
  cfg.spec.encoder_id = "tiny";
  CHECK_THROWS_AS(run_task_a(cfg), LoadError);
  cfg.hparams = fast_hparams(1);
  CHECK_THROWS_AS(run_task_a(cfg, {testing::separable_corpus(4, 1)}), DatasetError);
}

TEST_CASE("task B label list and augmentation defaults") {
  auto cfg = fast_task_b();
  CHECK_NOTHROW(validate(cfg));
  CHECK_FALSE(label_augment(cfg, Category::kSarcasm));
  CHECK(label_augment(cfg, Category::kIrony));
  cfg.augment_overrides["irony"] = std::nullopt;
  CHECK_FALSE(label_augment(cfg, Category::kIrony));
  cfg.augment_overrides["sarcasm"] = AugmentConfig{};
  CHECK(label_augment(cfg, Category::kSarcasm));

  cfg = fast_task_b();
  cfg.labels.pop_back();
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.labels.push_back("irony");
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg.labels.back() = "hyperbole";
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = fast_task_b();
  std::swap(cfg.labels[0], cfg.labels[5]);
  CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("task B merge checks labels and lengths") {
  std::map<Category, std::vector<bool>> cols;
  for (auto c : kAllCategories) cols[c] = {true, false};
  const auto merged = merge_task_b_predictions(cols);
  REQUIRE(merged.size() == 2);
  for (bool f : merged[0].flags) CHECK(f);
  cols[Category::kSatire] = {true};
  CHECK_THROWS_AS(merge_task_b_predictions(cols), MergeError);
  cols.erase(Category::kSatire);
  CHECK_THROWS_AS(merge_task_b_predictions(cols), MergeError);
}

TEST_CASE("task B suite trains six independent classifiers") {
  auto cfg = fast_task_b();
  const auto corpus = testing::separable_corpus(240, 50);
  const auto suite = train_task_b_suite(cfg, corpus);
  REQUIRE(suite.runs.size() == kNumCategories);
  REQUIRE(suite.summary.per_class_f1);
  double mean = 0;
  for (std::size_t k = 0; k < kNumCategories; ++k) {
    const auto& run = suite.runs.at(kAllCategories[k]);
    CHECK((*suite.summary.per_class_f1)[k] == run.report.f1_positive);
    mean += run.report.f1_positive;
    CHECK(run.positives > 0);
    CHECK(run.positives + run.negatives == 120 + run.augmented);
    if (kAllCategories[k] == Category::kSarcasm) CHECK(run.augmented == 0);
    else CHECK(run.augmented > 0);
  }
  CHECK(std::abs(*suite.summary.macro_f1 - mean / 6) <= 1e-12);
  ConfusionCounts micro;
  double acc = 0;
  for (const auto& [c, run] : suite.runs) {
    CHECK(run.test_counts.total() == run.report.n);
    CHECK(accuracy(run.test_counts) == run.report.accuracy);
    acc += run.report.accuracy;
    micro.tp += run.test_counts.tp;
    micro.fp += run.test_counts.fp;
    micro.tn += run.test_counts.tn;
    micro.fn += run.test_counts.fn;
  }
  CHECK(std::abs(suite.summary.accuracy - acc / 6) <= 1e-12);
  CHECK(suite.summary.f1_positive == prf1(micro).f1);

  const auto texts = testing::separable_texts(40, 51);
  const auto merged = predict_task_b(suite, texts, cfg.preprocess);
  REQUIRE(merged.size() == texts.size());

  // Replacing one label's classifier changes only that column.
  auto swapped = suite;
  swapped.runs.at(Category::kIrony).handle = build_classifier(cfg.spec, fast_hparams(1));
  auto head = std::vector<double>(swapped.runs.at(Category::kIrony).handle.model.params().begin(),
                                  swapped.runs.at(Category::kIrony).handle.model.params().end());
  const auto& l = swapped.runs.at(Category::kIrony).handle.model.layout();
  head[l.head_b + 1] += 100.0;  // force every irony prediction to 1
  swapped.runs.at(Category::kIrony).handle.model.set_params(head);
  const auto changed = predict_task_b(swapped, texts, cfg.preprocess);
  for (std::size_t i = 0; i < texts.size(); ++i)
    for (std::size_t k = 0; k < kNumCategories; ++k) {
      if (kAllCategories[k] == Category::kIrony) CHECK(changed[i].flags[k]);
      else CHECK(changed[i].flags[k] == merged[i].flags[k]);
    }

  cfg.concurrent = false;
  const auto serial = train_task_b_suite(cfg, corpus);
  for (auto c : kAllCategories) {
    const auto& a = suite.runs.at(c).handle.model.params();
    const auto& b = serial.runs.at(c).handle.model.params();
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST_CASE("task B names the label without positives") {
  auto cfg = fast_task_b();
  auto corpus = testing::separable_corpus(120, 52);
  for (auto& inst : corpus.instances)
    if (inst.flag(Category::kUnderstatement)) {
      inst.category_flags = {};
      inst.category_flags[0] = true;
    }
  try {
    train_task_b_suite(cfg, corpus);
    FAIL("expected DatasetError");
  } catch (const DatasetError& e) {
    CHECK(std::string(e.what()).find("'understatement'") != std::string::npos);
  }
}

TEST_CASE("task C decisions") {
  CHECK(decide_pair(0.7, 0.2).chosen_index == 0);
  CHECK(decide_pair(0.2, 0.7).chosen_index == 1);
  CHECK(decide_pair(0.5, 0.5).chosen_index == 0);

  // Stub scorer: the length of the text.
  const PairScorer by_length = [](const std::vector<std::string>& t) {
    std::vector<double> s;
    for (const auto& x : t) s.push_back(static_cast<double>(x.size()));
    return s;
  };
  Rng rng(100);
  std::vector<TextPair> pairs;
  for (int i = 0; i < 100; ++i)
    pairs.emplace_back(std::string(1 + rng.below(20), 'a'), std::string(1 + rng.below(20), 'b'));
  const auto d = run_task_c_pairwise(by_length, pairs);
  REQUIRE(d.size() == 100);
  const PairScorer squashed = [&](const std::vector<std::string>& t) {
    auto s = by_length(t);
    for (auto& x : s) x = std::tanh(x / 10.0) * 3 + 1;
    return s;
  };
  const auto d2 = run_task_c_pairwise(squashed, pairs);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int expect = pairs[i].first.size() >= pairs[i].second.size() ? 0 : 1;
    CHECK(d[i].chosen_index == expect);
    CHECK(d2[i].chosen_index == expect);
  }

  pairs[41].second = "  ";
  try {
    run_task_c_pairwise(by_length, pairs);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.row() == 42);
  }
  const PairScorer short_scorer = [](const std::vector<std::string>&) { return std::vector<double>{1.0}; };
  CHECK_THROWS_AS(run_task_c_pairwise(short_scorer, {{"a", "b"}}), MetricError);
}

TEST_CASE("submission formats") {
  CHECK(format_task_a_submission({true, false, true}) == "1\n0\n1\n");
  MultiLabelPrediction p;
  p.flags[1] = p.flags[5] = true;
  CHECK(format_task_b_submission({p}) ==
        "sarcasm,irony,satire,understatement,overstatement,rhetorical_question\n0,1,0,0,0,1\n");
  CHECK(format_task_c_submission({decide_pair(1, 2), decide_pair(2, 1)}) == "1\n0\n");
}
