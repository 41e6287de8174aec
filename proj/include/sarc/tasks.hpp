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

// End-to-end orchestration of the three sub-tasks:
//   A  binary sarcasm detection
//   B  one binary classifier per irony category, predictions merged
//   C  pick the sarcastic text of a pair with a single shared classifier

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sarc/augment.hpp"
#include "sarc/corpus.hpp"
#include "sarc/encoder.hpp"
#include "sarc/metrics.hpp"
#include "sarc/preprocess.hpp"

namespace sarc {

// One input file. ".jsonl" paths are read as interchange files; otherwise
// kIsarcasm uses the official column layout and the other sources a
// BinaryAdapter (default_adapter(source) unless overridden).
struct CorpusSource {
  std::filesystem::path path;
  Source source = Source::kIsarcasm;
  std::optional<BinaryAdapter> adapter;
  IsarcasmColumns columns;
  RowPolicy policy = RowPolicy::kStrict;
};

Corpus load_source(const CorpusSource& source);

struct TaskAConfig {
  std::vector<CorpusSource> sources;
  bool use_rephrases = true;
  // Applied to the sarcastic instances of the official source(s).
  std::optional<AugmentConfig> augment;
  EncoderSpec spec;
  HyperParams hparams;
  SplitSpec split;
  PreprocessConfig preprocess;
  Execution exec = Execution::kParallel;
};

void validate(const TaskAConfig& config);

struct PoolCounts {
  std::size_t ingested = 0;
  std::size_t duplicates_removed = 0;
  std::size_t rephrases_added = 0;
  std::size_t augmented_added = 0;
  std::size_t pool = 0;
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
};

struct TaskAResult {
  ClassifierHandle handle;
  std::vector<bool> predictions;  // one per evaluation text
  std::vector<double> scores;
  EvalReport report;  // held-out test split
  TrainHistory history;
  PoolCounts counts;
  std::vector<std::string> stages;  // pipeline stages in execution order
};

// Builds the training pool from pre-loaded corpora (the ingest stage is the
// caller's). Exposed so the pipeline can run on in-memory data.
TaskAResult run_task_a(const TaskAConfig& config, const std::vector<Corpus>& corpora,
                       const std::vector<std::string>& eval_texts = {});
TaskAResult run_task_a(const TaskAConfig& config, const std::vector<std::string>& eval_texts = {});

struct TaskBConfig {
  std::vector<CorpusSource> sources;
  // Exactly the six category names; merged predictions always use the
  // fixed category order regardless of the order listed here.
  std::vector<std::string> labels = {"sarcasm",        "irony",         "satire",
                                     "understatement", "overstatement", "rhetorical_question"};
  // Per-label augmentation; labels without an entry use default_augment
  // except sarcasm, which is never augmented unless listed.
  std::map<std::string, std::optional<AugmentConfig>> augment_overrides;
  AugmentConfig default_augment;
  // Off: only sarcastic instances of the official source(s) are used.
  bool include_auxiliary = false;
  EncoderSpec spec;
  HyperParams hparams;
  SplitSpec split;
  PreprocessConfig preprocess;
  // Train the six classifiers concurrently.
  bool concurrent = true;
};

void validate(const TaskBConfig& config);
std::optional<AugmentConfig> label_augment(const TaskBConfig& config, Category label);

struct LabelRun {
  ClassifierHandle handle;
  TrainHistory history;
  EvalReport report;  // the label's own held-out test split
  ConfusionCounts test_counts;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t augmented = 0;
};

struct TaskBSuite {
  std::map<Category, LabelRun> runs;
  // Over the labels' test splits: per_class_f1 is each label's positive F1;
  // precision, recall and accuracy are label means; f1_positive is micro F1.
  EvalReport summary;
};

TaskBSuite train_task_b_suite(const TaskBConfig& config, const Corpus& corpus);
TaskBSuite train_task_b_suite(const TaskBConfig& config);

// Throws MergeError on a missing label or unequal lengths.
std::vector<MultiLabelPrediction> merge_task_b_predictions(const std::map<Category, std::vector<bool>>& per_label);

std::vector<MultiLabelPrediction> predict_task_b(const TaskBSuite& suite, const std::vector<std::string>& texts,
                                                 const PreprocessConfig& preprocess);

using TextPair = std::pair<std::string, std::string>;
using PairScorer = std::function<std::vector<double>(const std::vector<std::string>&)>;

// Scores both texts with the same scorer; higher score wins, ties go to
// index 0. An empty text raises ValidationError naming the 1-based pair.
std::vector<PairDecision> run_task_c_pairwise(const PairScorer& scorer, const std::vector<TextPair>& pairs);
std::vector<PairDecision> run_task_c_pairwise(const ClassifierHandle& handle, const std::vector<TextPair>& pairs,
                                              const PreprocessConfig& preprocess);

PairDecision decide_pair(double score_0, double score_1);

// Submission files.
std::string format_task_a_submission(const std::vector<bool>& predictions);
std::string format_task_b_submission(const std::vector<MultiLabelPrediction>& predictions);
std::string format_task_c_submission(const std::vector<PairDecision>& decisions);

}  // namespace sarc
