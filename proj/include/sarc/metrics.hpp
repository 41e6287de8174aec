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

// Shared-task scoring. Every ratio with a zero denominator is 0.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sarc/corpus.hpp"

namespace sarc {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const { return tp + fp + tn + fn; }
  bool operator==(const ConfusionCounts&) const = default;
};

struct PRF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  double f1_positive = 0.0;
  std::optional<std::vector<double>> per_class_f1;
  std::optional<double> macro_f1;
  std::size_t n = 0;
};

// Six flags in category order.
struct MultiLabelPrediction {
  CategoryFlags flags{};
  bool operator==(const MultiLabelPrediction&) const = default;
};

struct PairDecision {
  int chosen_index = 0;
  double score_0 = 0.0;
  double score_1 = 0.0;
};

// Throws MetricError on empty or unequal-length input.
ConfusionCounts confusion(std::span<const bool> y_true, std::span<const bool> y_pred);
ConfusionCounts confusion(const std::vector<bool>& y_true, const std::vector<bool>& y_pred);

// Same counts with the negative class treated as positive.
ConfusionCounts swapped(const ConfusionCounts& c);

PRF1 prf1(const ConfusionCounts& counts);
double accuracy(const ConfusionCounts& counts);

// Unweighted mean; throws MetricError when empty.
double macro_f1(std::span<const double> per_class_f1);

// precision/recall/f1 are macro-averaged over both classes; per_class_f1 is
// {negative, positive}; f1_positive is the sarcastic-class F1.
EvalReport evaluate_task_a(const std::vector<bool>& y_true, const std::vector<bool>& y_pred);

// per_class_f1 holds the positive-class F1 of each label column, macro_f1 and
// f1 their mean, precision/recall the mean per-label precision/recall,
// accuracy the mean per-label accuracy and f1_positive the micro F1 over all
// (instance, label) cells.
EvalReport evaluate_task_b(const std::vector<MultiLabelPrediction>& truth,
                           const std::vector<MultiLabelPrediction>& predicted);

// Accuracy of chosen indices; other fields treat index 1 as positive.
EvalReport evaluate_task_c(const std::vector<int>& true_indices, const std::vector<PairDecision>& decisions);

// "name: 0.1234" per line.
std::string format_report(const EvalReport& report);
// Single-line JSON object.
std::string report_json_line(const EvalReport& report);

}  // namespace sarc
