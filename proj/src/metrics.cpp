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

#include "sarc/metrics.hpp"

#include <fmt/format.h>

#include <nlohmann/json.hpp>

#include "sarc/error.hpp"

namespace sarc {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

template <typename Labels>
ConfusionCounts count_confusion(const Labels& y_true, const Labels& y_pred) {
  if (y_true.size() != y_pred.size())
    throw MetricError(fmt::format("label vectors differ in length: {} vs {}", y_true.size(), y_pred.size()));
  if (y_true.empty()) throw MetricError("cannot score empty label vectors");
  ConfusionCounts c;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i]) (y_pred[i] ? c.tp : c.fn)++;
    else (y_pred[i] ? c.fp : c.tn)++;
  }
  return c;
}

}  // namespace

ConfusionCounts confusion(std::span<const bool> y_true, std::span<const bool> y_pred) {
  return count_confusion(y_true, y_pred);
}

ConfusionCounts confusion(const std::vector<bool>& y_true, const std::vector<bool>& y_pred) {
  return count_confusion(y_true, y_pred);
}

ConfusionCounts swapped(const ConfusionCounts& c) { return {c.tn, c.fn, c.tp, c.fp}; }

PRF1 prf1(const ConfusionCounts& c) {
  PRF1 r;
  r.precision = ratio(c.tp, c.tp + c.fp);
  r.recall = ratio(c.tp, c.tp + c.fn);
  // 2tp / (2tp + fp + fn) is the harmonic mean of precision and recall
  // without intermediate rounding.
  r.f1 = ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn);
  return r;
}

double accuracy(const ConfusionCounts& c) { return ratio(c.tp + c.tn, c.total()); }

double macro_f1(std::span<const double> per_class_f1) {
  if (per_class_f1.empty()) throw MetricError("macro-F1 of an empty class list");
  double sum = 0.0;
  for (double f : per_class_f1) sum += f;
  return sum / static_cast<double>(per_class_f1.size());
}

EvalReport evaluate_task_a(const std::vector<bool>& y_true, const std::vector<bool>& y_pred) {
  const auto pos_counts = confusion(y_true, y_pred);
  const auto pos = prf1(pos_counts);
  const auto neg = prf1(swapped(pos_counts));
  EvalReport r;
  r.precision = (pos.precision + neg.precision) / 2.0;
  r.recall = (pos.recall + neg.recall) / 2.0;
  r.per_class_f1 = std::vector<double>{neg.f1, pos.f1};
  r.macro_f1 = macro_f1(*r.per_class_f1);
  r.f1 = *r.macro_f1;
  r.f1_positive = pos.f1;
  r.accuracy = accuracy(pos_counts);
  r.n = pos_counts.total();
  return r;
}

EvalReport evaluate_task_b(const std::vector<MultiLabelPrediction>& truth,
                           const std::vector<MultiLabelPrediction>& predicted) {
  if (truth.size() != predicted.size())
    throw MetricError(fmt::format("prediction count {} differs from gold count {}", predicted.size(), truth.size()));
  if (truth.empty()) throw MetricError("cannot score empty label vectors");

  EvalReport r;
  std::vector<double> f1s;
  ConfusionCounts micro;
  double p_sum = 0.0, r_sum = 0.0, acc_sum = 0.0;
  for (std::size_t k = 0; k < kNumCategories; ++k) {
    std::vector<bool> t(truth.size()), p(truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i) {
      t[i] = truth[i].flags[k];
      p[i] = predicted[i].flags[k];
    }
    const auto c = confusion(t, p);
    const auto s = prf1(c);
    f1s.push_back(s.f1);
    p_sum += s.precision;
    r_sum += s.recall;
    acc_sum += accuracy(c);
    micro.tp += c.tp;
    micro.fp += c.fp;
    micro.tn += c.tn;
    micro.fn += c.fn;
  }
  r.macro_f1 = macro_f1(f1s);
  r.per_class_f1 = std::move(f1s);
  r.f1 = *r.macro_f1;
  r.precision = p_sum / kNumCategories;
  r.recall = r_sum / kNumCategories;
  r.accuracy = acc_sum / kNumCategories;
  r.f1_positive = prf1(micro).f1;
  r.n = truth.size();
  return r;
}

EvalReport evaluate_task_c(const std::vector<int>& true_indices, const std::vector<PairDecision>& decisions) {
  if (true_indices.size() != decisions.size())
    throw MetricError(fmt::format("decision count {} differs from gold count {}", decisions.size(), true_indices.size()));
  std::vector<bool> t, p;
  t.reserve(true_indices.size());
  p.reserve(true_indices.size());
  for (std::size_t i = 0; i < true_indices.size(); ++i) {
    const int gold = true_indices[i];
    const int chosen = decisions[i].chosen_index;
    if (gold != 0 && gold != 1) throw MetricError(fmt::format("pair {}: gold index {} not in {{0,1}}", i, gold));
    if (chosen != 0 && chosen != 1) throw MetricError(fmt::format("pair {}: chosen index {} not in {{0,1}}", i, chosen));
    t.push_back(gold == 1);
    p.push_back(chosen == 1);
  }
  return evaluate_task_a(t, p);
}

std::string format_report(const EvalReport& r) {
  std::string out;
  out += fmt::format("n: {}\n", r.n);
  out += fmt::format("precision: {:.4f}\n", r.precision);
  out += fmt::format("recall: {:.4f}\n", r.recall);
  out += fmt::format("f1: {:.4f}\n", r.f1);
  out += fmt::format("accuracy: {:.4f}\n", r.accuracy);
  out += fmt::format("f1_positive: {:.4f}\n", r.f1_positive);
  if (r.macro_f1) out += fmt::format("macro_f1: {:.4f}\n", *r.macro_f1);
  if (r.per_class_f1) {
    for (std::size_t i = 0; i < r.per_class_f1->size(); ++i)
      out += fmt::format("per_class_f1[{}]: {:.4f}\n", i, (*r.per_class_f1)[i]);
  }
  return out;
}

std::string report_json_line(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["accuracy"] = r.accuracy;
  j["f1_positive"] = r.f1_positive;
  j["macro_f1"] = r.macro_f1 ? nlohmann::ordered_json(*r.macro_f1) : nlohmann::ordered_json(nullptr);
  j["per_class_f1"] = r.per_class_f1 ? nlohmann::ordered_json(*r.per_class_f1) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace sarc
