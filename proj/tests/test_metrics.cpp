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

#include <algorithm>
#include <cstring>

#include "oracle.hpp"
#include "sarc/error.hpp"
#include "sarc/metrics.hpp"
#include "sarc/random.hpp"

using namespace sarc;
using sarc::testing::oracle_accuracy;
using sarc::testing::oracle_class;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<bool> random_labels(Rng& rng, std::size_t n) {
  std::vector<bool> v(n);
  // Vary the base rate so all-one and all-zero vectors show up.
  const double p = rng.uniform();
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform() < p;
  return v;
}

}  // namespace

TEST_CASE("confusion counts by hand") {
  const auto c = confusion(std::vector<bool>{1, 1, 0, 0}, std::vector<bool>{1, 0, 0, 1});
  CHECK(c.tp == 1);
  CHECK(c.fn == 1);
  CHECK(c.tn == 1);
  CHECK(c.fp == 1);

  const std::vector<bool> same{1, 0, 1, 1, 0};
  const auto s = confusion(same, same);
  CHECK(s.fp == 0);
  CHECK(s.fn == 0);
}

TEST_CASE("confusion rejects bad input") {
  CHECK_THROWS_AS(confusion(std::vector<bool>{1, 0, 1}, std::vector<bool>{1, 0, 1, 0}), MetricError);
  CHECK_THROWS_AS(confusion(std::vector<bool>{}, std::vector<bool>{}), MetricError);
}

TEST_CASE("prf1 hand arithmetic and zero division") {
  auto r = prf1({1, 1, 0, 1});
  CHECK(r.precision == 0.5);
  CHECK(r.recall == 0.5);
  CHECK(r.f1 == 0.5);

  r = prf1({0, 0, 3, 5});
  CHECK(r.precision == 0.0);
  CHECK(r.recall == 0.0);
  CHECK(r.f1 == 0.0);
}

TEST_CASE("macro_f1 examples") {
  const std::vector<double> table{0.2294, 0.0963, 0.0833, 0.0, 0.0, 0.0414};
  CHECK(std::abs(macro_f1(table) - 0.0751) <= 5e-4);
  CHECK(macro_f1(std::vector<double>{1, 1, 1}) == 1.0);
  CHECK(macro_f1(std::vector<double>{0.5}) == 0.5);
  CHECK_THROWS_AS(macro_f1(std::vector<double>{}), MetricError);
}

TEST_CASE("macro_f1 is permutation invariant and bounded") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + rng.below(8));
    for (auto& x : v) x = rng.uniform();
    const double m = macro_f1(v);
    CHECK(m >= *std::min_element(v.begin(), v.end()) - 1e-15);
    CHECK(m <= *std::max_element(v.begin(), v.end()) + 1e-15);
    auto shuffled = v;
    rng.shuffle(shuffled);
    CHECK(std::abs(macro_f1(shuffled) - m) <= 1e-12);
  }
}

TEST_CASE("binary metrics match the brute-force oracle") {
  Rng rng(20260418);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + rng.below(25);
    const auto truth = random_labels(rng, n);
    const auto pred = random_labels(rng, n);

    const auto pos = prf1(confusion(truth, pred));
    const auto opos = oracle_class(truth, pred, true);
    REQUIRE(same_bits(pos.precision, opos.precision.value()));
    REQUIRE(same_bits(pos.recall, opos.recall.value()));
    REQUIRE(same_bits(pos.f1, opos.f1.value()));
    REQUIRE(same_bits(accuracy(confusion(truth, pred)), oracle_accuracy(truth, pred).value()));

    const auto report = evaluate_task_a(truth, pred);
    const auto oneg = oracle_class(truth, pred, false);
    CHECK(same_bits(report.f1_positive, opos.f1.value()));
    CHECK(same_bits(report.accuracy, oracle_accuracy(truth, pred).value()));
    CHECK(std::abs(report.precision - (opos.precision + oneg.precision).value() / 2) <= 1e-12);
    CHECK(std::abs(report.recall - (opos.recall + oneg.recall).value() / 2) <= 1e-12);
    CHECK(std::abs(*report.macro_f1 - (opos.f1 + oneg.f1).value() / 2) <= 1e-12);
    REQUIRE(report.per_class_f1);
    CHECK(same_bits((*report.per_class_f1)[0], oneg.f1.value()));
    CHECK(same_bits((*report.per_class_f1)[1], opos.f1.value()));
    CHECK(report.n == n);
  }
}

TEST_CASE("all metric values lie in [0, 1]") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(25);
    const auto r = evaluate_task_a(random_labels(rng, n), random_labels(rng, n));
    for (double v : {r.precision, r.recall, r.f1, r.accuracy, r.f1_positive, *r.macro_f1}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("swapping classes exchanges per-class precision and keeps accuracy") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(25);
    const auto truth = random_labels(rng, n);
    const auto pred = random_labels(rng, n);
    std::vector<bool> nt(n), np(n);
    for (std::size_t i = 0; i < n; ++i) {
      nt[i] = !truth[i];
      np[i] = !pred[i];
    }
    const auto c = confusion(truth, pred);
    const auto flipped = confusion(nt, np);
    CHECK(flipped == swapped(c));
    CHECK(prf1(flipped).precision == oracle_class(truth, pred, false).precision.value());
    CHECK(accuracy(flipped) == accuracy(c));
  }
}

TEST_CASE("task A report examples") {
  const std::vector<bool> truth{1, 0, 1, 0, 0};
  auto r = evaluate_task_a(truth, truth);
  CHECK(r.precision == 1.0);
  CHECK(r.recall == 1.0);
  CHECK(r.f1 == 1.0);
  CHECK(r.accuracy == 1.0);
  CHECK(r.f1_positive == 1.0);

  r = evaluate_task_a(truth, std::vector<bool>(5, false));
  CHECK(r.f1_positive == 0.0);
}

TEST_CASE("task B per-label F1 and macro") {
  Rng rng(5);
  std::vector<MultiLabelPrediction> truth(40), pred(40);
  for (std::size_t i = 0; i < truth.size(); ++i)
    for (std::size_t k = 0; k < kNumCategories; ++k) {
      truth[i].flags[k] = rng.below(3) == 0;
      pred[i].flags[k] = rng.below(3) == 0;
    }
  // Keep one column all false to mirror a class the model never predicts.
  truth[0].flags[3] = true;
  for (auto& p : pred) p.flags[3] = false;

  const auto perfect = evaluate_task_b(truth, truth);
  for (double f : *perfect.per_class_f1) CHECK(f == 1.0);
  CHECK(*perfect.macro_f1 == 1.0);

  const auto r = evaluate_task_b(truth, pred);
  REQUIRE(r.per_class_f1->size() == kNumCategories);
  for (std::size_t k = 0; k < kNumCategories; ++k) {
    std::vector<bool> t, p;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      t.push_back(truth[i].flags[k]);
      p.push_back(pred[i].flags[k]);
    }
    CHECK(same_bits((*r.per_class_f1)[k], oracle_class(t, p, true).f1.value()));
  }
  CHECK((*r.per_class_f1)[3] == 0.0);
  double mean = 0;
  for (double f : *r.per_class_f1) mean += f;
  CHECK(std::abs(*r.macro_f1 - mean / 6) <= 1e-12);
}

TEST_CASE("task C accuracy and index checks") {
  std::vector<int> gold(10);
  std::vector<PairDecision> dec(10);
  for (int i = 0; i < 10; ++i) {
    gold[i] = i % 2;
    dec[i].chosen_index = i < 5 ? gold[i] : 1 - gold[i];
  }
  CHECK(evaluate_task_c(gold, dec).accuracy == 0.5);
  for (int i = 0; i < 10; ++i) dec[i].chosen_index = gold[i];
  CHECK(evaluate_task_c(gold, dec).accuracy == 1.0);
  gold[3] = 2;
  CHECK_THROWS_AS(evaluate_task_c(gold, dec), MetricError);
}

TEST_CASE("report serialization") {
  const auto r = evaluate_task_a({1, 0, 1, 1}, {1, 0, 0, 1});
  const auto text = format_report(r);
  CHECK(text.find("f1_positive: 0.8000\n") != std::string::npos);
  CHECK(text.find("accuracy: 0.7500\n") != std::string::npos);
  const auto line = report_json_line(r);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(line.find("\"f1_positive\":0.8") != std::string::npos);
}
