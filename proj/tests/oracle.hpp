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

// Brute-force reference for the classification metrics. Works on exact
// fractions built from set sizes and only converts to double at the end, so
// it shares no arithmetic with the library.

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace sarc::testing {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;  // 0 marks an undefined ratio, read as 0

  static Fraction make(std::int64_t n, std::int64_t d) {
    if (d == 0) return {0, 0};
    const auto g = std::gcd(n, d);
    return {n / g, d / g};
  }
  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
};

inline Fraction operator+(Fraction a, Fraction b) {
  if (a.den == 0) a = {0, 1};
  if (b.den == 0) b = {0, 1};
  return Fraction::make(a.num * b.den + b.num * a.den, a.den * b.den);
}
inline Fraction operator*(Fraction a, Fraction b) {
  if (a.den == 0 || b.den == 0) return {0, 1};
  return Fraction::make(a.num * b.num, a.den * b.den);
}
inline Fraction operator/(Fraction a, Fraction b) {
  if (a.den == 0 || b.den == 0 || b.num == 0) return {0, 0};
  return Fraction::make(a.num * b.den, a.den * b.num);
}

struct OracleClass {
  Fraction precision, recall, f1;
};

// Metrics of the class labeled `positive`, by counting index sets.
inline OracleClass oracle_class(const std::vector<bool>& truth, const std::vector<bool>& pred, bool positive) {
  std::int64_t predicted = 0, actual = 0, hit = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool t = truth[i] == positive, p = pred[i] == positive;
    predicted += p;
    actual += t;
    hit += t && p;
  }
  OracleClass c;
  c.precision = Fraction::make(hit, predicted);
  c.recall = Fraction::make(hit, actual);
  // Harmonic mean; undefined (0) when both are 0 or undefined.
  const Fraction sum = c.precision + c.recall;
  c.f1 = sum.num == 0 ? Fraction{0, 1} : (Fraction{2, 1} * c.precision * c.recall) / sum;
  if (c.f1.den == 0) c.f1 = {0, 1};
  return c;
}

inline Fraction oracle_accuracy(const std::vector<bool>& truth, const std::vector<bool>& pred) {
  std::int64_t same = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) same += truth[i] == pred[i];
  return Fraction::make(same, static_cast<std::int64_t>(truth.size()));
}

}  // namespace sarc::testing
