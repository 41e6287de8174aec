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

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sarc/corpus.hpp"

namespace sarc {

struct Candidate {
  std::string token;
  double score = 0.0;
};

// Proposes fillers for one masked position given the surrounding tokens.
// Implementations must be safe to call concurrently (augmentation runs in
// parallel over instances).
class Masker {
 public:
  virtual ~Masker() = default;
  virtual std::string id() const = 0;
  // Up to k candidates for tokens[position], best first. Context models
  // score from the neighbours only; the caller drops a candidate equal to
  // the replaced word.
  virtual std::vector<Candidate> candidates(std::span<const std::string> tokens, std::size_t position,
                                            std::size_t k) const = 0;
};

// Deterministic table-driven masker for tests: a fixed filler list per
// (case-folded) word, with a built-in fallback vocabulary ranked by a hash
// of the neighbouring words for words not in the table.
class LookupMasker final : public Masker {
 public:
  using Table = std::map<std::string, std::vector<std::string>, std::less<>>;

  LookupMasker();
  explicit LookupMasker(Table table, std::vector<std::string> fallback = {});

  std::string id() const override { return "test-lookup"; }
  std::vector<Candidate> candidates(std::span<const std::string> tokens, std::size_t position,
                                    std::size_t k) const override;

 private:
  Table table_;
  std::vector<std::string> fallback_;
};

// Context model fitted on a corpus: a candidate w for a masked slot between
// `left` and `right` scores P(w | left) * P(right | w) with add-one
// smoothing, over the lowercase alphabetic vocabulary of the corpus.
class BigramMasker final : public Masker {
 public:
  explicit BigramMasker(const Corpus& corpus, std::size_t min_count = 1);

  std::string id() const override { return "bigram-context"; }
  std::vector<Candidate> candidates(std::span<const std::string> tokens, std::size_t position,
                                    std::size_t k) const override;
  std::size_t vocabulary_size() const { return vocab_.size(); }

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::size_t> index_;
  // Sparse bigram counts keyed by (left index, right index); index
  // vocab_.size() stands for the sentence boundary.
  std::unordered_map<std::uint64_t, double> bigram_;
  std::vector<double> left_totals_;
};

}  // namespace sarc
