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

// Contextual word-replacement augmentation. Each variant swaps
// ceil(replace_fraction * maskable tokens) words (at least one) for fillers
// proposed by a Masker, sampled uniformly from its top-k with a generator
// seeded per (seed, instance id, variant, attempt). Output therefore does not
// depend on the order or thread in which instances are processed.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sarc/corpus.hpp"
#include "sarc/kernels.hpp"
#include "sarc/masker.hpp"

namespace sarc {

struct AugmentConfig {
  std::size_t variants_per_input = 3;
  double replace_fraction = 0.3;
  std::string masker_id = "bigram-context";
  std::uint64_t seed = 42;
  std::size_t top_k = 5;
  // Resampling attempts when a variant duplicates an earlier sibling.
  std::size_t max_resamples = 5;
};

void validate(const AugmentConfig& config);

// The alphabetic core of a token once leading/trailing punctuation is
// removed, or nullopt when the token is not maskable (usernames, hashtags,
// URLs, anything with a non-letter inside the core).
std::optional<std::string> maskable_core(std::string_view token);

std::size_t replacement_count(std::size_t maskable, double fraction);

// Returns variants_per_input synthetic copies, or an empty list (with a
// warning) when the text has no maskable token or the masker proposes no
// usable filler.
std::vector<TextInstance> augment_instance(const TextInstance& instance, const AugmentConfig& config,
                                           const Masker& masker);

// Synthetic instances only, in input order. With a filter, only sarcastic
// instances carrying that category are augmented.
Corpus augment_corpus(const Corpus& corpus, std::optional<Category> label_filter, const AugmentConfig& config,
                      const Masker& masker, Execution exec = Execution::kParallel);

}  // namespace sarc
