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

#include "sarc/masker.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sarc/augment.hpp"
#include "sarc/text.hpp"

namespace sarc {

namespace {

LookupMasker::Table builtin_table() {
  return {
      {"love", {"adore", "like", "enjoy", "cherish", "relish"}},
      {"great", {"wonderful", "fantastic", "excellent", "superb", "terrific"}},
      {"good", {"fine", "nice", "decent", "solid", "pleasant"}},
      {"bad", {"awful", "terrible", "poor", "lousy", "dreadful"}},
      {"day", {"morning", "week", "evening", "afternoon", "night"}},
      {"work", {"job", "office", "shift", "class", "school"}},
      {"happy", {"glad", "thrilled", "delighted", "pleased", "excited"}},
      {"really", {"truly", "totally", "so", "very", "absolutely"}},
      {"monday", {"tuesday", "friday", "weekend", "sunday", "today"}},
      {"waiting", {"queueing", "standing", "sitting", "lingering", "stuck"}},
      {"rain", {"snow", "traffic", "noise", "heat", "wind"}},
      {"people", {"folks", "everyone", "friends", "neighbours", "strangers"}},
  };
}

std::vector<std::string> builtin_fallback() {
  return {"thing", "stuff",  "time",  "place", "idea",  "world", "life",  "news",   "game",   "show",
          "story", "moment", "plan",  "party", "trip",  "phone", "movie", "music",  "food",   "coffee",
          "team",  "city",   "house", "car",   "book",  "song",  "year",  "friend", "family", "weather"};
}

std::string fold_alpha(std::string_view s) { return text::case_fold(s); }

}  // namespace

LookupMasker::LookupMasker() : LookupMasker(builtin_table(), builtin_fallback()) {}

LookupMasker::LookupMasker(Table table, std::vector<std::string> fallback)
    : table_(std::move(table)), fallback_(fallback.empty() ? builtin_fallback() : std::move(fallback)) {}

std::vector<Candidate> LookupMasker::candidates(std::span<const std::string> tokens, std::size_t position,
                                                std::size_t k) const {
  std::vector<Candidate> out;
  if (position >= tokens.size() || k == 0) return out;
  const auto word = fold_alpha(tokens[position]);
  std::set<std::string, std::less<>> used{word};
  if (auto it = table_.find(word); it != table_.end()) {
    for (std::size_t r = 0; r < it->second.size() && out.size() < k; ++r)
      if (used.insert(it->second[r]).second) out.push_back({it->second[r], 1.0 / static_cast<double>(r + 1)});
  }
  if (out.size() < k) {
    const std::string left = position > 0 ? fold_alpha(tokens[position - 1]) : "<s>";
    const std::string right = position + 1 < tokens.size() ? fold_alpha(tokens[position + 1]) : "</s>";
    std::vector<std::pair<std::uint64_t, const std::string*>> ranked;
    for (const auto& f : fallback_) ranked.emplace_back(text::fnv1a(left + "\x1f" + f + "\x1f" + right), &f);
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first != b.first ? a.first < b.first : *a.second < *b.second; });
    for (const auto& [h, f] : ranked) {
      if (out.size() >= k) break;
      if (used.insert(*f).second) out.push_back({*f, 0.5 / static_cast<double>(out.size() + 2)});
    }
  }
  return out;
}

namespace {

constexpr std::uint64_t pair_key(std::size_t a, std::size_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

}  // namespace

BigramMasker::BigramMasker(const Corpus& corpus, std::size_t min_count) {
  std::map<std::string, std::size_t> counts;
  std::vector<std::vector<std::string>> sentences;
  for (const auto& inst : corpus.instances) {
    std::vector<std::string> words;
    for (const auto& tok : text::tokens(inst.text)) {
      const auto core = maskable_core(tok);
      words.push_back(core ? fold_alpha(*core) : std::string{});
      if (core) ++counts[words.back()];
    }
    sentences.push_back(std::move(words));
  }
  for (const auto& [w, c] : counts) {
    if (c < min_count) continue;
    index_.emplace(w, vocab_.size());
    vocab_.push_back(w);
  }
  const std::size_t boundary = vocab_.size();
  left_totals_.assign(vocab_.size() + 1, 0.0);
  auto id_of = [&](const std::string& w) -> std::size_t {
    auto it = index_.find(w);
    return it == index_.end() ? boundary : it->second;
  };
  for (const auto& words : sentences) {
    std::size_t prev = boundary;
    for (const auto& w : words) {
      const std::size_t cur = id_of(w);
      bigram_[pair_key(prev, cur)] += 1.0;
      left_totals_[prev] += 1.0;
      prev = cur;
    }
    bigram_[pair_key(prev, boundary)] += 1.0;
    left_totals_[prev] += 1.0;
  }
}

std::vector<Candidate> BigramMasker::candidates(std::span<const std::string> tokens, std::size_t position,
                                                std::size_t k) const {
  std::vector<Candidate> out;
  if (position >= tokens.size() || k == 0 || vocab_.empty()) return out;
  const std::size_t boundary = vocab_.size();
  const double V = static_cast<double>(vocab_.size() + 1);
  auto id_of = [&](std::size_t pos) -> std::size_t {
    auto core = maskable_core(tokens[pos]);
    if (!core) return boundary;
    auto it = index_.find(fold_alpha(*core));
    return it == index_.end() ? boundary : it->second;
  };
  const std::size_t left = position > 0 ? id_of(position - 1) : boundary;
  const std::size_t right = position + 1 < tokens.size() ? id_of(position + 1) : boundary;
  auto count = [&](std::size_t a, std::size_t b) {
    auto it = bigram_.find(pair_key(a, b));
    return it == bigram_.end() ? 0.0 : it->second;
  };

  std::vector<Candidate> all;
  all.reserve(vocab_.size());
  for (std::size_t w = 0; w < vocab_.size(); ++w) {
    const double p_w = (count(left, w) + 1.0) / (left_totals_[left] + V);
    const double p_r = (count(w, right) + 1.0) / (left_totals_[w] + V);
    all.push_back({vocab_[w], std::log(p_w) + std::log(p_r)});
  }
  const std::size_t take = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(take), all.end(),
                    [](const Candidate& a, const Candidate& b) {
                      return a.score != b.score ? a.score > b.score : a.token < b.token;
                    });
  all.resize(take);
  return all;
}

}  // namespace sarc
