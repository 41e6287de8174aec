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

#include <chrono>
#include <set>

#include "sarc/augment.hpp"
#include "sarc/error.hpp"
#include "sarc/masker.hpp"
#include "sarc/text.hpp"
#include "support.hpp"

using namespace sarc;

namespace {

TextInstance sarcastic(std::string id, std::string text, std::size_t flag = 0) {
  TextInstance t;
  t.id = std::move(id);
  t.text = std::move(text);
  t.sarcastic = true;
  t.category_flags[flag] = true;
  return t;
}

AugmentConfig lookup_config() {
  AugmentConfig c;
  c.masker_id = "test-lookup";
  return c;
}

}  // namespace

TEST_CASE("maskable cores") {
  CHECK(maskable_core("love") == "love");
  CHECK(maskable_core("(Great!)") == "Great");
  CHECK(maskable_core("café,") == "café");
  CHECK_FALSE(maskable_core("@user"));
  CHECK_FALSE(maskable_core("#tag"));
  CHECK_FALSE(maskable_core("http://x.y"));
  CHECK_FALSE(maskable_core("3pm"));
  CHECK_FALSE(maskable_core("!!!"));
  CHECK_FALSE(maskable_core("don't"));
}

TEST_CASE("replacement counts use the ceiling with at least one") {
  CHECK(replacement_count(0, 0.3) == 0);
  CHECK(replacement_count(1, 0.3) == 1);
  CHECK(replacement_count(3, 0.3) == 1);
  CHECK(replacement_count(4, 0.3) == 2);
  CHECK(replacement_count(10, 0.3) == 3);
  CHECK(replacement_count(11, 0.3) == 4);
  CHECK(replacement_count(5, 1.0) == 5);
}

TEST_CASE("config validation") {
  AugmentConfig c;
  c.variants_per_input = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = AugmentConfig{};
  c.replace_fraction = 0.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.replace_fraction = 1.5;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = AugmentConfig{};
  c.top_k = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("variants keep labels and layout, and differ from the input") {
  const LookupMasker masker;
  const auto src = sarcastic("t1", "I just LOVE waiting in the rain, really great day! @boss #blessed", 2);
  const auto cfg = lookup_config();
  const auto out = augment_instance(src, cfg, masker);
  REQUIRE(out.size() == 3);
  const auto src_tokens = text::tokens(src.text);
  std::size_t maskable = 0;
  for (const auto& t : src_tokens) maskable += maskable_core(t).has_value();
  std::set<std::string> keys{text::dedup_key(src.text)};
  for (std::size_t v = 0; v < out.size(); ++v) {
    const auto& syn = out[v];
    CHECK(syn.id == "t1-aug" + std::to_string(v + 1));
    CHECK(syn.sarcastic == true);
    CHECK(syn.category_flags == src.category_flags);
    CHECK(syn.source == Source::kAugmented);
    CHECK_FALSE(syn.rephrase);
    CHECK(keys.insert(text::dedup_key(syn.text)).second);
    const auto toks = text::tokens(syn.text);
    REQUIRE(toks.size() == src_tokens.size());
    std::size_t changed = 0;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (toks[i] == src_tokens[i]) continue;
      ++changed;
      CHECK(maskable_core(src_tokens[i]).has_value());
    }
    CHECK(changed == replacement_count(maskable, cfg.replace_fraction));
    CHECK(syn.text.find("@boss #blessed") != std::string::npos);
  }
  CHECK(augment_instance(src, cfg, masker) == out);
  auto other = cfg;
  other.seed = 43;
  CHECK(augment_instance(src, other, masker) != out);
}

TEST_CASE("instances without maskable tokens produce nothing") {
  const LookupMasker masker;
  CHECK(augment_instance(sarcastic("x", "@a #b 42 !!!"), lookup_config(), masker).empty());
}

TEST_CASE("a masker without usable fillers produces nothing") {
  // Candidates only echo the original word back.
  struct Echo final : Masker {
    std::string id() const override { return "echo"; }
    std::vector<Candidate> candidates(std::span<const std::string> tokens, std::size_t pos, std::size_t) const override {
      return {{tokens[pos], 1.0}};
    }
  } echo;
  CHECK(augment_instance(sarcastic("x", "plain words here"), lookup_config(), echo).empty());
}

TEST_CASE("corpus augmentation filters by label and matches the serial path") {
  const auto corpus = testing::separable_corpus(200, 9);
  const LookupMasker masker;
  const auto cfg = lookup_config();
  const auto par = augment_corpus(corpus, Category::kIrony, cfg, masker, Execution::kParallel);
  const auto ser = augment_corpus(corpus, Category::kIrony, cfg, masker, Execution::kSerial);
  CHECK(par.instances == ser.instances);
  std::size_t expected = 0;
  for (const auto& inst : corpus.instances) expected += inst.sarcastic == true && inst.flag(Category::kIrony);
  CHECK(par.size() == 3 * expected);
  for (const auto& inst : par.instances) CHECK(inst.flag(Category::kIrony));
  CHECK(augment_corpus(corpus, std::nullopt, cfg, masker).size() == 3 * corpus.size());
}

TEST_CASE("bigram masker ranks context-compatible words") {
  Corpus c{"c", {}};
  for (int i = 0; i < 20; ++i) {
    c.instances.push_back(sarcastic("a" + std::to_string(i), "i love rainy mondays"));
    c.instances.push_back(sarcastic("b" + std::to_string(i), "i hate sunny fridays"));
  }
  const BigramMasker masker(c);
  CHECK(masker.vocabulary_size() == 7);
  const std::vector<std::string> tokens = {"i", "XXX", "rainy", "mondays"};
  const auto cands = masker.candidates(tokens, 1, 3);
  REQUIRE(cands.size() == 3);
  CHECK(cands[0].token == "love");
  CHECK(cands[0].score >= cands[1].score);
  // The masked token itself must not influence the ranking.
  const std::vector<std::string> other = {"i", "zebra", "rainy", "mondays"};
  const auto again = masker.candidates(other, 1, 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(again[i].token == cands[i].token);
}

TEST_CASE("867 inputs at three variants each finish quickly") {
  Corpus c{"c", {}};
  Rng rng(867);
  const std::vector<std::string> words = {"love", "great", "day", "work", "rain", "really", "monday", "people"};
  for (int i = 0; i < 867; ++i) {
    std::string text;
    for (int w = 0; w < 12; ++w) text += (w ? " " : "") + words[rng.below(words.size())];
    c.instances.push_back(sarcastic("s" + std::to_string(i), text + " n" + std::to_string(i)));
  }
  const LookupMasker masker;
  const auto t0 = std::chrono::steady_clock::now();
  const auto out = augment_corpus(c, Category::kSarcasm, lookup_config(), masker);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(out.size() == 2601);
  CHECK(secs < 30.0);
}
