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
#include <set>

#include "sarc/csv.hpp"
#include "sarc/error.hpp"
#include "sarc/io.hpp"
#include "sarc/text.hpp"
#include "support.hpp"

using namespace sarc;

namespace {

TextInstance make(std::string id, std::string text, std::optional<bool> sarcastic, CategoryFlags flags = {}) {
  TextInstance t;
  t.id = std::move(id);
  t.text = std::move(text);
  t.sarcastic = sarcastic;
  t.category_flags = flags;
  return t;
}

Corpus labelled_corpus(std::size_t n, double positive_rate, Rng& rng) {
  Corpus c{"c", {}};
  for (std::size_t i = 0; i < n; ++i)
    c.instances.push_back(make("r" + std::to_string(i), "text " + std::to_string(i), rng.uniform() < positive_rate));
  return c;
}

}  // namespace

TEST_CASE("category and source names round-trip") {
  for (auto c : kAllCategories) CHECK(parse_category(category_name(c)) == c);
  CHECK(parse_category("rhetorical question") == Category::kRhetoricalQuestion);
  CHECK_THROWS_AS(parse_category("hyperbole"), SpecError);
  CHECK(parse_source("ISARCASM") == Source::kIsarcasm);
  CHECK_THROWS_AS(parse_source("REDDIT"), SpecError);
}

TEST_CASE("instance validation") {
  CHECK_NOTHROW(validate(make("a", "fine", true, {true}), 1));
  CHECK_THROWS_AS(validate(make("a", "   ", true), 4), ValidationError);
  CHECK_THROWS_AS(validate(make("a", "x", false, {false, true}), 1), ValidationError);
  auto t = make("a", "x", false);
  t.rephrase = "y";
  CHECK_THROWS_AS(validate(t, 1), ValidationError);
  try {
    validate(make("a", "", true), 7);
  } catch (const ValidationError& e) {
    CHECK(e.row() == 7);
  }
}

TEST_CASE("official layout loads with strict and lenient policies") {
  testing::TempDir dir;
  const auto p = dir / "train.csv";
  io::write_text(p,
                 ",tweet,sarcastic,rephrase,sarcasm,irony,satire,understatement,overstatement,rhetorical_question\n"
                 "0,\"oh great, rain\",1,i dislike rain,1,0,0,0,0,0\n"
                 "1,nice day,0,,,,,,,\n"
                 "2,what a surprise,1,not surprising,0,1,0,0,1,0\n");
  const auto c = load_isarcasm(p);
  REQUIRE(c.size() == 3);
  CHECK(c.instances[0].text == "oh great, rain");
  CHECK(c.instances[0].sarcastic == true);
  CHECK(c.instances[0].flag(Category::kSarcasm));
  CHECK(c.instances[0].rephrase == "i dislike rain");
  CHECK(c.instances[1].sarcastic == false);
  CHECK_FALSE(c.instances[1].rephrase);
  CHECK(c.instances[2].flag(Category::kOverstatement));
  CHECK(label_key(c.instances[2]) == "irony+overstatement");

  io::write_text(p,
                 "tweet,sarcastic,rephrase,sarcasm,irony,satire,understatement,overstatement,rhetorical_question\n"
                 "ok,1,,1,0,0,0,0,0\n"
                 "bad,maybe,,0,0,0,0,0,0\n");
  CHECK_THROWS_AS(load_isarcasm(p), ValidationError);
  CHECK(load_isarcasm(p, {}, RowPolicy::kWarnAndDrop).size() == 1);

  io::write_text(p, "text,sarcastic\nx,1\n");
  CHECK_THROWS_AS(load_isarcasm(p), LoadError);
}

TEST_CASE("binary sources map labels through the adapter") {
  testing::TempDir dir;
  const auto p = dir / "semeval.tsv";
  io::write_text(p, "Tweet index\tLabel\tTweet text\n1\t1\tlove mondays\n2\t0\tplain fact\n");
  auto adapter = default_adapter(Source::kSemEval18Train);
  adapter.delimiter = '\t';
  const auto c = load_binary_source(p, Source::kSemEval18Train, adapter);
  REQUIRE(c.size() == 2);
  CHECK(c.instances[0].sarcastic == true);
  CHECK(c.instances[1].sarcastic == false);
  CHECK(c.instances[0].source == Source::kSemEval18Train);

  io::write_text(p, "Tweet index\tLabel\tTweet text\n1\tperhaps\tx\n");
  CHECK_THROWS_AS(load_binary_source(p, Source::kSemEval18Train, adapter), ValidationError);
}

TEST_CASE("jsonl round-trip preserves every field") {
  testing::TempDir dir;
  auto c = testing::separable_corpus(60, 3);
  c.instances.push_back(make("u", "unlabelled text", std::nullopt));
  write_jsonl(c, dir / "c.jsonl");
  const auto back = read_jsonl(dir / "c.jsonl");
  CHECK(back.instances == c.instances);
  CHECK_THROWS_AS(from_json_line("{\"id\":\"x\"}", 3), ValidationError);
  CHECK_THROWS_AS(from_json_line("not json", 3), ValidationError);
}

TEST_CASE("merge_dedup keeps first occurrences under the normalized key") {
  Corpus a{"a", {make("1", "Hello  World", true), make("2", "other", false)}};
  Corpus b{"b", {make("9", "hello world", false), make("1", "new text", true), make("3", "OTHER ", true)}};
  const auto m = merge_dedup({a, b});
  REQUIRE(m.size() == 3);
  CHECK(m.instances[0].text == "Hello  World");
  CHECK(m.instances[0].sarcastic == true);
  CHECK(m.instances[2].id == "1~2");
  CHECK_NOTHROW(check_unique_ids(m));
}

TEST_CASE("merge_dedup properties on random corpora") {
  Rng rng(17);
  const std::vector<std::string> pool = {"a b", "A  b", "c", "d e f", "D E F", "g", "h", "i j"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Corpus> parts(1 + rng.below(4));
    std::size_t total = 0;
    for (auto& p : parts) {
      const auto n = rng.below(6);
      for (std::size_t i = 0; i < n; ++i)
        p.instances.push_back(make(std::to_string(rng.below(5)), pool[rng.below(pool.size())], rng.below(2) == 1));
      total += n;
    }
    const auto m = merge_dedup(parts);
    std::set<std::string> keys, ids;
    for (const auto& inst : m.instances) {
      CHECK(keys.insert(text::dedup_key(inst.text)).second);
      CHECK(ids.insert(inst.id).second);
    }
    std::set<std::string> all;
    for (const auto& p : parts)
      for (const auto& inst : p.instances) all.insert(text::dedup_key(inst.text));
    CHECK(keys == all);
    CHECK(m.size() <= total);
    CHECK(merge_dedup({m}).instances == m.instances);
  }
}

TEST_CASE("split ratios are validated") {
  SplitSpec s;
  s.ratios = {0.5, 0.2, 0.2};
  CHECK_THROWS_AS(validate(s), SpecError);
  s.ratios = {1.2, -0.1, -0.1};
  CHECK_THROWS_AS(validate(s), SpecError);
  s = SplitSpec{};
  s.stratify_on = "whimsy";
  CHECK_THROWS_AS(validate(s), SpecError);
  Rng rng(1);
  CHECK_THROWS_AS(stratified_split(Corpus{}, SplitSpec{}), SpecError);
  auto c = labelled_corpus(10, 0.5, rng);
  c.instances[2].sarcastic.reset();
  CHECK_THROWS_AS(stratified_split(c, SplitSpec{}), SpecError);
}

TEST_CASE("split partitions, stratifies and is reproducible") {
  Rng rng(23);
  for (std::size_t n : {50u, 137u, 500u, 1000u, 5000u}) {
    const auto c = labelled_corpus(n, 0.1 + 0.8 * rng.uniform(), rng);
    SplitSpec spec;
    spec.seed = rng.next();
    const auto s = stratified_split(c, spec);

    std::multiset<std::string> ids;
    for (const auto* part : {&s.train, &s.validation, &s.test})
      for (const auto& inst : part->instances) ids.insert(inst.id);
    CHECK(ids.size() == n);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == n);

    // Each stratum lands in each split within one item of its exact share.
    for (bool stratum : {false, true}) {
      auto count = [&](const Corpus& x) {
        return static_cast<double>(std::count_if(x.instances.begin(), x.instances.end(),
                                                 [&](const TextInstance& t) { return *t.sarcastic == stratum; }));
      };
      const double size = count(c);
      const std::array<const Corpus*, 3> parts = {&s.train, &s.validation, &s.test};
      for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(count(*parts[k]) - spec.ratios[k] * size) <= 1.0);
    }

    const auto again = stratified_split(c, spec);
    CHECK(again.train.instances == s.train.instances);
    CHECK(again.test.instances == s.test.instances);
    spec.seed += 1;
    CHECK(stratified_split(c, spec).test.instances != s.test.instances);
  }
}

TEST_CASE("split on a category label") {
  const auto c = testing::separable_corpus(120, 5);
  Corpus sarcastic{"s", {}};
  for (const auto& inst : c.instances)
    if (*inst.sarcastic) sarcastic.instances.push_back(inst);
  SplitSpec spec;
  spec.stratify_on = "irony";
  const auto s = stratified_split(sarcastic, spec);
  CHECK(s.train.size() + s.validation.size() + s.test.size() == sarcastic.size());
}

TEST_CASE("label stats and row keys") {
  Corpus c{"c",
           {make("1", "a", false), make("2", "b", true, {true}), make("3", "c", true, {true, true}),
            make("4", "d", true), make("5", "e", std::nullopt), make("6", "f", false)}};
  const auto s = label_stats(c);
  CHECK(s.total == 6);
  CHECK(s.counts.at("non-sarcastic") == 2);
  CHECK(s.counts.at("only-sarcasm") == 1);
  CHECK(s.counts.at("sarcasm+irony") == 1);
  CHECK(s.counts.at("sarcastic-uncategorized") == 1);
  CHECK(s.counts.at("unlabeled") == 1);
  const auto rows = stats_rows(s);
  REQUIRE_FALSE(rows.empty());
  CHECK(rows.back() == std::pair<std::string, std::size_t>{"Total", 6});
  std::size_t sum = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) sum += rows[i].second;
  CHECK(sum == 6);
}

TEST_CASE("rephrase injection adds negatives and skips duplicates") {
  Corpus c{"c", {make("1", "great, more rain", true, {true}), make("2", "i hate rain", false),
                 make("3", "love queues", true, {true})}};
  c.instances[0].rephrase = "I hate rain";
  c.instances[2].rephrase = "queues are slow";
  const auto out = inject_rephrases(c);
  REQUIRE(out.size() == 4);
  CHECK(out.instances[3].id == "3-rephrase");
  CHECK(out.instances[3].sarcastic == false);
  CHECK_FALSE(out.instances[3].rephrase);
  CHECK(inject_rephrases(out).size() == 4);
}

TEST_CASE("label datasets collapse to one column") {
  Corpus sarcastic{"s", {make("1", "a", true, {true, true}), make("2", "b", true, {true, false})}};
  Corpus augmented{"aug", {make("1-aug1", "a2", true, {true, true})}};
  const auto d = build_label_dataset(sarcastic, Category::kIrony, augmented);
  REQUIRE(d.size() == 3);
  CHECK(d.instances[0].sarcastic == true);
  CHECK(d.instances[1].sarcastic == false);
  CHECK(d.instances[2].sarcastic == true);
  for (const auto& inst : d.instances)
    for (std::size_t k = 0; k < kNumCategories; ++k)
      if (k != 1) CHECK_FALSE(inst.category_flags[k]);

  try {
    build_label_dataset(sarcastic, Category::kSatire, Corpus{});
    FAIL("expected DatasetError");
  } catch (const DatasetError& e) {
    CHECK(std::string(e.what()).find("'satire'") != std::string::npos);
  }
  Corpus mixed = sarcastic;
  mixed.instances.push_back(make("3", "c", false));
  CHECK_THROWS_AS(build_label_dataset(mixed, Category::kSarcasm, Corpus{}), DatasetError);
  CHECK_THROWS_AS(build_label_dataset(sarcastic, Category::kSatire, augmented), DatasetError);
}
