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

#include "sarc/random.hpp"
#include "sarc/text.hpp"

using namespace sarc;

TEST_CASE("decode handles multi-byte and malformed input") {
  const auto cps = text::decode("aé😂\xff");
  REQUIRE(cps.size() == 4);
  CHECK(cps[0].value == U'a');
  CHECK(cps[1].value == U'é');
  CHECK(cps[1].length == 2);
  CHECK(cps[2].value == U'😂');
  CHECK(cps[2].length == 4);
  CHECK_FALSE(cps[3].valid);
  std::string round;
  for (const auto& c : cps)
    if (c.valid) text::append_utf8(round, c.value);
  CHECK(round == "aé😂");
}

TEST_CASE("character classes") {
  CHECK(text::is_punctuation(U'!'));
  CHECK(text::is_punctuation(U'«'));
  CHECK(text::is_punctuation(U'#'));
  CHECK_FALSE(text::is_punctuation(U'😂'));
  CHECK_FALSE(text::is_punctuation(U'+'));
  CHECK(text::is_alphabetic(U'ß'));
  CHECK(text::is_uppercase(U'Θ'));
  CHECK(text::is_whitespace(U' '));
}

TEST_CASE("tokens and whitespace helpers") {
  CHECK(text::tokens("  a\tbb  c \n") == std::vector<std::string>{"a", "bb", "c"});
  CHECK(text::tokens("").empty());
  CHECK(text::trim("  x y \t") == "x y");
  CHECK(text::collapse_whitespace(" a \t b\n\nc ") == "a b c");
  CHECK(text::join({"a", "b", "c"}, "-") == "a-b-c");
}

TEST_CASE("case mapping and normalization") {
  CHECK(text::to_lower("ÉCOLE Straße") == "école straße");
  CHECK(text::case_fold("Straße") == "strasse");
  // e + combining acute composes to a single code point.
  CHECK(text::nfc("é") == "é");
  CHECK(text::dedup_key("  Café   AU  lait ") == text::dedup_key("café au LAIT"));
  CHECK(text::dedup_key("a b") != text::dedup_key("ab"));
}

TEST_CASE("fnv1a reference values") {
  CHECK(text::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(text::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(text::fnv1a("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("seeded generator is reproducible") {
  Rng a(99), b(99), c(100);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  bool differs = false;
  Rng d(99);
  for (int i = 0; i < 10; ++i) differs |= c.next() != d.next();
  CHECK(differs);
  Rng e(1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = e.below(7);
    CHECK(x < 7);
    const double u = e.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(mix_seeds({1, 2}) != mix_seeds({2, 1}));
}
