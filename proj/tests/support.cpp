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

#include "support.hpp"

#include <unistd.h>

#include <array>

#include "sarc/csv.hpp"
#include "sarc/io.hpp"

namespace sarc::testing {

namespace {

const std::vector<std::string> kPositiveCues = {"love",     "great",  "totally", "wonderful", "fantastic",
                                                "brilliant", "thrilled", "perfect", "amazing",  "sure"};
const std::vector<std::string> kNegativeCues = {"meeting", "report", "lunch",  "bus",    "schedule",
                                                "weather", "office", "update", "parcel", "invoice"};
const std::vector<std::string> kFiller = {"today", "again", "train", "morning", "phone", "coffee", "week", "city"};

std::string draw_text(Rng& rng, bool positive, std::size_t serial) {
  const auto& cues = positive ? kPositiveCues : kNegativeCues;
  std::vector<std::string> words;
  for (int i = 0; i < 3; ++i) words.push_back(cues[rng.below(cues.size())]);
  for (int i = 0; i < 3; ++i) words.push_back(kFiller[rng.below(kFiller.size())]);
  rng.shuffle(words);
  std::string text;
  for (const auto& w : words) text += w + " ";
  // A serial number keeps texts distinct so deduplication removes nothing.
  return text + "n" + std::to_string(serial);
}

}  // namespace

TempDir::TempDir() {
  static std::uint64_t counter = 0;
  Rng rng(mix_seeds({static_cast<std::uint64_t>(::getpid()), ++counter}));
  path_ = std::filesystem::temp_directory_path() / ("sarc-test-" + std::to_string(rng.next()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

Corpus separable_corpus(std::size_t n, std::uint64_t seed, const std::string& name) {
  Rng rng(seed);
  Corpus c{name, {}};
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    TextInstance t;
    t.id = name + "-" + std::to_string(i);
    const bool positive = i % 2 == 0;
    t.text = draw_text(rng, positive, i);
    t.sarcastic = positive;
    if (positive) {
      t.category_flags[positives % kNumCategories] = true;
      if (positives % 3 == 0) t.rephrase = "plainly the " + kNegativeCues[rng.below(kNegativeCues.size())] + " " +
                                           std::to_string(i);
      ++positives;
    }
    c.instances.push_back(std::move(t));
  }
  return c;
}

std::vector<std::string> separable_texts(std::size_t n, std::uint64_t seed, std::vector<bool>* labels) {
  Rng rng(seed);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(draw_text(rng, i % 2 == 0, 100000 + i));
    if (labels) labels->push_back(i % 2 == 0);
  }
  return out;
}

std::string random_noisy_text(Rng& rng) {
  static const std::vector<std::string> pieces = {
      "Hello", "WORLD", "i",     "I",          "NOT",     "funny", "the",   "A",        "is",
      "#tbt",  "@user", "3.5",   "-0.25",      "42",      "x2",    "!!!",   "...",      "(yes)",
      "don't", "Ünïcödé", "ÉCOLE", "https://t.co/x", "www.example.com", "¿qué?", "«quote»", "😂",
      "re-do", "a.b",   "NOW!",  "SO,",        "e.g.",    "café",  "ΑΘΗΝΑ", "straße", "'tis"};
  std::string s;
  const std::size_t n = rng.below(12);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += rng.below(5) == 0 ? "  " : (rng.below(9) == 0 ? "\t" : " ");
    s += pieces[rng.below(pieces.size())];
  }
  return s;
}

void write_isarcasm_csv(const Corpus& corpus, const std::filesystem::path& path) {
  std::string out = "tweet,sarcastic,rephrase,sarcasm,irony,satire,understatement,overstatement,rhetorical_question\n";
  for (const auto& inst : corpus.instances) {
    std::vector<std::string> row = {inst.text, inst.sarcastic ? (*inst.sarcastic ? "1" : "0") : "",
                                    inst.rephrase.value_or("")};
    for (bool f : inst.category_flags) row.push_back(inst.sarcastic == true ? (f ? "1" : "0") : "");
    out += csv::format_row(row) + "\n";
  }
  io::write_text(path, out);
}

}  // namespace sarc::testing
