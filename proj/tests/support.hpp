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

// Helpers shared by the test binaries: scratch directories and synthetic
// corpora whose labels a tiny encoder can learn.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sarc/corpus.hpp"
#include "sarc/random.hpp"

namespace sarc::testing {

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Positives draw their cue words from one vocabulary and negatives from a
// disjoint one, mixed with shared filler. Every third positive carries a
// rephrase; category flags cycle through all six labels.
Corpus separable_corpus(std::size_t n, std::uint64_t seed, const std::string& name = "synthetic");

// Texts alone, drawn the same way; label i is (i % 2 == 0).
std::vector<std::string> separable_texts(std::size_t n, std::uint64_t seed, std::vector<bool>* labels = nullptr);

// Random printable text including URLs, mentions, decimals, punctuation,
// mixed case and non-ASCII letters.
std::string random_noisy_text(Rng& rng);

// Writes the corpus in the official comma-separated layout.
void write_isarcasm_csv(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace sarc::testing
