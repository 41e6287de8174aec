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

// Tweet normalization: selective lowercasing, noise stripping (links,
// usernames, decimal numbers, punctuation) and stopword removal. No
// stemming or lemmatization is ever applied.

#pragma once

#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sarc {

using StopwordList = std::set<std::string, std::less<>>;

enum class PreprocessStep { kSelectiveLowercase, kStripNoise, kRemoveStopwords };

std::string_view step_name(PreprocessStep step);
// Throws ConfigError naming the step.
PreprocessStep parse_step(std::string_view name);

// Bundled English list (data/stopwords/english-v1.txt).
const StopwordList& default_stopwords();
// One token per line, '#' starts a comment. Entries are case folded.
StopwordList load_stopwords(const std::filesystem::path& path);
StopwordList parse_stopwords(std::string_view content);

struct PreprocessConfig {
  bool enable_case = true;
  bool enable_stopwords = true;
  bool enable_clean = true;
  StopwordList stopword_list = default_stopwords();
  // Names of the enabled steps in application order. Empty means the default
  // order: selective_lowercase, strip_noise, remove_stopwords.
  std::vector<std::string> step_order;
  // All-caps tokens (those selective_lowercase leaves alone) are emphasis and
  // survive stopword removal.
  bool keep_uppercase_stopwords = true;

  static PreprocessConfig identity();
};

// Throws ConfigError on unknown or duplicated step names, a step order that
// is not a permutation of the enabled steps, or an empty stopword list with
// stopword removal enabled.
void validate(const PreprocessConfig& config);
std::vector<PreprocessStep> resolved_steps(const PreprocessConfig& config);

// True when the token has at least two alphabetic characters and all of them
// are uppercase.
bool is_all_caps_word(std::string_view token);

// Lowercases every whitespace-delimited token except all-caps words.
// Whitespace between tokens is preserved.
std::string selective_lowercase(std::string_view text);

// Drops URL, @username and standalone decimal-number tokens, deletes
// punctuation characters from the rest, and joins survivors with one space.
std::string strip_noise(std::string_view text);

// Drops tokens whose case-folded form is listed. Throws ConfigError when the
// list is empty.
std::string remove_stopwords(std::string_view text, const StopwordList& stopwords,
                             bool keep_all_caps = false);

std::string preprocess(std::string_view text, const PreprocessConfig& config);
std::vector<std::string> preprocess_all(const std::vector<std::string>& texts, const PreprocessConfig& config);

}  // namespace sarc
