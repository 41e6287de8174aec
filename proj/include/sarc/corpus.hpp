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

// Corpus ingestion, the line-delimited interchange format, merging with
// duplicate elimination, stratified splitting and label statistics.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sarc {

// The six irony categories, in the fixed order used for flags, stats keys
// and task-B submissions.
enum class Category : std::uint8_t {
  kSarcasm = 0,
  kIrony,
  kSatire,
  kUnderstatement,
  kOverstatement,
  kRhetoricalQuestion,
};
inline constexpr std::size_t kNumCategories = 6;
inline constexpr std::array<Category, kNumCategories> kAllCategories = {
    Category::kSarcasm,        Category::kIrony,         Category::kSatire,
    Category::kUnderstatement, Category::kOverstatement, Category::kRhetoricalQuestion};

std::string_view category_name(Category c);
// Throws SpecError for unknown names.
Category parse_category(std::string_view name);

using CategoryFlags = std::array<bool, kNumCategories>;

enum class Source : std::uint8_t {
  kIsarcasm,
  kSemEval18Train,
  kSemEval18Test,
  kMustard,
  kFigLang20,
  kAugmented,
};

std::string_view source_name(Source s);
Source parse_source(std::string_view name);

struct TextInstance {
  std::string id;
  std::string text;
  std::optional<bool> sarcastic;
  CategoryFlags category_flags{};
  std::optional<std::string> rephrase;
  Source source = Source::kIsarcasm;

  bool flag(Category c) const { return category_flags[static_cast<std::size_t>(c)]; }
  bool operator==(const TextInstance&) const = default;
};

// Throws ValidationError(row, ...) when an instance invariant is violated.
void validate(const TextInstance& inst, std::size_t row);

struct Corpus {
  std::string name;
  std::vector<TextInstance> instances;

  std::size_t size() const { return instances.size(); }
  bool empty() const { return instances.empty(); }
  bool operator==(const Corpus&) const = default;
};

// Throws ValidationError when two instances share an id.
void check_unique_ids(const Corpus& corpus);

enum class RowPolicy {
  kStrict,       // invalid rows are errors
  kWarnAndDrop,  // invalid rows are logged and skipped
};

// Column names of the official task file. Defaults match the released
// training CSV.
struct IsarcasmColumns {
  std::string text = "tweet";
  std::string sarcastic = "sarcastic";
  std::string rephrase = "rephrase";
  std::array<std::string, kNumCategories> categories = {
      "sarcasm", "irony", "satire", "understatement", "overstatement", "rhetorical_question"};
  char delimiter = ',';
};

Corpus load_isarcasm(const std::filesystem::path& path, const IsarcasmColumns& columns = {},
                     RowPolicy policy = RowPolicy::kStrict);

// Maps a source's text column and binary label column onto TextInstance.
struct BinaryAdapter {
  std::string text_column;
  std::string label_column;
  // Raw cell value (after trimming) -> sarcastic.
  std::map<std::string, bool, std::less<>> label_map;
  std::optional<std::string> id_column;
  char delimiter = ',';
};

// Adapters for the auxiliary corpora in their commonly distributed layouts
// (SemEval-2018 task 3 TSV; MUStARD and FigLang-2020 flattened to CSV).
BinaryAdapter default_adapter(Source source);

Corpus load_binary_source(const std::filesystem::path& path, Source source, const BinaryAdapter& adapter,
                          RowPolicy policy = RowPolicy::kStrict);

// Interchange format: one JSON object per line with the TextInstance fields.
std::string to_json_line(const TextInstance& inst);
TextInstance from_json_line(std::string_view line, std::size_t row);
void write_jsonl(const Corpus& corpus, const std::filesystem::path& path);
Corpus read_jsonl(const std::filesystem::path& path, RowPolicy policy = RowPolicy::kStrict);

// Concatenates in argument order, dropping instances whose dedup key was
// already seen; the first occurrence wins. Ids colliding across inputs get a
// "~N" suffix so the result keeps unique ids.
Corpus merge_dedup(const std::vector<Corpus>& corpora);

// Stratification key: "sarcastic" or a category name.
struct SplitSpec {
  std::array<double, 3> ratios{0.7, 0.2, 0.1};
  std::uint64_t seed = 42;
  std::string stratify_on = "sarcastic";
};

void validate(const SplitSpec& spec);

struct Splits {
  Corpus train;
  Corpus validation;
  Corpus test;
};

// Each stratum is shuffled with a seeded generator and cut by the
// largest-remainder rule, so every split is within one instance of
// ratio x stratum size. Instances keep their input order within a split.
Splits stratified_split(const Corpus& corpus, const SplitSpec& spec);

struct LabelStats {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
};

// "non-sarcastic", "unlabeled", "sarcastic-uncategorized", "only-<c>", or
// categories joined by '+' in flag order (e.g. "sarcasm+rhetorical_question").
std::string label_key(const TextInstance& inst);
LabelStats label_stats(const Corpus& corpus);

// Rows for display: label text and count, known combinations first in the
// conventional table order, then any other observed keys, then "Total".
std::vector<std::pair<std::string, std::size_t>> stats_rows(const LabelStats& stats);

// Appends one non-sarcastic instance per author rephrase, skipping rephrases
// whose dedup key is already present.
Corpus inject_rephrases(const Corpus& corpus);

// Binary dataset for one category. Positives: sarcastic instances carrying
// the label plus all of `augmented`; negatives: sarcastic instances without
// it. The label is stored in `sarcastic`; flags keep only `label`.
Corpus build_label_dataset(const Corpus& sarcastic_corpus, Category label, const Corpus& augmented);

// Training label for a stratification key.
std::optional<bool> stratum_label(const TextInstance& inst, std::string_view key);

}  // namespace sarc
