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

#include "sarc/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "sarc/csv.hpp"
#include "sarc/error.hpp"
#include "sarc/io.hpp"
#include "sarc/log.hpp"
#include "sarc/random.hpp"
#include "sarc/text.hpp"

namespace sarc {

namespace {

constexpr std::array<std::string_view, kNumCategories> kCategoryNames = {
    "sarcasm", "irony", "satire", "understatement", "overstatement", "rhetorical_question"};

constexpr std::array<std::string_view, 6> kSourceNames = {
    "ISARCASM", "SEMEVAL18_TRAIN", "SEMEVAL18_TEST", "MUSTARD", "FIGLANG20", "AUGMENTED"};

std::optional<bool> parse_flag_cell(std::string_view raw) {
  const auto v = text::trim(raw);
  if (v.empty() || v == "0" || v == "0.0" || v == "false" || v == "False" || v == "FALSE") return false;
  if (v == "1" || v == "1.0" || v == "true" || v == "True" || v == "TRUE") return true;
  return std::nullopt;
}

std::string make_id(Source source, std::size_t row) {
  return text::to_lower(source_name(source)) + "-" + std::to_string(row);
}

// Drops rows whose id repeats (warn-and-drop) or throws (strict).
void enforce_unique_ids(Corpus& corpus, RowPolicy policy) {
  std::unordered_set<std::string> seen;
  std::vector<TextInstance> kept;
  kept.reserve(corpus.instances.size());
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    auto& inst = corpus.instances[i];
    if (!seen.insert(inst.id).second) {
      if (policy == RowPolicy::kStrict) throw ValidationError(i + 1, "duplicate id '" + inst.id + "'");
      log::get().warn("{}: dropping row {} with duplicate id '{}'", corpus.name, i + 1, inst.id);
      continue;
    }
    kept.push_back(std::move(inst));
  }
  corpus.instances = std::move(kept);
}

std::size_t require_column(const csv::Table& table, const std::string& name, const std::filesystem::path& path) {
  auto col = table.column(name);
  if (!col) throw LoadError(path.string() + ": missing required column '" + name + "'");
  return *col;
}

std::string cell(const std::vector<std::string>& row, std::size_t col) {
  return col < row.size() ? row[col] : std::string{};
}

}  // namespace

std::string_view category_name(Category c) { return kCategoryNames[static_cast<std::size_t>(c)]; }

Category parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kNumCategories; ++i)
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  // Accept the spaced spelling used in printed tables.
  if (name == "rhetorical question") return Category::kRhetoricalQuestion;
  throw SpecError("unknown category '" + std::string(name) + "'");
}

std::string_view source_name(Source s) { return kSourceNames[static_cast<std::size_t>(s)]; }

Source parse_source(std::string_view name) {
  const auto upper = [&] {
    std::string u(name);
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
    return u;
  }();
  for (std::size_t i = 0; i < kSourceNames.size(); ++i)
    if (kSourceNames[i] == upper) return static_cast<Source>(i);
  throw SpecError("unknown source '" + std::string(name) + "'");
}

void validate(const TextInstance& inst, std::size_t row) {
  if (text::trim(inst.text).empty()) throw ValidationError(row, "empty text");
  const bool any_flag = std::any_of(inst.category_flags.begin(), inst.category_flags.end(), [](bool b) { return b; });
  if (inst.sarcastic != true && any_flag)
    throw ValidationError(row, "category flags set on a non-sarcastic or unlabeled instance");
  if (inst.rephrase && inst.sarcastic != true) throw ValidationError(row, "rephrase present on a non-sarcastic instance");
}

void check_unique_ids(const Corpus& corpus) {
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < corpus.instances.size(); ++i)
    if (!seen.insert(corpus.instances[i].id).second)
      throw ValidationError(i + 1, "duplicate id '" + corpus.instances[i].id + "'");
}

Corpus load_isarcasm(const std::filesystem::path& path, const IsarcasmColumns& columns, RowPolicy policy) {
  const auto table = csv::read_file(path, columns.delimiter);
  if (table.header.empty()) throw LoadError(path.string() + ": no header row");

  const auto text_col = require_column(table, columns.text, path);
  const auto label_col = require_column(table, columns.sarcastic, path);
  const auto rephrase_col = require_column(table, columns.rephrase, path);
  std::array<std::size_t, kNumCategories> flag_cols{};
  for (std::size_t k = 0; k < kNumCategories; ++k) flag_cols[k] = require_column(table, columns.categories[k], path);

  Corpus corpus{path.stem().string(), {}};
  corpus.instances.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t row_no = r + 1;
    try {
      TextInstance inst;
      inst.id = make_id(Source::kIsarcasm, r);
      inst.source = Source::kIsarcasm;
      inst.text = cell(row, text_col);
      const auto label_raw = text::trim(cell(row, label_col));
      if (!label_raw.empty()) {
        auto label = parse_flag_cell(label_raw);
        if (!label) throw ValidationError(row_no, "unparseable sarcastic value '" + label_raw + "'");
        inst.sarcastic = *label;
      }
      for (std::size_t k = 0; k < kNumCategories; ++k) {
        auto flag = parse_flag_cell(cell(row, flag_cols[k]));
        if (!flag)
          throw ValidationError(row_no, "unparseable " + columns.categories[k] + " value '" + cell(row, flag_cols[k]) + "'");
        inst.category_flags[k] = *flag;
      }
      if (auto reph = cell(row, rephrase_col); !text::trim(reph).empty()) inst.rephrase = std::move(reph);
      validate(inst, row_no);
      corpus.instances.push_back(std::move(inst));
    } catch (const ValidationError& e) {
      if (policy == RowPolicy::kStrict) throw;
      log::get().warn("{}: dropping {}", path.string(), e.what());
    }
  }
  return corpus;
}

BinaryAdapter default_adapter(Source source) {
  BinaryAdapter a;
  a.label_map = {{"1", true},     {"0", false},         {"true", true},   {"false", false},
                 {"True", true},  {"False", false},     {"SARCASM", true}, {"NOT_SARCASM", false},
                 {"sarcasm", true}, {"not_sarcasm", false}};
  switch (source) {
    case Source::kSemEval18Train:
    case Source::kSemEval18Test:
      a.text_column = "Tweet text";
      a.label_column = "Label";
      a.id_column = "Tweet index";
      a.delimiter = '\t';
      break;
    case Source::kMustard:
      a.text_column = "utterance";
      a.label_column = "sarcasm";
      break;
    case Source::kFigLang20:
      a.text_column = "response";
      a.label_column = "label";
      break;
    case Source::kIsarcasm:
      a.text_column = "tweet";
      a.label_column = "sarcastic";
      break;
    case Source::kAugmented:
      a.text_column = "text";
      a.label_column = "sarcastic";
      break;
  }
  return a;
}

Corpus load_binary_source(const std::filesystem::path& path, Source source, const BinaryAdapter& adapter,
                          RowPolicy policy) {
  const auto table = csv::read_file(path, adapter.delimiter);
  if (table.header.empty()) throw LoadError(path.string() + ": no header row");
  const auto text_col = require_column(table, adapter.text_column, path);
  const auto label_col = require_column(table, adapter.label_column, path);
  std::optional<std::size_t> id_col;
  if (adapter.id_column) id_col = require_column(table, *adapter.id_column, path);

  const std::string prefix = text::to_lower(source_name(source)) + "-";
  Corpus corpus{path.stem().string(), {}};
  corpus.instances.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t row_no = r + 1;
    try {
      TextInstance inst;
      inst.source = source;
      inst.id = id_col ? prefix + text::trim(cell(row, *id_col)) : make_id(source, r);
      inst.text = cell(row, text_col);
      const auto raw = text::trim(cell(row, label_col));
      auto it = adapter.label_map.find(raw);
      if (it == adapter.label_map.end()) throw ValidationError(row_no, "unmappable label value '" + raw + "'");
      inst.sarcastic = it->second;
      validate(inst, row_no);
      corpus.instances.push_back(std::move(inst));
    } catch (const ValidationError& e) {
      if (policy == RowPolicy::kStrict) throw;
      log::get().warn("{}: dropping {}", path.string(), e.what());
    }
  }
  enforce_unique_ids(corpus, policy);
  return corpus;
}

std::string to_json_line(const TextInstance& inst) {
  nlohmann::ordered_json j;
  j["id"] = inst.id;
  j["text"] = inst.text;
  j["sarcastic"] = inst.sarcastic ? nlohmann::ordered_json(*inst.sarcastic) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json flags = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < kNumCategories; ++k) flags[std::string(kCategoryNames[k])] = inst.category_flags[k];
  j["category_flags"] = std::move(flags);
  j["rephrase"] = inst.rephrase ? nlohmann::ordered_json(*inst.rephrase) : nlohmann::ordered_json(nullptr);
  j["source"] = std::string(source_name(inst.source));
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

TextInstance from_json_line(std::string_view line, std::size_t row) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(row, std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError(row, "record is not an object");
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw ValidationError(row, std::string("missing field '") + key + "'");
    return j.at(key);
  };
  try {
    TextInstance inst;
    inst.id = need("id").get<std::string>();
    inst.text = need("text").get<std::string>();
    if (const auto& s = need("sarcastic"); !s.is_null()) inst.sarcastic = s.get<bool>();
    const auto& flags = need("category_flags");
    if (flags.is_array()) {
      if (flags.size() != kNumCategories) throw ValidationError(row, "category_flags must have six entries");
      for (std::size_t k = 0; k < kNumCategories; ++k) inst.category_flags[k] = flags[k].get<bool>();
    } else {
      for (std::size_t k = 0; k < kNumCategories; ++k) {
        const std::string name(kCategoryNames[k]);
        if (!flags.contains(name)) throw ValidationError(row, "category_flags missing '" + name + "'");
        inst.category_flags[k] = flags.at(name).get<bool>();
      }
    }
    if (j.contains("rephrase") && !j["rephrase"].is_null()) inst.rephrase = j["rephrase"].get<std::string>();
    inst.source = parse_source(need("source").get<std::string>());
    validate(inst, row);
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(row, std::string("bad field type: ") + e.what());
  } catch (const SpecError& e) {
    throw ValidationError(row, e.what());
  }
}

void write_jsonl(const Corpus& corpus, const std::filesystem::path& path) {
  std::string buf;
  for (const auto& inst : corpus.instances) {
    buf += to_json_line(inst);
    buf += '\n';
  }
  io::write_text(path, buf);
}

Corpus read_jsonl(const std::filesystem::path& path, RowPolicy policy) {
  const auto lines = io::read_lines(path);
  Corpus corpus{path.stem().string(), {}};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (text::trim(lines[i]).empty()) continue;
    try {
      corpus.instances.push_back(from_json_line(lines[i], i + 1));
    } catch (const ValidationError& e) {
      if (policy == RowPolicy::kStrict) throw;
      log::get().warn("{}: dropping {}", path.string(), e.what());
    }
  }
  enforce_unique_ids(corpus, policy);
  return corpus;
}

Corpus merge_dedup(const std::vector<Corpus>& corpora) {
  Corpus out;
  for (std::size_t i = 0; i < corpora.size(); ++i) {
    if (i) out.name += "+";
    out.name += corpora[i].name;
  }
  std::unordered_set<std::string> keys;
  std::unordered_set<std::string> ids;
  for (const auto& c : corpora) {
    for (const auto& inst : c.instances) {
      if (!keys.insert(text::dedup_key(inst.text)).second) continue;
      TextInstance copy = inst;
      if (!ids.insert(copy.id).second) {
        for (int n = 2;; ++n) {
          auto candidate = inst.id + "~" + std::to_string(n);
          if (ids.insert(candidate).second) {
            copy.id = std::move(candidate);
            break;
          }
        }
      }
      out.instances.push_back(std::move(copy));
    }
  }
  return out;
}

void validate(const SplitSpec& spec) {
  double sum = 0.0;
  for (double r : spec.ratios) {
    if (!(r >= 0.0 && r <= 1.0)) throw SpecError("split ratio " + std::to_string(r) + " outside [0, 1]");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw SpecError("split ratios sum to " + std::to_string(sum) + ", expected 1");
  if (spec.stratify_on != "sarcastic") parse_category(spec.stratify_on);
}

std::optional<bool> stratum_label(const TextInstance& inst, std::string_view key) {
  if (key == "sarcastic") return inst.sarcastic;
  if (!inst.sarcastic) return std::nullopt;
  return *inst.sarcastic && inst.flag(parse_category(key));
}

namespace {

// Largest-remainder apportionment of n items over the ratios; ties go to the
// earlier split.
std::array<std::size_t, 3> apportion(std::size_t n, const std::array<double, 3>& ratios) {
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> frac{};
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double q = ratios[k] * static_cast<double>(n);
    counts[k] = static_cast<std::size_t>(std::floor(q));
    frac[k] = q - std::floor(q);
    assigned += counts[k];
  }
  // Rounding in the floors can overshoot by one when ratios sum to 1+eps.
  while (assigned > n) {
    auto k = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    --counts[k];
    --assigned;
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
  for (std::size_t i = 0; assigned < n; i = (i + 1) % 3) {
    if (ratios[order[i]] > 0.0 || std::all_of(ratios.begin(), ratios.end(), [](double r) { return r == 0.0; })) {
      ++counts[order[i]];
      ++assigned;
    }
  }
  return counts;
}

}  // namespace

Splits stratified_split(const Corpus& corpus, const SplitSpec& spec) {
  validate(spec);
  if (corpus.empty()) throw SpecError("cannot split an empty corpus");

  // Stratum 0 = negative, 1 = positive.
  std::array<std::vector<std::size_t>, 2> strata;
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    auto label = stratum_label(corpus.instances[i], spec.stratify_on);
    if (!label)
      throw SpecError("instance '" + corpus.instances[i].id + "' has no '" + spec.stratify_on + "' label to stratify on");
    strata[*label ? 1 : 0].push_back(i);
  }

  std::array<std::vector<std::size_t>, 3> parts;
  for (std::size_t s = 0; s < strata.size(); ++s) {
    auto members = strata[s];
    if (members.empty()) continue;
    if (members.size() < 3)
      log::get().warn("split: stratum {}={} has {} instance(s), fewer than the 3 splits; assigned greedily",
                      spec.stratify_on, s == 1, members.size());
    Rng rng(mix_seeds({spec.seed, s}));
    rng.shuffle(members);
    const auto counts = apportion(members.size(), spec.ratios);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      parts[k].insert(parts[k].end(), members.begin() + static_cast<std::ptrdiff_t>(pos),
                      members.begin() + static_cast<std::ptrdiff_t>(pos + counts[k]));
      pos += counts[k];
    }
  }

  auto build = [&](std::vector<std::size_t>& idx, const char* suffix) {
    std::sort(idx.begin(), idx.end());
    Corpus c{corpus.name + "/" + suffix, {}};
    c.instances.reserve(idx.size());
    for (auto i : idx) c.instances.push_back(corpus.instances[i]);
    return c;
  };
  return {build(parts[0], "train"), build(parts[1], "validation"), build(parts[2], "test")};
}

std::string label_key(const TextInstance& inst) {
  if (!inst.sarcastic) return "unlabeled";
  if (!*inst.sarcastic) return "non-sarcastic";
  std::vector<std::string> names;
  for (std::size_t k = 0; k < kNumCategories; ++k)
    if (inst.category_flags[k]) names.emplace_back(kCategoryNames[k]);
  if (names.empty()) return "sarcastic-uncategorized";
  if (names.size() == 1) return "only-" + names.front();
  return text::join(names, "+");
}

LabelStats label_stats(const Corpus& corpus) {
  LabelStats stats;
  for (const auto& inst : corpus.instances) ++stats.counts[label_key(inst)];
  stats.total = corpus.size();
  return stats;
}

namespace {

// Display labels in the row order of the published label distribution.
const std::vector<std::pair<std::string_view, std::string_view>>& known_rows() {
  static const std::vector<std::pair<std::string_view, std::string_view>> rows = {
      {"non-sarcastic", "Non-sarcastic"},
      {"only-sarcasm", "Only-sarcasm"},
      {"only-irony", "Only-irony"},
      {"sarcasm+irony", "Sarcasm and irony"},
      {"sarcasm+satire", "Sarcasm and satire"},
      {"sarcasm+overstatement", "Sarcasm and overstatement"},
      {"sarcasm+understatement", "Sarcasm and understatement"},
      {"sarcasm+rhetorical_question", "Sarcasm and rhetorical questions"},
      {"irony+satire", "Irony and satire"},
      {"irony+overstatement", "Irony and overstatement"},
      {"irony+understatement", "Irony and understatement"},
      {"irony+rhetorical_question", "Irony and rhetorical question"},
      {"understatement+rhetorical_question", "Understatement and rhetorical question"},
      {"irony+understatement+rhetorical_question", "Irony, understatement and rhetorical question"},
      {"sarcasm+understatement+rhetorical_question", "Sarcasm, understatement and rhetorical question"},
  };
  return rows;
}

std::string display_label(const std::string& key) {
  if (key == "unlabeled") return "Unlabeled";
  if (key == "sarcastic-uncategorized") return "Sarcastic, uncategorized";
  std::string body = key.starts_with("only-") ? key.substr(5) : key;
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto plus = body.find('+', start);
    auto p = body.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::replace(p.begin(), p.end(), '_', ' ');
    parts.push_back(std::move(p));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  std::string out;
  if (key.starts_with("only-")) {
    out = "Only-" + parts.front();
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == 0) out = parts[i];
      else if (i + 1 == parts.size()) out += " and " + parts[i];
      else out += ", " + parts[i];
    }
    if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::size_t>> stats_rows(const LabelStats& stats) {
  std::vector<std::pair<std::string, std::size_t>> rows;
  std::set<std::string> emitted;
  for (const auto& [key, label] : known_rows()) {
    auto it = stats.counts.find(std::string(key));
    if (it == stats.counts.end()) continue;
    rows.emplace_back(std::string(label), it->second);
    emitted.insert(it->first);
  }
  for (const auto& [key, count] : stats.counts)
    if (!emitted.count(key)) rows.emplace_back(display_label(key), count);
  rows.emplace_back("Total", stats.total);
  return rows;
}

Corpus inject_rephrases(const Corpus& corpus) {
  Corpus out = corpus;
  std::unordered_set<std::string> keys;
  std::unordered_set<std::string> ids;
  for (const auto& inst : corpus.instances) {
    keys.insert(text::dedup_key(inst.text));
    ids.insert(inst.id);
  }
  std::size_t skipped = 0;
  for (const auto& inst : corpus.instances) {
    if (!inst.rephrase) continue;
    if (!keys.insert(text::dedup_key(*inst.rephrase)).second) {
      ++skipped;
      continue;
    }
    TextInstance r;
    r.id = inst.id + "-rephrase";
    for (int n = 2; !ids.insert(r.id).second; ++n) r.id = inst.id + "-rephrase~" + std::to_string(n);
    r.text = *inst.rephrase;
    r.sarcastic = false;
    r.source = inst.source;
    out.instances.push_back(std::move(r));
  }
  if (skipped) log::get().info("inject_rephrases: skipped {} rephrase(s) already present in the corpus", skipped);
  return out;
}

Corpus build_label_dataset(const Corpus& sarcastic_corpus, Category label, const Corpus& augmented) {
  const auto k = static_cast<std::size_t>(label);
  Corpus out{"label:" + std::string(category_name(label)), {}};
  out.instances.reserve(sarcastic_corpus.size() + augmented.size());
  std::size_t positives = 0;

  auto collapse = [&](const TextInstance& src, bool positive) {
    TextInstance t;
    t.id = src.id;
    t.text = src.text;
    t.source = src.source;
    t.sarcastic = positive;
    t.category_flags[k] = positive;
    positives += positive;
    out.instances.push_back(std::move(t));
  };

  for (const auto& inst : sarcastic_corpus.instances) {
    if (inst.sarcastic != true)
      throw DatasetError("label dataset '" + std::string(category_name(label)) + "': instance '" + inst.id +
                         "' is not sarcastic");
    collapse(inst, inst.category_flags[k]);
  }
  for (const auto& inst : augmented.instances) {
    if (!inst.category_flags[k])
      throw DatasetError("label dataset '" + std::string(category_name(label)) + "': augmented instance '" + inst.id +
                         "' lacks the label");
    collapse(inst, true);
  }
  if (positives == 0)
    throw DatasetError("label dataset '" + std::string(category_name(label)) + "' has zero positive instances");
  check_unique_ids(out);
  return out;
}

}  // namespace sarc
