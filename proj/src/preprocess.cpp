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

#include "sarc/preprocess.hpp"

#include <algorithm>
#include <array>
#include <regex>

#include "sarc/error.hpp"
#include "sarc/io.hpp"
#include "sarc/text.hpp"

namespace sarc {

extern const char* const kEnglishStopwordsV1;

namespace {

constexpr std::array<std::string_view, 3> kStepNames = {"selective_lowercase", "strip_noise", "remove_stopwords"};

bool is_ascii_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Token with leading/trailing punctuation removed.
std::string_view punct_core(std::string_view token, bool keep_leading_at) {
  const auto cps = text::decode(token);
  std::size_t first = 0;
  while (first < cps.size() && cps[first].valid && text::is_punctuation(cps[first].value) &&
         !(keep_leading_at && cps[first].value == U'@'))
    ++first;
  std::size_t last = cps.size();
  while (last > first && cps[last - 1].valid && text::is_punctuation(cps[last - 1].value)) --last;
  if (first >= last) return {};
  const std::size_t begin = cps[first].offset;
  const std::size_t end = cps[last - 1].offset + cps[last - 1].length;
  return token.substr(begin, end - begin);
}

bool is_url(std::string_view core) {
  std::string lower;
  for (char c : core) lower += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  if (lower.starts_with("www.")) return true;
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) followed by "://"
  const auto sep = lower.find("://");
  if (sep == std::string::npos || sep == 0) return false;
  if (!(lower[0] >= 'a' && lower[0] <= 'z')) return false;
  return std::all_of(lower.begin(), lower.begin() + static_cast<std::ptrdiff_t>(sep),
                     [](char c) { return is_ascii_alnum(c) || c == '+' || c == '-' || c == '.'; });
}

bool is_username(std::string_view core_with_at) {
  if (core_with_at.size() < 2 || core_with_at[0] != '@') return false;
  const auto cps = text::decode(core_with_at.substr(1));
  return !cps.empty() && cps[0].valid && (text::is_alphabetic(cps[0].value) || cps[0].value == U'_' ||
                                          (cps[0].value >= U'0' && cps[0].value <= U'9'));
}

bool is_decimal(std::string_view core) {
  static const std::regex pattern(R"([+-]?[0-9]*\.[0-9]+)");
  return std::regex_match(core.begin(), core.end(), pattern);
}

std::string drop_punctuation(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (const auto& cp : text::decode(token)) {
    if (cp.valid && text::is_punctuation(cp.value)) continue;
    out.append(token.substr(cp.offset, cp.length));
  }
  return out;
}

}  // namespace

std::string_view step_name(PreprocessStep step) { return kStepNames[static_cast<std::size_t>(step)]; }

PreprocessStep parse_step(std::string_view name) {
  for (std::size_t i = 0; i < kStepNames.size(); ++i)
    if (kStepNames[i] == name) return static_cast<PreprocessStep>(i);
  throw ConfigError("unknown preprocessing step '" + std::string(name) + "'");
}

StopwordList parse_stopwords(std::string_view content) {
  StopwordList list;
  std::size_t start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    auto line = content.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto word = text::trim(line);
    if (!word.empty()) list.insert(text::case_fold(word));
    start = end + 1;
  }
  return list;
}

const StopwordList& default_stopwords() {
  static const StopwordList list = parse_stopwords(kEnglishStopwordsV1);
  return list;
}

StopwordList load_stopwords(const std::filesystem::path& path) { return parse_stopwords(io::read_text(path)); }

PreprocessConfig PreprocessConfig::identity() {
  PreprocessConfig c;
  c.enable_case = c.enable_clean = c.enable_stopwords = false;
  return c;
}

std::vector<PreprocessStep> resolved_steps(const PreprocessConfig& config) {
  std::array<bool, 3> enabled = {config.enable_case, config.enable_clean, config.enable_stopwords};
  std::vector<PreprocessStep> steps;
  if (config.step_order.empty()) {
    for (std::size_t i = 0; i < 3; ++i)
      if (enabled[i]) steps.push_back(static_cast<PreprocessStep>(i));
    return steps;
  }
  std::array<bool, 3> seen{};
  for (const auto& name : config.step_order) {
    const auto step = parse_step(name);
    const auto i = static_cast<std::size_t>(step);
    if (seen[i]) throw ConfigError("step_order lists '" + name + "' twice");
    if (!enabled[i]) throw ConfigError("step_order lists '" + name + "' but that step is disabled");
    seen[i] = true;
    steps.push_back(step);
  }
  for (std::size_t i = 0; i < 3; ++i)
    if (enabled[i] && !seen[i])
      throw ConfigError("step_order omits enabled step '" + std::string(kStepNames[i]) + "'");
  return steps;
}

void validate(const PreprocessConfig& config) {
  resolved_steps(config);
  if (config.enable_stopwords && config.stopword_list.empty())
    throw ConfigError("stopword_list is empty but remove_stopwords is enabled");
}

bool is_all_caps_word(std::string_view token) {
  std::size_t alpha = 0;
  for (const auto& cp : text::decode(token)) {
    if (!cp.valid || !text::is_alphabetic(cp.value)) continue;
    if (!text::is_uppercase(cp.value)) return false;
    ++alpha;
  }
  return alpha >= 2;
}

std::string selective_lowercase(std::string_view input) {
  std::string out;
  out.reserve(input.size());
  std::size_t pos = 0;
  for (const auto& sp : text::token_spans(input)) {
    out.append(input.substr(pos, sp.begin - pos));
    const auto token = input.substr(sp.begin, sp.end - sp.begin);
    if (is_all_caps_word(token)) out.append(token);
    else out.append(text::to_lower(token));
    pos = sp.end;
  }
  out.append(input.substr(pos));
  return out;
}

std::string strip_noise(std::string_view input) {
  std::vector<std::string> kept;
  for (const auto& sp : text::token_spans(input)) {
    const auto token = input.substr(sp.begin, sp.end - sp.begin);
    const auto core = punct_core(token, false);
    if (is_url(core) || is_decimal(core) || is_username(punct_core(token, true))) continue;
    auto cleaned = drop_punctuation(token);
    if (!cleaned.empty()) kept.push_back(std::move(cleaned));
  }
  return text::join(kept, " ");
}

std::string remove_stopwords(std::string_view input, const StopwordList& stopwords, bool keep_all_caps) {
  if (stopwords.empty()) throw ConfigError("stopword_list is empty");
  std::vector<std::string> kept;
  for (auto& token : text::tokens(input)) {
    const bool listed = stopwords.count(text::case_fold(token)) > 0;
    if (!listed || (keep_all_caps && is_all_caps_word(token))) kept.push_back(std::move(token));
  }
  return text::join(kept, " ");
}

std::string preprocess(std::string_view input, const PreprocessConfig& config) {
  validate(config);
  std::string current(input);
  for (const auto step : resolved_steps(config)) {
    switch (step) {
      case PreprocessStep::kSelectiveLowercase:
        current = selective_lowercase(current);
        break;
      case PreprocessStep::kStripNoise:
        current = strip_noise(current);
        break;
      case PreprocessStep::kRemoveStopwords:
        current = remove_stopwords(current, config.stopword_list, config.keep_uppercase_stopwords);
        break;
    }
  }
  return current;
}

std::vector<std::string> preprocess_all(const std::vector<std::string>& texts, const PreprocessConfig& config) {
  validate(config);
  std::vector<std::string> out(texts.size());
  const auto n = static_cast<std::ptrdiff_t>(texts.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = preprocess(texts[static_cast<std::size_t>(i)], config);
  return out;
}

}  // namespace sarc
