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

#include "sarc/augment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <unordered_set>

#include "sarc/error.hpp"
#include "sarc/log.hpp"
#include "sarc/random.hpp"
#include "sarc/text.hpp"

namespace sarc {

namespace {

// Byte range of the core inside its token.
struct Core {
  std::size_t begin;
  std::size_t end;
};

std::optional<Core> find_core(std::string_view token) {
  if (token.find_first_of("@#") != std::string_view::npos) return std::nullopt;
  if (token.find("://") != std::string_view::npos) return std::nullopt;
  const auto cps = text::decode(token);
  std::size_t first = 0, last = cps.size();
  while (first < last && cps[first].valid && text::is_punctuation(cps[first].value)) ++first;
  while (last > first && cps[last - 1].valid && text::is_punctuation(cps[last - 1].value)) --last;
  if (first == last) return std::nullopt;
  for (std::size_t i = first; i < last; ++i)
    if (!cps[i].valid || !text::is_alphabetic(cps[i].value)) return std::nullopt;
  const auto lower4 = text::to_lower(token.substr(cps[first].offset, 4));
  if (lower4 == "www.") return std::nullopt;
  return Core{cps[first].offset, cps[last - 1].offset + cps[last - 1].length};
}

bool usable_filler(const std::string& filler, std::string_view original_core) {
  if (filler.empty() || text::tokens(filler).size() != 1) return false;
  return text::case_fold(filler) != text::case_fold(original_core);
}

struct VariantResult {
  std::string text;
  std::size_t replaced = 0;
};

VariantResult make_variant(std::string_view source, const std::vector<text::Span>& spans,
                           const std::vector<std::pair<std::size_t, Core>>& maskable, std::size_t target,
                           const AugmentConfig& config, const Masker& masker, Rng& rng) {
  std::vector<std::string> tokens;
  tokens.reserve(spans.size());
  for (const auto& sp : spans) tokens.emplace_back(source.substr(sp.begin, sp.end - sp.begin));

  // Random visiting order over the maskable positions.
  std::vector<std::size_t> order(maskable.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);

  std::vector<std::optional<std::string>> replacement(spans.size());
  std::size_t replaced = 0;
  for (std::size_t oi = 0; oi < order.size() && replaced < target; ++oi) {
    const auto [pos, core] = maskable[order[oi]];
    const std::string original_core = tokens[pos].substr(core.begin, core.end - core.begin);
    std::vector<std::string> context = tokens;
    context[pos] = original_core;
    auto proposed = masker.candidates(context, pos, config.top_k + 1);
    std::vector<std::string> usable;
    for (auto& c : proposed)
      if (usable.size() < config.top_k && usable_filler(c.token, original_core)) usable.push_back(std::move(c.token));
    if (usable.empty()) continue;
    const auto& choice = usable[rng.below(usable.size())];
    std::string rebuilt = tokens[pos].substr(0, core.begin) + choice + tokens[pos].substr(core.end);
    tokens[pos] = rebuilt;
    replacement[pos] = std::move(rebuilt);
    ++replaced;
  }

  VariantResult out;
  out.replaced = replaced;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (!replacement[i]) continue;
    out.text.append(source.substr(cursor, spans[i].begin - cursor));
    out.text.append(*replacement[i]);
    cursor = spans[i].end;
  }
  out.text.append(source.substr(cursor));
  return out;
}

}  // namespace

void validate(const AugmentConfig& config) {
  if (config.variants_per_input < 1) throw ConfigError("augment.variants_per_input must be >= 1");
  if (!(config.replace_fraction > 0.0 && config.replace_fraction <= 1.0))
    throw ConfigError("augment.replace_fraction must be in (0, 1]");
  if (config.top_k < 1) throw ConfigError("augment.top_k must be >= 1");
}

std::optional<std::string> maskable_core(std::string_view token) {
  auto core = find_core(token);
  if (!core) return std::nullopt;
  return std::string(token.substr(core->begin, core->end - core->begin));
}

std::size_t replacement_count(std::size_t maskable, double fraction) {
  if (maskable == 0) return 0;
  // The epsilon keeps 0.3 * 10 (3.0000000000000004 in binary) at 3.
  const auto n = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(maskable) - 1e-9));
  return std::clamp<std::size_t>(n, 1, maskable);
}

std::vector<TextInstance> augment_instance(const TextInstance& instance, const AugmentConfig& config,
                                           const Masker& masker) {
  validate(config);
  const auto spans = text::token_spans(instance.text);
  std::vector<std::pair<std::size_t, Core>> maskable;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const auto token = std::string_view(instance.text).substr(spans[i].begin, spans[i].end - spans[i].begin);
    if (auto core = find_core(token)) maskable.emplace_back(i, *core);
  }
  if (maskable.empty()) {
    log::get().warn("augment: '{}' has no maskable token; no variants produced", instance.id);
    return {};
  }
  const std::size_t target = replacement_count(maskable.size(), config.replace_fraction);
  const std::uint64_t id_hash = text::fnv1a(instance.id);

  std::unordered_set<std::string> seen{text::dedup_key(instance.text)};
  std::vector<TextInstance> out;
  out.reserve(config.variants_per_input);
  for (std::size_t v = 0; v < config.variants_per_input; ++v) {
    VariantResult chosen;
    for (std::size_t attempt = 0; attempt <= config.max_resamples; ++attempt) {
      Rng rng(mix_seeds({config.seed, id_hash, v, attempt}));
      auto variant = make_variant(instance.text, spans, maskable, target, config, masker, rng);
      if (variant.replaced == 0) {
        log::get().warn("augment: masker '{}' proposed no usable filler for '{}'; no variants produced", masker.id(),
                        instance.id);
        return {};
      }
      const bool fresh = !seen.count(text::dedup_key(variant.text));
      if (fresh || attempt == config.max_resamples) {
        if (!fresh)
          log::get().warn("augment: variant {} of '{}' still duplicates a sibling after {} resamples; kept", v + 1,
                          instance.id, config.max_resamples);
        chosen = std::move(variant);
        break;
      }
    }
    seen.insert(text::dedup_key(chosen.text));

    TextInstance syn;
    syn.id = instance.id + "-aug" + std::to_string(v + 1);
    syn.text = std::move(chosen.text);
    syn.sarcastic = instance.sarcastic;
    syn.category_flags = instance.category_flags;
    syn.source = Source::kAugmented;
    out.push_back(std::move(syn));
  }
  return out;
}

Corpus augment_corpus(const Corpus& corpus, std::optional<Category> label_filter, const AugmentConfig& config,
                      const Masker& masker, Execution exec) {
  validate(config);
  std::vector<const TextInstance*> selected;
  for (const auto& inst : corpus.instances) {
    if (label_filter && !(inst.sarcastic == true && inst.flag(*label_filter))) continue;
    selected.push_back(&inst);
  }

  std::vector<std::vector<TextInstance>> results(selected.size());
  const auto n = static_cast<std::ptrdiff_t>(selected.size());
  if (exec == Execution::kSerial) {
    for (std::ptrdiff_t i = 0; i < n; ++i)
      results[static_cast<std::size_t>(i)] = augment_instance(*selected[static_cast<std::size_t>(i)], config, masker);
  } else {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        results[static_cast<std::size_t>(i)] = augment_instance(*selected[static_cast<std::size_t>(i)], config, masker);
      } catch (...) {
#pragma omp critical(sarc_augment_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }

  Corpus out{corpus.name + "/augmented", {}};
  for (auto& r : results)
    for (auto& inst : r) out.instances.push_back(std::move(inst));
  return out;
}

}  // namespace sarc
