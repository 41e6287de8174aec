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

#include "sarc/encoder.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>

#include "sarc/error.hpp"
#include "sarc/io.hpp"
#include "sarc/log.hpp"
#include "sarc/metrics.hpp"
#include "sarc/random.hpp"
#include "sarc/text.hpp"

namespace sarc {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

const std::vector<EncoderInfo>& registry() {
  static const std::vector<EncoderInfo> entries = [] {
    std::vector<EncoderInfo> e;
    // Offline stand-ins sharing each family's positional capacity and
    // special-token placement.
    e.push_back({"tiny", 512, SpecialTokenLayout::kStartEnd, true, {}});
    e.push_back({"tiny-bert", 512, SpecialTokenLayout::kStartEnd, true, {}});
    e.push_back({"tiny-roberta", 512, SpecialTokenLayout::kStartEnd, true, {}});
    e.push_back({"tiny-xlnet", 4096, SpecialTokenLayout::kEndCls, true, {}});
    e.push_back({"tiny-distilbert", 512, SpecialTokenLayout::kStartEnd, true, {}});
    e.push_back({"bert-base-uncased", 512, SpecialTokenLayout::kStartEnd, false, {}});
    e.push_back({"roberta-base", 512, SpecialTokenLayout::kStartEnd, false, {}});
    e.push_back({"xlnet-base-cased", kUnbounded, SpecialTokenLayout::kEndCls, false, {}});
    e.push_back({"distilbert-base-uncased", 512, SpecialTokenLayout::kStartEnd, false, {}});
    return e;
  }();
  return entries;
}

double cross_entropy(double p_positive, bool label) {
  const double p = label ? p_positive : 1.0 - p_positive;
  return -std::log(std::max(p, 1e-300));
}

}  // namespace

std::string_view freeze_policy_name(FreezePolicy p) {
  switch (p) {
    case FreezePolicy::kHeadAndLastLayers:
      return "HEAD_AND_LAST_LAYERS";
    case FreezePolicy::kHeadOnly:
      return "HEAD_ONLY";
    case FreezePolicy::kFull:
      return "FULL";
  }
  return "?";
}

FreezePolicy parse_freeze_policy(std::string_view name) {
  if (name == "HEAD_AND_LAST_LAYERS") return FreezePolicy::kHeadAndLastLayers;
  if (name == "HEAD_ONLY") return FreezePolicy::kHeadOnly;
  if (name == "FULL") return FreezePolicy::kFull;
  throw ConfigError("unknown freeze_policy '" + std::string(name) + "'");
}

HyperParams hyperparams_preset(std::string_view name) {
  HyperParams h;
  if (name == "roberta") {
    h.learning_rate = 2e-6;
    h.max_seq_len = 256;
    h.batch_size = 16;
    h.epochs = 10;
  } else if (name == "bert") {
    h.learning_rate = 2e-5;
    h.max_seq_len = 128;
    h.batch_size = 32;
    h.epochs = 3;
  } else if (name == "xlnet") {
    h.learning_rate = 2e-5;
    h.max_seq_len = 128;
    h.batch_size = 32;
    h.epochs = 4;
  } else if (name == "distilbert") {
    // As published; exceeds a 512-position encoder and is rejected at build.
    h.learning_rate = 5e-5;
    h.max_seq_len = 1213;
    h.batch_size = 16;
    h.epochs = 5;
  } else {
    throw ConfigError("unknown hyper-parameter preset '" + std::string(name) + "'");
  }
  return h;
}

std::vector<std::string> hyperparams_preset_names() { return {"roberta", "bert", "xlnet", "distilbert"}; }

const EncoderInfo& lookup_encoder(std::string_view id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw RegistryError("unknown encoder_id '" + std::string(id) + "'");
}

std::vector<std::string> registered_encoders() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.id);
  return ids;
}

std::unique_ptr<Masker> resolve_masker(std::string_view masker_id, const Corpus* fit_corpus) {
  if (masker_id == "test-lookup") return std::make_unique<LookupMasker>();
  if (masker_id == "bigram-context") {
    if (!fit_corpus) throw ConfigError("masker 'bigram-context' needs a corpus to fit on");
    return std::make_unique<BigramMasker>(*fit_corpus);
  }
  for (const auto& e : registry()) {
    if (e.id == masker_id && !e.offline)
      throw EnvironmentError("masked language model '" + std::string(masker_id) +
                             "' needs pretrained weights that this build cannot load; use 'bigram-context' or "
                             "'test-lookup'");
  }
  throw RegistryError("unknown masker_id '" + std::string(masker_id) + "'");
}

Tokenizer::Tokenizer(const EncoderInfo& info, std::size_t max_seq_len) : info_(&info), max_seq_len_(max_seq_len) {
  if (max_seq_len < 3) throw ConfigError("max_seq_len must be at least 3 to fit the special tokens and one word");
}

Encoding Tokenizer::encode(std::string_view preprocessed_text) const {
  const auto words = text::tokens(preprocessed_text);
  const std::size_t budget = max_seq_len_ - 2;
  const std::size_t kept = std::min(words.size(), budget);
  const std::size_t buckets = info_->arch.hash_buckets;

  Encoding enc;
  enc.ids.reserve(max_seq_len_);
  auto word_id = [&](const std::string& w) {
    return static_cast<std::uint32_t>(ArchConfig::kNumSpecial + text::fnv1a(w) % buckets);
  };
  if (info_->layout == SpecialTokenLayout::kStartEnd) {
    enc.ids.push_back(ArchConfig::kStartId);
    for (std::size_t i = 0; i < kept; ++i) enc.ids.push_back(word_id(words[i]));
    enc.ids.push_back(ArchConfig::kEndId);
    enc.pool_index = 0;
  } else {
    for (std::size_t i = 0; i < kept; ++i) enc.ids.push_back(word_id(words[i]));
    enc.ids.push_back(ArchConfig::kEndId);
    enc.ids.push_back(ArchConfig::kStartId);
    enc.pool_index = enc.ids.size() - 1;
  }
  enc.length = enc.ids.size();
  enc.ids.resize(max_seq_len_, ArchConfig::kPadId);
  return enc;
}

void validate(const HyperParams& h) {
  if (!(h.learning_rate > 0.0) || !std::isfinite(h.learning_rate))
    throw ConfigError("hparams.learning_rate must be a positive number");
  if (h.max_seq_len == 0) throw ConfigError("hparams.max_seq_len must be positive");
  if (h.batch_size == 0) throw ConfigError("hparams.batch_size must be positive");
  if (!(h.weight_decay >= 0.0)) throw ConfigError("hparams.weight_decay must be non-negative");
  if (!(h.warmup_fraction >= 0.0 && h.warmup_fraction <= 1.0))
    throw ConfigError("hparams.warmup_fraction must be in [0, 1]");
}

ClassifierHandle build_classifier(const EncoderSpec& spec, const HyperParams& hparams) {
  validate(hparams);
  if (spec.num_classes < 2) throw ConfigError("num_classes must be at least 2");
  if (spec.num_classes != 2) throw ConfigError("only two-class heads are supported");
  const auto& info = lookup_encoder(spec.encoder_id);
  if (hparams.max_seq_len > info.positional_capacity)
    throw ConfigError(fmt::format("max_seq_len {} exceeds the positional capacity {} of encoder '{}'",
                                  hparams.max_seq_len, info.positional_capacity, info.id));
  if (hparams.max_seq_len < 3) throw ConfigError("max_seq_len must be at least 3");
  if (!info.offline)
    throw EnvironmentError("encoder '" + info.id +
                           "' needs pretrained weights that this build cannot load; use one of the tiny-* encoders");
  return ClassifierHandle{spec, hparams,
                          TinyEncoder(info.arch, info.positional_capacity, text::fnv1a(info.id),
                                      mix_seeds({hparams.seed, 0x4ead})),
                          kCheckpointVersion, std::nullopt, std::nullopt};
}

std::vector<ParamRange> trainable_ranges(const ClassifierHandle& handle) {
  const auto& lay = handle.model.layout();
  switch (handle.spec.freeze_policy) {
    case FreezePolicy::kHeadOnly:
      return {lay.head_range};
    case FreezePolicy::kHeadAndLastLayers: {
      std::vector<ParamRange> r;
      const std::size_t nb = lay.blocks.size();
      for (std::size_t i = nb > 2 ? nb - 2 : 0; i < nb; ++i) r.push_back(lay.blocks[i].range);
      r.push_back(lay.final_norm_range);
      r.push_back(lay.head_range);
      return r;
    }
    case FreezePolicy::kFull:
      return {{0, lay.total}};
  }
  return {};
}

namespace {

struct LabeledSet {
  std::vector<Encoding> encodings;
  std::vector<int> labels;
};

LabeledSet encode_labeled(const Corpus& corpus, const Tokenizer& tok, const PreprocessConfig& pp,
                          const char* what) {
  LabeledSet set;
  std::vector<std::string> texts;
  texts.reserve(corpus.size());
  for (const auto& inst : corpus.instances) {
    if (!inst.sarcastic) throw TrainingError(std::string(what) + " instance '" + inst.id + "' has no label");
    texts.push_back(inst.text);
    set.labels.push_back(*inst.sarcastic ? 1 : 0);
  }
  for (const auto& t : preprocess_all(texts, pp)) set.encodings.push_back(tok.encode(t));
  return set;
}

std::vector<double> score_all(const TinyEncoder& model, const std::vector<Encoding>& encodings,
                              std::size_t batch_size, Execution exec) {
  std::vector<double> out(encodings.size());
  for (std::size_t start = 0; start < encodings.size(); start += batch_size) {
    const std::size_t n = std::min(batch_size, encodings.size() - start);
    kernels::scores(exec, model, std::span<const Encoding>(encodings.data() + start, n),
                    std::span<double>(out.data() + start, n));
  }
  return out;
}

}  // namespace

std::pair<ClassifierHandle, TrainHistory> fine_tune(const ClassifierHandle& handle, const Corpus& train,
                                                    const Corpus& val, const PreprocessConfig& preprocess_config,
                                                    Execution exec) {
  validate(handle.hparams);
  validate(preprocess_config);
  const auto& hp = handle.hparams;
  if (hp.epochs == 0) return {handle, TrainHistory{}};
  if (train.empty()) throw TrainingError("training corpus is empty");

  const auto& info = lookup_encoder(handle.spec.encoder_id);
  const Tokenizer tok(info, hp.max_seq_len);
  const auto train_set = encode_labeled(train, tok, preprocess_config, "training");
  const auto positives = std::count(train_set.labels.begin(), train_set.labels.end(), 1);
  if (positives == 0 || positives == static_cast<std::ptrdiff_t>(train_set.labels.size()))
    throw TrainingError("training data contains a single class");
  const auto val_set = encode_labeled(val, tok, preprocess_config, "validation");

  ClassifierHandle current = handle;
  auto params = current.model.mutable_params();
  const auto ranges = trainable_ranges(current);
  const std::size_t P = params.size();

  const std::size_t n = train_set.encodings.size();
  const std::size_t steps_per_epoch = (n + hp.batch_size - 1) / hp.batch_size;
  const std::size_t total_steps = steps_per_epoch * hp.epochs;
  const auto warmup = static_cast<std::size_t>(std::ceil(hp.warmup_fraction * static_cast<double>(total_steps)));
  auto lr_at = [&](std::size_t step) {
    if (step < warmup) return hp.learning_rate * static_cast<double>(step + 1) / static_cast<double>(warmup);
    return hp.learning_rate * static_cast<double>(total_steps - step) / static_cast<double>(total_steps - warmup);
  };

  constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kEps = 1e-8;
  std::vector<double> m(P, 0.0), v(P, 0.0), grad(P, 0.0);
  Rng shuffler(mix_seeds({hp.seed, 0x5417ff}));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  TrainHistory history;
  std::vector<double> best_params;
  double best_f1 = -1.0;
  std::size_t step = 0;
  std::vector<LabeledEncoding> batch;

  for (std::size_t epoch = 1; epoch <= hp.epochs; ++epoch) {
    shuffler.shuffle(order);
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < n; start += hp.batch_size, ++step) {
      const std::size_t len = std::min(hp.batch_size, n - start);
      batch.clear();
      for (std::size_t i = 0; i < len; ++i)
        batch.push_back({&train_set.encodings[order[start + i]], train_set.labels[order[start + i]]});
      loss_sum += kernels::loss_and_gradient(exec, current.model, batch, grad);

      const double lr = lr_at(step);
      const double t = static_cast<double>(step + 1);
      const double c1 = 1.0 - std::pow(kBeta1, t), c2 = 1.0 - std::pow(kBeta2, t);
      const double inv_len = 1.0 / static_cast<double>(len);
      for (const auto& r : ranges) {
        for (std::size_t j = r.offset; j < r.offset + r.size; ++j) {
          const double g = grad[j] * inv_len;
          m[j] = kBeta1 * m[j] + (1.0 - kBeta1) * g;
          v[j] = kBeta2 * v[j] + (1.0 - kBeta2) * g * g;
          params[j] -= lr * ((m[j] / c1) / (std::sqrt(v[j] / c2) + kEps) + hp.weight_decay * params[j]);
        }
      }
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = loss_sum / static_cast<double>(n);
    if (!val_set.encodings.empty()) {
      const auto scores = score_all(current.model, val_set.encodings, hp.batch_size, exec);
      double vloss = 0.0;
      std::vector<bool> truth, pred;
      for (std::size_t i = 0; i < scores.size(); ++i) {
        vloss += cross_entropy(scores[i], val_set.labels[i] == 1);
        truth.push_back(val_set.labels[i] == 1);
        pred.push_back(scores[i] >= 0.5);
      }
      rec.val_loss = vloss / static_cast<double>(scores.size());
      rec.val_f1_positive = prf1(confusion(truth, pred)).f1;
      if (*rec.val_f1_positive > best_f1) {
        best_f1 = *rec.val_f1_positive;
        best_params.assign(params.begin(), params.end());
        history.best_epoch = epoch;
      }
    }
    log::get().info("epoch {}/{}: train_loss={:.4f}{}", epoch, hp.epochs, rec.train_loss,
                    rec.val_f1_positive ? fmt::format(" val_loss={:.4f} val_f1_positive={:.4f}", *rec.val_loss,
                                                      *rec.val_f1_positive)
                                        : std::string{});
    history.epochs.push_back(rec);
  }

  if (!best_params.empty()) {
    current.model.set_params(std::move(best_params));
    current.best_metric = best_f1;
  } else {
    history.best_epoch = hp.epochs;
    current.best_metric.reset();
  }
  current.best_epoch = history.best_epoch;
  return {std::move(current), std::move(history)};
}

std::vector<double> predict_scores(const ClassifierHandle& handle, const std::vector<std::string>& texts,
                                   const PreprocessConfig& preprocess_config, Execution exec) {
  validate(preprocess_config);
  if (texts.empty()) return {};
  const Tokenizer tok(lookup_encoder(handle.spec.encoder_id), handle.hparams.max_seq_len);
  std::vector<Encoding> encodings;
  encodings.reserve(texts.size());
  for (const auto& t : preprocess_all(texts, preprocess_config)) encodings.push_back(tok.encode(t));
  return score_all(handle.model, encodings, std::max<std::size_t>(handle.hparams.batch_size, 1), exec);
}

std::vector<bool> threshold_scores(const std::vector<double>& scores, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw ConfigError(fmt::format("threshold {} outside (0, 1)", threshold));
  std::vector<bool> out;
  out.reserve(scores.size());
  for (double s : scores) out.push_back(s >= threshold);
  return out;
}

std::vector<bool> predict_labels(const ClassifierHandle& handle, const std::vector<std::string>& texts,
                                 const PreprocessConfig& preprocess_config, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw ConfigError(fmt::format("threshold {} outside (0, 1)", threshold));
  return threshold_scores(predict_scores(handle, texts, preprocess_config), threshold);
}

namespace {

constexpr char kParamMagic[8] = {'S', 'A', 'R', 'C', 'P', 'R', 'M', '1'};

static_assert(std::endian::native == std::endian::little, "checkpoint blobs assume a little-endian host");

std::uint64_t params_checksum(std::span<const double> params) {
  return text::fnv1a(std::string_view(reinterpret_cast<const char*>(params.data()), params.size() * sizeof(double)));
}

template <typename T>
T parse_number(const std::map<std::string, std::string>& meta, const std::string& key) {
  auto it = meta.find(key);
  if (it == meta.end()) throw CheckpointError("checkpoint metadata lacks '" + key + "'");
  try {
    std::size_t used = 0;
    T value{};
    if constexpr (std::is_floating_point_v<T>)
      value = static_cast<T>(std::stod(it->second, &used));
    else
      value = static_cast<T>(std::stoull(it->second, &used));
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return value;
  } catch (const std::logic_error&) {
    throw CheckpointError("checkpoint metadata '" + key + "' is not a number: '" + it->second + "'");
  }
}

const std::string& field(const std::map<std::string, std::string>& meta, const std::string& key) {
  auto it = meta.find(key);
  if (it == meta.end()) throw CheckpointError("checkpoint metadata lacks '" + key + "'");
  return it->second;
}

}  // namespace

void save_checkpoint(const ClassifierHandle& handle, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CheckpointError("cannot create checkpoint directory " + dir.string() + ": " + ec.message());

  const auto params = handle.model.params();
  const auto& arch = handle.model.arch();
  std::string meta;
  auto put = [&](std::string_view key, const std::string& value) { meta += fmt::format("{} = {}\n", key, value); };
  put("format_version", std::to_string(kCheckpointVersion));
  put("encoder_id", handle.spec.encoder_id);
  put("num_classes", std::to_string(handle.spec.num_classes));
  put("freeze_policy", std::string(freeze_policy_name(handle.spec.freeze_policy)));
  put("learning_rate", fmt::format("{:.17g}", handle.hparams.learning_rate));
  put("max_seq_len", std::to_string(handle.hparams.max_seq_len));
  put("batch_size", std::to_string(handle.hparams.batch_size));
  put("epochs", std::to_string(handle.hparams.epochs));
  put("seed", std::to_string(handle.hparams.seed));
  put("weight_decay", fmt::format("{:.17g}", handle.hparams.weight_decay));
  put("warmup_fraction", fmt::format("{:.17g}", handle.hparams.warmup_fraction));
  if (handle.best_epoch) put("best_epoch", std::to_string(*handle.best_epoch));
  if (handle.best_metric) put("best_metric", fmt::format("{:.17g}", *handle.best_metric));
  put("hash_buckets", std::to_string(arch.hash_buckets));
  put("dim", std::to_string(arch.dim));
  put("ffn_dim", std::to_string(arch.ffn_dim));
  put("num_blocks", std::to_string(arch.num_blocks));
  put("param_count", std::to_string(params.size()));
  put("param_checksum", fmt::format("{:016x}", params_checksum(params)));
  try {
    io::write_text(dir / "metadata.txt", meta);
  } catch (const Error& e) {
    throw CheckpointError(e.what());
  }

  std::ofstream out(dir / "params.bin", std::ios::binary | std::ios::trunc);
  if (!out) throw CheckpointError("cannot write " + (dir / "params.bin").string());
  const std::uint64_t count = params.size();
  out.write(kParamMagic, sizeof kParamMagic);
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
  out.write(reinterpret_cast<const char*>(params.data()), static_cast<std::streamsize>(count * sizeof(double)));
  if (!out) throw CheckpointError("failed writing " + (dir / "params.bin").string());
}

ClassifierHandle load_checkpoint(const std::filesystem::path& dir) {
  const auto meta_path = dir / "metadata.txt";
  if (!std::filesystem::is_regular_file(meta_path))
    throw CheckpointError("no checkpoint at " + dir.string() + " (missing metadata.txt)");
  std::map<std::string, std::string> meta;
  for (const auto& line : io::read_lines(meta_path)) {
    if (text::trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw CheckpointError("malformed checkpoint metadata line '" + line + "'");
    meta[std::string(text::trim(line.substr(0, eq)))] = std::string(text::trim(line.substr(eq + 1)));
  }

  const auto version = parse_number<std::uint32_t>(meta, "format_version");
  if (version > kCheckpointVersion)
    throw CheckpointError(fmt::format("checkpoint format version {} is newer than supported version {}", version,
                                      kCheckpointVersion));
  if (version != kCheckpointVersion)
    throw CheckpointError(fmt::format("checkpoint format version {} is not supported (expected {})", version,
                                      kCheckpointVersion));

  EncoderSpec spec;
  spec.encoder_id = field(meta, "encoder_id");
  spec.num_classes = parse_number<std::size_t>(meta, "num_classes");
  HyperParams hp;
  hp.learning_rate = parse_number<double>(meta, "learning_rate");
  hp.max_seq_len = parse_number<std::size_t>(meta, "max_seq_len");
  hp.batch_size = parse_number<std::size_t>(meta, "batch_size");
  hp.epochs = parse_number<std::size_t>(meta, "epochs");
  hp.seed = parse_number<std::uint64_t>(meta, "seed");
  hp.weight_decay = parse_number<double>(meta, "weight_decay");
  hp.warmup_fraction = parse_number<double>(meta, "warmup_fraction");

  ClassifierHandle handle = [&] {
    try {
      spec.freeze_policy = parse_freeze_policy(field(meta, "freeze_policy"));
      return build_classifier(spec, hp);
    } catch (const CheckpointError&) {
      throw;
    } catch (const Error& e) {
      throw CheckpointError(std::string("checkpoint cannot be rebuilt: ") + e.what());
    }
  }();
  if (meta.count("best_epoch")) handle.best_epoch = parse_number<std::size_t>(meta, "best_epoch");
  if (meta.count("best_metric")) handle.best_metric = parse_number<double>(meta, "best_metric");

  const auto& arch = handle.model.arch();
  if (parse_number<std::size_t>(meta, "hash_buckets") != arch.hash_buckets ||
      parse_number<std::size_t>(meta, "dim") != arch.dim || parse_number<std::size_t>(meta, "ffn_dim") != arch.ffn_dim ||
      parse_number<std::size_t>(meta, "num_blocks") != arch.num_blocks)
    throw CheckpointError("checkpoint architecture does not match encoder '" + spec.encoder_id + "'");

  const auto expected = parse_number<std::size_t>(meta, "param_count");
  if (expected != handle.model.params().size())
    throw CheckpointError(fmt::format("checkpoint declares {} parameters but the encoder has {}", expected,
                                      handle.model.params().size()));

  std::ifstream in(dir / "params.bin", std::ios::binary);
  if (!in) throw CheckpointError("missing " + (dir / "params.bin").string());
  char magic[sizeof kParamMagic];
  std::uint64_t count = 0;
  in.read(magic, sizeof magic);
  in.read(reinterpret_cast<char*>(&count), sizeof count);
  if (!in || std::memcmp(magic, kParamMagic, sizeof magic) != 0) throw CheckpointError("params.bin has a bad header");
  if (count != expected) throw CheckpointError("params.bin parameter count disagrees with metadata");
  std::vector<double> params(count);
  in.read(reinterpret_cast<char*>(params.data()), static_cast<std::streamsize>(count * sizeof(double)));
  if (!in) throw CheckpointError("params.bin is truncated");
  if (in.peek() != std::char_traits<char>::eof()) throw CheckpointError("params.bin has trailing bytes");
  if (fmt::format("{:016x}", params_checksum(params)) != field(meta, "param_checksum"))
    throw CheckpointError("params.bin checksum mismatch");
  handle.model.set_params(std::move(params));
  return handle;
}

}  // namespace sarc
