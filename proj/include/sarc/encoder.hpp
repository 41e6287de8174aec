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

// Binary sequence classifiers: model registry, tokenization, fine-tuning,
// scoring and checkpoints.

#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sarc/corpus.hpp"
#include "sarc/kernels.hpp"
#include "sarc/masker.hpp"
#include "sarc/preprocess.hpp"
#include "sarc/tiny_model.hpp"

namespace sarc {

enum class FreezePolicy {
  kHeadAndLastLayers,  // head, final norm and the top two encoder blocks
  kHeadOnly,
  kFull,
};

std::string_view freeze_policy_name(FreezePolicy p);
FreezePolicy parse_freeze_policy(std::string_view name);

struct EncoderSpec {
  std::string encoder_id = "tiny";
  std::size_t num_classes = 2;
  FreezePolicy freeze_policy = FreezePolicy::kHeadAndLastLayers;
  bool operator==(const EncoderSpec&) const = default;
};

struct HyperParams {
  double learning_rate = 2e-5;
  std::size_t max_seq_len = 128;
  std::size_t batch_size = 32;
  std::size_t epochs = 3;
  std::uint64_t seed = 42;
  // Optimizer settings not covered by the published presets.
  double weight_decay = 0.01;
  double warmup_fraction = 0.1;
  bool operator==(const HyperParams&) const = default;
};

// Published per-family settings: "roberta", "bert", "xlnet", "distilbert".
HyperParams hyperparams_preset(std::string_view name);
std::vector<std::string> hyperparams_preset_names();

// Where the start/end special tokens go and which position the head reads.
enum class SpecialTokenLayout {
  kStartEnd,  // [CLS] text [SEP]; pool first
  kEndCls,    // text <sep> <cls>; pool last
};

struct EncoderInfo {
  std::string id;
  std::size_t positional_capacity = 512;
  SpecialTokenLayout layout = SpecialTokenLayout::kStartEnd;
  // False for families whose pretrained weights this build cannot load.
  bool offline = true;
  ArchConfig arch;
};

// Throws RegistryError for unknown ids.
const EncoderInfo& lookup_encoder(std::string_view id);
std::vector<std::string> registered_encoders();

// Resolves an augmentation masker id. "bigram-context" is fitted on
// `fit_corpus`; pretrained masked-LM ids raise EnvironmentError.
std::unique_ptr<Masker> resolve_masker(std::string_view masker_id, const Corpus* fit_corpus);

class Tokenizer {
 public:
  Tokenizer(const EncoderInfo& info, std::size_t max_seq_len);
  // Whitespace tokens hashed into buckets, truncated to leave room for the
  // special tokens, then padded to max_seq_len.
  Encoding encode(std::string_view preprocessed_text) const;
  std::size_t max_seq_len() const { return max_seq_len_; }

 private:
  const EncoderInfo* info_;
  std::size_t max_seq_len_;
};

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  double train_loss = 0.0;
  std::optional<double> val_loss;
  std::optional<double> val_f1_positive;
};

struct TrainHistory {
  std::vector<EpochRecord> epochs;
  std::optional<std::size_t> best_epoch;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct ClassifierHandle {
  EncoderSpec spec;
  HyperParams hparams;
  TinyEncoder model;
  std::uint32_t version = kCheckpointVersion;
  std::optional<std::size_t> best_epoch;
  std::optional<double> best_metric;
};

// Throws RegistryError (unknown id), ConfigError (max_seq_len beyond the
// positional capacity, bad hyper-parameters) or EnvironmentError (family
// without offline weights).
ClassifierHandle build_classifier(const EncoderSpec& spec, const HyperParams& hparams);

void validate(const HyperParams& hparams);

// Which parameters fine-tuning may change under the handle's freeze policy.
std::vector<ParamRange> trainable_ranges(const ClassifierHandle& handle);

// Mini-batch AdamW with linear warmup and decay. Keeps the epoch with the
// best validation positive-class F1 (the last epoch when val is empty).
// Training labels come from TextInstance::sarcastic.
std::pair<ClassifierHandle, TrainHistory> fine_tune(const ClassifierHandle& handle, const Corpus& train,
                                                    const Corpus& val, const PreprocessConfig& preprocess_config,
                                                    Execution exec = Execution::kParallel);

std::vector<double> predict_scores(const ClassifierHandle& handle, const std::vector<std::string>& texts,
                                   const PreprocessConfig& preprocess_config, Execution exec = Execution::kParallel);

// label = score >= threshold; threshold must lie in (0, 1).
std::vector<bool> predict_labels(const ClassifierHandle& handle, const std::vector<std::string>& texts,
                                 const PreprocessConfig& preprocess_config, double threshold = 0.5);
std::vector<bool> threshold_scores(const std::vector<double>& scores, double threshold);

// A checkpoint is a directory holding metadata.txt (plain "key = value")
// and params.bin (raw little-endian float64 blob with a checksum in the
// metadata).
void save_checkpoint(const ClassifierHandle& handle, const std::filesystem::path& dir);
ClassifierHandle load_checkpoint(const std::filesystem::path& dir);

}  // namespace sarc
