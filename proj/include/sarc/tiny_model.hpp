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

// A small pre-LayerNorm transformer encoder with a two-way classification
// head. Token ids come from hashing words into a fixed number of buckets, so
// the model needs no vocabulary file and no download.
//
// Per block:
//   h = x + Attention(LayerNorm(x))      single head, scaled dot product
//   x = h + W2 relu(W1 LayerNorm(h))
// followed by a final LayerNorm; the head reads the pooled position.
//
// All parameters live in one flat vector; ParamLayout records where each
// tensor starts so optimizers, checkpoints and freezing work on ranges.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sarc {

struct ArchConfig {
  std::size_t hash_buckets = 256;
  std::size_t dim = 16;
  std::size_t ffn_dim = 32;
  std::size_t num_blocks = 3;

  static constexpr std::size_t kPadId = 0;
  static constexpr std::size_t kStartId = 1;
  static constexpr std::size_t kEndId = 2;
  static constexpr std::size_t kNumSpecial = 3;

  std::size_t vocab_size() const { return hash_buckets + kNumSpecial; }
  bool operator==(const ArchConfig&) const = default;
};

// Token ids padded to max_seq_len; only the first `length` are attended.
struct Encoding {
  std::vector<std::uint32_t> ids;
  std::size_t length = 0;
  std::size_t pool_index = 0;
};

struct ParamRange {
  std::size_t offset = 0;
  std::size_t size = 0;
};

struct BlockLayout {
  std::size_t ln1_gain, ln1_bias;
  std::size_t wq, bq, wk, bk, wv, bv, wo, bo;
  std::size_t ln2_gain, ln2_bias;
  std::size_t w1, b1, w2, b2;
  ParamRange range;
};

struct ParamLayout {
  std::size_t embedding = 0;
  ParamRange embedding_range;
  std::vector<BlockLayout> blocks;
  std::size_t lnf_gain = 0, lnf_bias = 0;
  ParamRange final_norm_range;
  std::size_t head_w = 0, head_b = 0;
  ParamRange head_range;
  std::size_t total = 0;

  static ParamLayout build(const ArchConfig& arch);
};

class TinyEncoder {
 public:
  // Body weights come from body_seed (the "pretrained" initialization shared
  // by every classifier built on the same encoder id); the head from
  // head_seed.
  TinyEncoder(const ArchConfig& arch, std::size_t positional_capacity, std::uint64_t body_seed,
              std::uint64_t head_seed);

  const ArchConfig& arch() const { return arch_; }
  const ParamLayout& layout() const { return layout_; }
  std::size_t positional_capacity() const { return capacity_; }

  std::span<const double> params() const { return params_; }
  std::span<double> mutable_params() { return params_; }
  // Throws std::invalid_argument on size mismatch.
  void set_params(std::vector<double> params);

  // Logits for (negative, positive).
  std::array<double, 2> logits(const Encoding& enc) const;
  // Positive-class probability.
  double score(const Encoding& enc) const;
  // Cross-entropy loss for label in {0, 1}; gradients are ADDED to grad,
  // which must have params().size() elements.
  double loss_and_gradient(const Encoding& enc, int label, std::span<double> grad) const;

 private:
  ArchConfig arch_;
  std::size_t capacity_;
  ParamLayout layout_;
  std::vector<double> params_;
  std::vector<double> positional_;  // capacity x dim, sinusoidal
};

}  // namespace sarc
