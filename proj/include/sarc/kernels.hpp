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

// Batch kernels over independent sequences. `serial` is the reference;
// `omp` parallelizes across sequences and must produce bit-identical
// results: per-sequence gradients land in private buffers and are summed in
// sequence order by both variants.

#pragma once

#include <span>
#include <vector>

#include "sarc/tiny_model.hpp"

namespace sarc {

enum class Execution { kSerial, kParallel };

struct LabeledEncoding {
  const Encoding* encoding;
  int label;
};

namespace kernels {

namespace serial {

void scores(const TinyEncoder& model, std::span<const Encoding> batch, std::span<double> out);
// Returns the summed loss; grad is overwritten with the summed gradient.
double loss_and_gradient(const TinyEncoder& model, std::span<const LabeledEncoding> batch, std::span<double> grad);

}  // namespace serial

namespace omp {

void scores(const TinyEncoder& model, std::span<const Encoding> batch, std::span<double> out);
double loss_and_gradient(const TinyEncoder& model, std::span<const LabeledEncoding> batch, std::span<double> grad);

}  // namespace omp

void scores(Execution exec, const TinyEncoder& model, std::span<const Encoding> batch, std::span<double> out);
double loss_and_gradient(Execution exec, const TinyEncoder& model, std::span<const LabeledEncoding> batch,
                         std::span<double> grad);

}  // namespace kernels
}  // namespace sarc
