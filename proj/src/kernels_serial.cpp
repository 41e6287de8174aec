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

#include <algorithm>
#include <stdexcept>

#include "sarc/kernels.hpp"

namespace sarc::kernels {

namespace serial {

void scores(const TinyEncoder& model, std::span<const Encoding> batch, std::span<double> out) {
  if (out.size() != batch.size()) throw std::invalid_argument("score buffer size mismatch");
  for (std::size_t i = 0; i < batch.size(); ++i) out[i] = model.score(batch[i]);
}

double loss_and_gradient(const TinyEncoder& model, std::span<const LabeledEncoding> batch, std::span<double> grad) {
  std::fill(grad.begin(), grad.end(), 0.0);
  std::vector<double> local(grad.size());
  double loss = 0.0;
  for (const auto& ex : batch) {
    std::fill(local.begin(), local.end(), 0.0);
    loss += model.loss_and_gradient(*ex.encoding, ex.label, local);
    for (std::size_t j = 0; j < grad.size(); ++j) grad[j] += local[j];
  }
  return loss;
}

}  // namespace serial

void scores(Execution exec, const TinyEncoder& model, std::span<const Encoding> batch, std::span<double> out) {
  if (exec == Execution::kSerial) serial::scores(model, batch, out);
  else omp::scores(model, batch, out);
}

double loss_and_gradient(Execution exec, const TinyEncoder& model, std::span<const LabeledEncoding> batch,
                         std::span<double> grad) {
  return exec == Execution::kSerial ? serial::loss_and_gradient(model, batch, grad)
                                    : omp::loss_and_gradient(model, batch, grad);
}

}  // namespace sarc::kernels
