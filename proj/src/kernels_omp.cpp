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

#include <omp.h>

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "sarc/kernels.hpp"

namespace sarc::kernels::omp {

namespace {

// Exceptions must not cross an OpenMP region boundary; keep the first one
// and rethrow after the loop.
class FirstError {
 public:
  template <typename F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(sarc_kernel_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

void scores(const TinyEncoder& model, std::span<const Encoding> batch, std::span<double> out) {
  if (out.size() != batch.size()) throw std::invalid_argument("score buffer size mismatch");
  FirstError err;
  const auto n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    err.run([&] { out[static_cast<std::size_t>(i)] = model.score(batch[static_cast<std::size_t>(i)]); });
  }
  err.rethrow();
}

double loss_and_gradient(const TinyEncoder& model, std::span<const LabeledEncoding> batch, std::span<double> grad) {
  const std::size_t P = grad.size();
  const std::size_t n = batch.size();
  std::vector<double> local(n * P, 0.0);
  std::vector<double> losses(n, 0.0);
  FirstError err;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const auto k = static_cast<std::size_t>(i);
    err.run([&] {
      losses[k] = model.loss_and_gradient(*batch[k].encoding, batch[k].label,
                                          std::span<double>(local.data() + k * P, P));
    });
  }
  err.rethrow();

  std::fill(grad.begin(), grad.end(), 0.0);
  double loss = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    loss += losses[k];
    const double* src = local.data() + k * P;
    for (std::size_t j = 0; j < P; ++j) grad[j] += src[j];
  }
  return loss;
}

}  // namespace sarc::kernels::omp
