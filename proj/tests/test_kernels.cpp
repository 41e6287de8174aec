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


#include <doctest.h>
#include <omp.h>

#include <cstring>

#include "sarc/kernels.hpp"
#include "sarc/random.hpp"

using namespace sarc;

namespace {

std::vector<Encoding> batch_of(std::size_t n, const ArchConfig& arch, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Encoding> out(n);
  for (auto& e : out) {
    e.ids.assign(24, ArchConfig::kPadId);
    e.length = 3 + rng.below(22);
    e.ids[0] = ArchConfig::kStartId;
    for (std::size_t i = 1; i + 1 < e.length; ++i)
      e.ids[i] = static_cast<std::uint32_t>(ArchConfig::kNumSpecial + rng.below(arch.hash_buckets));
    e.ids[e.length - 1] = ArchConfig::kEndId;
  }
  return out;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

// Restores the global thread count when a test case ends.
struct ThreadGuard {
  int saved = omp_get_max_threads();
  ~ThreadGuard() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("omp scores are bit-identical to the serial reference") {
  ThreadGuard guard;
  const ArchConfig arch;
  TinyEncoder m(arch, 64, 21, 22);
  for (std::size_t n : {1u, 7u, 64u, 129u}) {
    const auto batch = batch_of(n, arch, n);
    std::vector<double> ref(n), got(n);
    kernels::serial::scores(m, batch, ref);
    for (int threads : {1, 2, 3, 8}) {
      omp_set_num_threads(threads);
      std::fill(got.begin(), got.end(), -1.0);
      kernels::omp::scores(m, batch, got);
      CHECK_MESSAGE(bit_equal(ref, got), "n=", n, " threads=", threads);
    }
    for (std::size_t i = 0; i < n; ++i) CHECK(ref[i] == m.score(batch[i]));
  }
}

TEST_CASE("omp loss and gradient are bit-identical to the serial reference") {
  ThreadGuard guard;
  const ArchConfig arch;
  TinyEncoder m(arch, 64, 31, 32);
  const auto total = m.params().size();
  for (std::size_t n : {1u, 5u, 33u, 100u}) {
    const auto encs = batch_of(n, arch, 100 + n);
    std::vector<LabeledEncoding> batch;
    for (std::size_t i = 0; i < n; ++i) batch.push_back({&encs[i], static_cast<int>(i % 2)});
    std::vector<double> ref(total, 9.0), got(total);
    const double ref_loss = kernels::serial::loss_and_gradient(m, batch, ref);

    // The reference sums per-sequence gradients in order.
    std::vector<double> manual(total, 0.0);
    double manual_loss = 0.0;
    for (const auto& b : batch) {
      std::vector<double> g(total, 0.0);
      manual_loss += m.loss_and_gradient(*b.encoding, b.label, g);
      for (std::size_t i = 0; i < total; ++i) manual[i] += g[i];
    }
    CHECK(ref_loss == manual_loss);
    CHECK(bit_equal(ref, manual));

    for (int threads : {1, 2, 4, 7}) {
      omp_set_num_threads(threads);
      std::fill(got.begin(), got.end(), -3.0);
      const double loss = kernels::omp::loss_and_gradient(m, batch, got);
      CHECK(std::memcmp(&loss, &ref_loss, sizeof loss) == 0);
      CHECK_MESSAGE(bit_equal(ref, got), "n=", n, " threads=", threads);
    }
  }
}

TEST_CASE("execution dispatch") {
  const ArchConfig arch;
  TinyEncoder m(arch, 64, 1, 1);
  const auto batch = batch_of(10, arch, 5);
  std::vector<double> a(10), b(10);
  kernels::scores(Execution::kSerial, m, batch, a);
  kernels::scores(Execution::kParallel, m, batch, b);
  CHECK(bit_equal(a, b));
}
