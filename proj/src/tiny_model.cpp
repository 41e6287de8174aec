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

#include "sarc/tiny_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sarc/random.hpp"

namespace sarc {

namespace {

constexpr double kNormEps = 1e-5;

using Mat = std::vector<double>;

// out[L x b] = in[L x a] * w[a x b] + bias[b]
void linear(const double* in, std::size_t rows, std::size_t a, const double* w, const double* bias, std::size_t b,
            double* out) {
  for (std::size_t t = 0; t < rows; ++t) {
    double* o = out + t * b;
    for (std::size_t j = 0; j < b; ++j) o[j] = bias[j];
    for (std::size_t k = 0; k < a; ++k) {
      const double x = in[t * a + k];
      const double* wr = w + k * b;
      for (std::size_t j = 0; j < b; ++j) o[j] += x * wr[j];
    }
  }
}

// Accumulates dW += in^T dout, dbias += colsum(dout), din += dout w^T.
void linear_backward(const double* in, std::size_t rows, std::size_t a, const double* w, std::size_t b,
                     const double* dout, double* din, double* dw, double* dbias) {
  for (std::size_t t = 0; t < rows; ++t) {
    const double* g = dout + t * b;
    for (std::size_t j = 0; j < b; ++j) dbias[j] += g[j];
    for (std::size_t k = 0; k < a; ++k) {
      const double x = in[t * a + k];
      const double* wr = w + k * b;
      double* dwr = dw + k * b;
      double acc = 0.0;
      for (std::size_t j = 0; j < b; ++j) {
        dwr[j] += x * g[j];
        acc += g[j] * wr[j];
      }
      if (din) din[t * a + k] += acc;
    }
  }
}

struct NormCache {
  Mat xhat;
  std::vector<double> rstd;
};

void layernorm(const double* x, std::size_t rows, std::size_t d, const double* gain, const double* bias, double* y,
               NormCache& cache) {
  cache.xhat.resize(rows * d);
  cache.rstd.resize(rows);
  for (std::size_t t = 0; t < rows; ++t) {
    const double* xr = x + t * d;
    double mean = 0.0;
    for (std::size_t j = 0; j < d; ++j) mean += xr[j];
    mean /= static_cast<double>(d);
    double var = 0.0;
    for (std::size_t j = 0; j < d; ++j) var += (xr[j] - mean) * (xr[j] - mean);
    var /= static_cast<double>(d);
    const double rstd = 1.0 / std::sqrt(var + kNormEps);
    cache.rstd[t] = rstd;
    for (std::size_t j = 0; j < d; ++j) {
      const double xh = (xr[j] - mean) * rstd;
      cache.xhat[t * d + j] = xh;
      y[t * d + j] = gain[j] * xh + bias[j];
    }
  }
}

// dx += LayerNorm'(dy); dgain, dbias accumulate.
void layernorm_backward(const NormCache& cache, std::size_t rows, std::size_t d, const double* gain, const double* dy,
                        double* dx, double* dgain, double* dbias) {
  std::vector<double> dxhat(d);
  for (std::size_t t = 0; t < rows; ++t) {
    const double* g = dy + t * d;
    const double* xh = cache.xhat.data() + t * d;
    double mean_dxhat = 0.0, mean_dxhat_xhat = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      dgain[j] += g[j] * xh[j];
      dbias[j] += g[j];
      dxhat[j] = g[j] * gain[j];
      mean_dxhat += dxhat[j];
      mean_dxhat_xhat += dxhat[j] * xh[j];
    }
    mean_dxhat /= static_cast<double>(d);
    mean_dxhat_xhat /= static_cast<double>(d);
    for (std::size_t j = 0; j < d; ++j)
      dx[t * d + j] += cache.rstd[t] * (dxhat[j] - mean_dxhat - xh[j] * mean_dxhat_xhat);
  }
}

struct BlockCache {
  Mat x_in, a, q, k, v, p, c, h, b, u;
  NormCache n1, n2;
};

struct ForwardCache {
  std::vector<BlockCache> blocks;
  Mat x_final, z;
  NormCache nf;
  std::array<double, 2> logits{};
};

std::array<double, 2> softmax2(const std::array<double, 2>& l) {
  const double m = std::max(l[0], l[1]);
  const double e0 = std::exp(l[0] - m), e1 = std::exp(l[1] - m);
  return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

}  // namespace

ParamLayout ParamLayout::build(const ArchConfig& arch) {
  ParamLayout l;
  const std::size_t d = arch.dim, f = arch.ffn_dim;
  std::size_t off = 0;
  auto take = [&](std::size_t n) {
    const std::size_t at = off;
    off += n;
    return at;
  };
  l.embedding = take(arch.vocab_size() * d);
  l.embedding_range = {l.embedding, arch.vocab_size() * d};
  for (std::size_t i = 0; i < arch.num_blocks; ++i) {
    BlockLayout b{};
    const std::size_t start = off;
    b.ln1_gain = take(d);
    b.ln1_bias = take(d);
    b.wq = take(d * d);
    b.bq = take(d);
    b.wk = take(d * d);
    b.bk = take(d);
    b.wv = take(d * d);
    b.bv = take(d);
    b.wo = take(d * d);
    b.bo = take(d);
    b.ln2_gain = take(d);
    b.ln2_bias = take(d);
    b.w1 = take(d * f);
    b.b1 = take(f);
    b.w2 = take(f * d);
    b.b2 = take(d);
    b.range = {start, off - start};
    l.blocks.push_back(b);
  }
  l.lnf_gain = take(d);
  l.lnf_bias = take(d);
  l.final_norm_range = {l.lnf_gain, 2 * d};
  l.head_w = take(d * 2);
  l.head_b = take(2);
  l.head_range = {l.head_w, 2 * d + 2};
  l.total = off;
  return l;
}

TinyEncoder::TinyEncoder(const ArchConfig& arch, std::size_t positional_capacity, std::uint64_t body_seed,
                         std::uint64_t head_seed)
    : arch_(arch), capacity_(positional_capacity), layout_(ParamLayout::build(arch)), params_(layout_.total, 0.0) {
  const std::size_t d = arch.dim, f = arch.ffn_dim;

  Rng body(body_seed);
  auto fill = [&](Rng& rng, std::size_t at, std::size_t n, double stddev) {
    for (std::size_t i = 0; i < n; ++i) params_[at + i] = rng.normal() * stddev;
  };
  auto ones = [&](std::size_t at, std::size_t n) { std::fill_n(params_.begin() + static_cast<std::ptrdiff_t>(at), n, 1.0); };

  fill(body, layout_.embedding, arch.vocab_size() * d, 1.0);
  const double sd_d = 1.0 / std::sqrt(static_cast<double>(d));
  const double sd_f = 1.0 / std::sqrt(static_cast<double>(f));
  for (const auto& b : layout_.blocks) {
    ones(b.ln1_gain, d);
    ones(b.ln2_gain, d);
    fill(body, b.wq, d * d, sd_d);
    fill(body, b.wk, d * d, sd_d);
    fill(body, b.wv, d * d, sd_d);
    fill(body, b.wo, d * d, 0.5 * sd_d);
    fill(body, b.w1, d * f, sd_d);
    fill(body, b.w2, f * d, 0.5 * sd_f);
  }
  ones(layout_.lnf_gain, d);

  Rng head(head_seed);
  fill(head, layout_.head_w, d * 2, sd_d);

  const std::size_t cap = std::max<std::size_t>(capacity_, 1);
  positional_.resize(cap * d);
  for (std::size_t t = 0; t < cap; ++t) {
    for (std::size_t i = 0; i < d; i += 2) {
      const double freq = std::pow(10000.0, -static_cast<double>(i) / static_cast<double>(d));
      positional_[t * d + i] = std::sin(static_cast<double>(t) * freq);
      if (i + 1 < d) positional_[t * d + i + 1] = std::cos(static_cast<double>(t) * freq);
    }
  }
}

void TinyEncoder::set_params(std::vector<double> params) {
  if (params.size() != layout_.total)
    throw std::invalid_argument("parameter count " + std::to_string(params.size()) + " does not match model size " +
                                std::to_string(layout_.total));
  params_ = std::move(params);
}

namespace {

void run_forward(const TinyEncoder& model, const std::vector<double>& positional, const Encoding& enc,
                 ForwardCache& cache) {
  const auto& arch = model.arch();
  const auto& lay = model.layout();
  const double* p = model.params().data();
  const std::size_t d = arch.dim, f = arch.ffn_dim;
  const std::size_t L = enc.length;
  if (L == 0 || L > enc.ids.size() || enc.pool_index >= L) throw std::invalid_argument("malformed encoding");
  if (L > model.positional_capacity()) throw std::invalid_argument("sequence exceeds positional capacity");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));

  Mat x(L * d);
  for (std::size_t t = 0; t < L; ++t) {
    const std::size_t id = enc.ids[t];
    if (id >= arch.vocab_size()) throw std::invalid_argument("token id out of range");
    for (std::size_t j = 0; j < d; ++j) x[t * d + j] = p[lay.embedding + id * d + j] + positional[t * d + j];
  }

  cache.blocks.resize(lay.blocks.size());
  for (std::size_t bi = 0; bi < lay.blocks.size(); ++bi) {
    const auto& bl = lay.blocks[bi];
    auto& c = cache.blocks[bi];
    c.x_in = x;
    c.a.resize(L * d);
    layernorm(x.data(), L, d, p + bl.ln1_gain, p + bl.ln1_bias, c.a.data(), c.n1);
    c.q.resize(L * d);
    c.k.resize(L * d);
    c.v.resize(L * d);
    linear(c.a.data(), L, d, p + bl.wq, p + bl.bq, d, c.q.data());
    linear(c.a.data(), L, d, p + bl.wk, p + bl.bk, d, c.k.data());
    linear(c.a.data(), L, d, p + bl.wv, p + bl.bv, d, c.v.data());

    c.p.assign(L * L, 0.0);
    for (std::size_t i = 0; i < L; ++i) {
      double m = -INFINITY;
      for (std::size_t j = 0; j < L; ++j) {
        double s = 0.0;
        for (std::size_t e = 0; e < d; ++e) s += c.q[i * d + e] * c.k[j * d + e];
        c.p[i * L + j] = s * scale;
        m = std::max(m, c.p[i * L + j]);
      }
      double z = 0.0;
      for (std::size_t j = 0; j < L; ++j) {
        c.p[i * L + j] = std::exp(c.p[i * L + j] - m);
        z += c.p[i * L + j];
      }
      for (std::size_t j = 0; j < L; ++j) c.p[i * L + j] /= z;
    }
    c.c.assign(L * d, 0.0);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) {
        const double w = c.p[i * L + j];
        for (std::size_t e = 0; e < d; ++e) c.c[i * d + e] += w * c.v[j * d + e];
      }

    Mat o(L * d);
    linear(c.c.data(), L, d, p + bl.wo, p + bl.bo, d, o.data());
    c.h.resize(L * d);
    for (std::size_t i = 0; i < L * d; ++i) c.h[i] = x[i] + o[i];

    c.b.resize(L * d);
    layernorm(c.h.data(), L, d, p + bl.ln2_gain, p + bl.ln2_bias, c.b.data(), c.n2);
    c.u.resize(L * f);
    linear(c.b.data(), L, d, p + bl.w1, p + bl.b1, f, c.u.data());
    Mat r(L * f);
    for (std::size_t i = 0; i < L * f; ++i) r[i] = c.u[i] > 0.0 ? c.u[i] : 0.0;
    Mat ff(L * d);
    linear(r.data(), L, f, p + bl.w2, p + bl.b2, d, ff.data());
    for (std::size_t i = 0; i < L * d; ++i) x[i] = c.h[i] + ff[i];
  }

  cache.x_final = x;
  cache.z.resize(L * d);
  layernorm(x.data(), L, d, p + lay.lnf_gain, p + lay.lnf_bias, cache.z.data(), cache.nf);
  const double* zp = cache.z.data() + enc.pool_index * d;
  linear(zp, 1, d, p + lay.head_w, p + lay.head_b, 2, cache.logits.data());
}

}  // namespace

std::array<double, 2> TinyEncoder::logits(const Encoding& enc) const {
  ForwardCache cache;
  run_forward(*this, positional_, enc, cache);
  return cache.logits;
}

double TinyEncoder::score(const Encoding& enc) const { return softmax2(logits(enc))[1]; }

double TinyEncoder::loss_and_gradient(const Encoding& enc, int label, std::span<double> grad) const {
  if (grad.size() != params_.size()) throw std::invalid_argument("gradient buffer has wrong size");
  if (label != 0 && label != 1) throw std::invalid_argument("label must be 0 or 1");
  ForwardCache cache;
  run_forward(*this, positional_, enc, cache);

  const auto& lay = layout_;
  const double* p = params_.data();
  double* g = grad.data();
  const std::size_t d = arch_.dim, f = arch_.ffn_dim;
  const std::size_t L = enc.length;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));

  const auto prob = softmax2(cache.logits);
  const double loss = -std::log(std::max(prob[static_cast<std::size_t>(label)], 1e-300));
  std::array<double, 2> dlogits = {prob[0] - (label == 0 ? 1.0 : 0.0), prob[1] - (label == 1 ? 1.0 : 0.0)};

  Mat dz(L * d, 0.0);
  linear_backward(cache.z.data() + enc.pool_index * d, 1, d, p + lay.head_w, 2, dlogits.data(),
                  dz.data() + enc.pool_index * d, g + lay.head_w, g + lay.head_b);

  Mat dx(L * d, 0.0);
  layernorm_backward(cache.nf, L, d, p + lay.lnf_gain, dz.data(), dx.data(), g + lay.lnf_gain, g + lay.lnf_bias);

  for (std::size_t bi = lay.blocks.size(); bi-- > 0;) {
    const auto& bl = lay.blocks[bi];
    const auto& c = cache.blocks[bi];

    // x_out = h + ff
    Mat dh = dx;
    Mat r(L * f);
    for (std::size_t i = 0; i < L * f; ++i) r[i] = c.u[i] > 0.0 ? c.u[i] : 0.0;
    Mat dr(L * f, 0.0);
    linear_backward(r.data(), L, f, p + bl.w2, d, dx.data(), dr.data(), g + bl.w2, g + bl.b2);
    for (std::size_t i = 0; i < L * f; ++i)
      if (c.u[i] <= 0.0) dr[i] = 0.0;
    Mat db(L * d, 0.0);
    linear_backward(c.b.data(), L, d, p + bl.w1, f, dr.data(), db.data(), g + bl.w1, g + bl.b1);
    layernorm_backward(c.n2, L, d, p + bl.ln2_gain, db.data(), dh.data(), g + bl.ln2_gain, g + bl.ln2_bias);

    // h = x_in + attn
    Mat dxin = dh;
    Mat dc(L * d, 0.0);
    linear_backward(c.c.data(), L, d, p + bl.wo, d, dh.data(), dc.data(), g + bl.wo, g + bl.bo);

    Mat dp(L * L, 0.0), dv(L * d, 0.0);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) {
        double acc = 0.0;
        for (std::size_t e = 0; e < d; ++e) acc += dc[i * d + e] * c.v[j * d + e];
        dp[i * L + j] = acc;
        const double w = c.p[i * L + j];
        for (std::size_t e = 0; e < d; ++e) dv[j * d + e] += w * dc[i * d + e];
      }
    Mat ds(L * L);
    for (std::size_t i = 0; i < L; ++i) {
      double dot = 0.0;
      for (std::size_t j = 0; j < L; ++j) dot += dp[i * L + j] * c.p[i * L + j];
      for (std::size_t j = 0; j < L; ++j) ds[i * L + j] = c.p[i * L + j] * (dp[i * L + j] - dot) * scale;
    }
    Mat dq(L * d, 0.0), dk(L * d, 0.0);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j < L; ++j) {
        const double s = ds[i * L + j];
        for (std::size_t e = 0; e < d; ++e) {
          dq[i * d + e] += s * c.k[j * d + e];
          dk[j * d + e] += s * c.q[i * d + e];
        }
      }
    Mat da(L * d, 0.0);
    linear_backward(c.a.data(), L, d, p + bl.wq, d, dq.data(), da.data(), g + bl.wq, g + bl.bq);
    linear_backward(c.a.data(), L, d, p + bl.wk, d, dk.data(), da.data(), g + bl.wk, g + bl.bk);
    linear_backward(c.a.data(), L, d, p + bl.wv, d, dv.data(), da.data(), g + bl.wv, g + bl.bv);
    layernorm_backward(c.n1, L, d, p + bl.ln1_gain, da.data(), dxin.data(), g + bl.ln1_gain, g + bl.ln1_bias);
    dx = std::move(dxin);
  }

  for (std::size_t t = 0; t < L; ++t) {
    const std::size_t id = enc.ids[t];
    for (std::size_t j = 0; j < d; ++j) g[lay.embedding + id * d + j] += dx[t * d + j];
  }
  return loss;
}

}  // namespace sarc
