#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "nmlab/core/error.hpp"
#include "nmlab/core/io.hpp"
#include "nmlab/core/parallel.hpp"
#include "nmlab/core/rng.hpp"

namespace nm {

template <typename T>
struct LinearLayer {
  int out = 0, in = 0;
  std::vector<T> W;  // out x in, row-major
  std::vector<T> b;  // out
};

// Dense MLP with SiLU between layers (none after the last).
template <typename T>
struct MlpWeights {
  std::vector<LinearLayer<T>> layers;

  int input_dim() const { return layers.empty() ? 0 : layers.front().in; }
  int output_dim() const { return layers.empty() ? 0 : layers.back().out; }

  static MlpWeights make(const std::vector<int>& dims, Rng& rng) {
    MlpWeights w;
    for (size_t l = 0; l + 1 < dims.size(); ++l) {
      LinearLayer<T> layer;
      layer.in = dims[l];
      layer.out = dims[l + 1];
      layer.W.resize(size_t(layer.out) * layer.in);
      layer.b.assign(layer.out, T(0));
      T std = std::sqrt(T(2) / T(layer.in));
      for (auto& v : layer.W) v = T(rng.normal()) * std;
      w.layers.push_back(std::move(layer));
    }
    return w;
  }

  template <typename U>
  MlpWeights<U> cast() const {
    MlpWeights<U> w;
    for (const auto& l : layers) {
      LinearLayer<U> o;
      o.in = l.in;
      o.out = l.out;
      o.W.assign(l.W.begin(), l.W.end());
      o.b.assign(l.b.begin(), l.b.end());
      w.layers.push_back(std::move(o));
    }
    return w;
  }
};

// Per-layer low-rank residual: effective delta = w_compose * B * A,
// zero at initialization (B = 0, A ~ N(0, 0.01)).
template <typename T>
struct LoraLayer {
  int out = 0, in = 0, rank = 0;
  std::vector<T> A;  // rank x in
  std::vector<T> B;  // out x rank
};

template <typename T>
struct LoraAdapter {
  std::vector<LoraLayer<T>> layers;

  static LoraAdapter init_for(const MlpWeights<T>& net, int rank, Rng& rng,
                              T a_std = T(0.01)) {
    LoraAdapter a;
    for (const auto& l : net.layers) {
      LoraLayer<T> al;
      al.out = l.out;
      al.in = l.in;
      al.rank = rank;
      al.A.resize(size_t(rank) * l.in);
      for (auto& v : al.A) v = T(rng.normal()) * a_std;
      al.B.assign(size_t(l.out) * rank, T(0));
      a.layers.push_back(std::move(al));
    }
    return a;
  }

  bool matches(const MlpWeights<T>& net) const {
    if (layers.size() != net.layers.size()) return false;
    for (size_t i = 0; i < layers.size(); ++i)
      if (layers[i].in != net.layers[i].in || layers[i].out != net.layers[i].out)
        return false;
    return true;
  }
};

// Materialized evaluation weights: W_eff = W + w_compose * B * A.
// Built once per iteration; also caches W_eff^T for the backward pass.
template <typename T>
struct ComposedMlp {
  std::vector<LinearLayer<T>> eff;
  std::vector<std::vector<T>> effT;  // in x out per layer

  static ComposedMlp build(const MlpWeights<T>& base, const LoraAdapter<T>* adapter,
                           T w_compose) {
    if (adapter && !adapter->matches(base))
      throw CompositionError("adapter shapes do not match base network layers");
    ComposedMlp c;
    c.eff = base.layers;
    if (adapter && w_compose != T(0)) {
      for (size_t l = 0; l < c.eff.size(); ++l) {
        auto& L = c.eff[l];
        const auto& al = adapter->layers[l];
        for (int o = 0; o < L.out; ++o)
          for (int r = 0; r < al.rank; ++r) {
            T brw = w_compose * al.B[size_t(o) * al.rank + r];
            if (brw == T(0)) continue;
            const T* arow = &al.A[size_t(r) * L.in];
            T* wrow = &L.W[size_t(o) * L.in];
            for (int i = 0; i < L.in; ++i) wrow[i] += brw * arow[i];
          }
      }
    }
    c.effT.resize(c.eff.size());
    for (size_t l = 0; l < c.eff.size(); ++l) {
      const auto& L = c.eff[l];
      c.effT[l].resize(L.W.size());
      for (int o = 0; o < L.out; ++o)
        for (int i = 0; i < L.in; ++i)
          c.effT[l][size_t(i) * L.out + o] = L.W[size_t(o) * L.in + i];
    }
    return c;
  }
};

template <typename T>
inline T silu(T x) {
  T s = T(1) / (T(1) + std::exp(-x));
  return x * s;
}

template <typename T>
inline T silu_grad(T x) {
  T s = T(1) / (T(1) + std::exp(-x));
  return s * (T(1) + x * (T(1) - s));
}

// Forward/backward caches for one batch evaluation.
template <typename T>
struct MlpCache {
  std::vector<std::vector<T>> h;  // h[l]: input to layer l (batch x in_l)
  std::vector<std::vector<T>> z;  // z[l]: pre-activation output (batch x out_l)
};

// Y (batch x out) = MLP(X). Cache may be null when no backward follows.
template <typename T>
void mlp_forward_batch(const ComposedMlp<T>& net, const T* X, size_t batch, T* Y,
                       MlpCache<T>* cache) {
  size_t L = net.eff.size();
  if (cache) {
    cache->h.resize(L);
    cache->z.resize(L);
  }
  std::vector<T> cur(X, X + batch * size_t(net.eff.front().in));
  for (size_t l = 0; l < L; ++l) {
    const auto& layer = net.eff[l];
    if (cache) cache->h[l] = cur;
    std::vector<T> z(batch * size_t(layer.out));
    const size_t in = size_t(layer.in), out = size_t(layer.out);
    parallel_for(batch, [&](size_t s) {
      const T* x = &cur[s * in];
      T* zs = &z[s * out];
      for (size_t o = 0; o < out; ++o) {
        const T* wrow = &layer.W[o * in];
        T acc = layer.b[o];
        for (size_t i = 0; i < in; ++i) acc += wrow[i] * x[i];
        zs[o] = acc;
      }
    });
    if (cache) cache->z[l] = z;
    if (l + 1 < L) {
      for (auto& v : z) v = silu(v);
      cur = std::move(z);
    } else {
      std::copy(z.begin(), z.end(), Y);
    }
  }
}

// Gradient containers mirroring the dense layers. Adapter training
// projects these onto (A, B) afterwards; the no-adapter ablation uses
// them directly.
template <typename T>
struct MlpGrad {
  std::vector<std::vector<T>> dW;
  std::vector<std::vector<T>> db;

  void init_like(const MlpWeights<T>& net) {
    dW.resize(net.layers.size());
    db.resize(net.layers.size());
    for (size_t l = 0; l < net.layers.size(); ++l) {
      dW[l].assign(net.layers[l].W.size(), T(0));
      db[l].assign(net.layers[l].b.size(), T(0));
    }
  }

  void clear() {
    for (auto& w : dW) std::fill(w.begin(), w.end(), T(0));
    for (auto& b : db) std::fill(b.begin(), b.end(), T(0));
  }
};

// Reverse pass. dY (batch x out) is consumed; dX (batch x in) is written
// when non-null; parameter gradients accumulate into grad when non-null.
template <typename T>
void mlp_backward_batch(const ComposedMlp<T>& net, const MlpCache<T>& cache,
                        size_t batch, const T* dY, T* dX, MlpGrad<T>* grad) {
  size_t L = net.eff.size();
  std::vector<T> g(dY, dY + batch * size_t(net.eff.back().out));
  for (size_t li = L; li-- > 0;) {
    const auto& layer = net.eff[li];
    const size_t in = size_t(layer.in), out = size_t(layer.out);
    if (grad) {
      auto& dW = grad->dW[li];
      auto& db = grad->db[li];
      // Deterministic accumulation: fixed batch order inside each row.
      parallel_for(out, [&](size_t o) {
        T* dwrow = &dW[o * in];
        T dbo = 0;
        for (size_t s = 0; s < batch; ++s) {
          T go = g[s * out + o];
          if (go == T(0)) continue;
          const T* h = &cache.h[li][s * in];
          for (size_t i = 0; i < in; ++i) dwrow[i] += go * h[i];
          dbo += go;
        }
        db[o] += dbo;
      });
    }
    if (li == 0) {
      if (dX) {
        const auto& wt = net.effT[li];
        parallel_for(batch, [&](size_t s) {
          const T* gs = &g[s * out];
          T* dxs = &dX[s * in];
          for (size_t i = 0; i < in; ++i) {
            const T* wtrow = &wt[i * out];
            T acc = 0;
            for (size_t o = 0; o < out; ++o) acc += wtrow[o] * gs[o];
            dxs[i] = acc;
          }
        });
      }
      break;
    }
    // Propagate through W and the SiLU that fed this layer.
    std::vector<T> gprev(batch * in);
    const auto& wt = net.effT[li];
    const auto& zprev = cache.z[li - 1];
    parallel_for(batch, [&](size_t s) {
      const T* gs = &g[s * out];
      T* gp = &gprev[s * in];
      const T* zp = &zprev[s * in];
      for (size_t i = 0; i < in; ++i) {
        const T* wtrow = &wt[i * out];
        T acc = 0;
        for (size_t o = 0; o < out; ++o) acc += wtrow[o] * gs[o];
        gp[i] = acc * silu_grad(zp[i]);
      }
    });
    g = std::move(gprev);
  }
}

// Single-sample convenience wrappers.
template <typename T>
void mlp_forward(const ComposedMlp<T>& net, const T* x, T* y) {
  mlp_forward_batch(net, x, 1, y, static_cast<MlpCache<T>*>(nullptr));
}

// ---- Weight files ----
// NMMAT01: u32 layer count, per layer u32 rows, u32 cols, f64 W, f64 bias.
template <typename T>
void write_mlp(const std::string& path, const MlpWeights<T>& net) {
  BinaryWriter w(path);
  w.magic("NMMAT01");
  w.scalar<uint32_t>(uint32_t(net.layers.size()));
  for (const auto& l : net.layers) {
    w.scalar<uint32_t>(uint32_t(l.out));
    w.scalar<uint32_t>(uint32_t(l.in));
    for (T v : l.W) w.scalar<double>(double(v));
    for (T v : l.b) w.scalar<double>(double(v));
  }
}

template <typename T>
MlpWeights<T> read_mlp(const std::string& path) {
  BinaryReader r(path);
  r.expect_magic("NMMAT01");
  uint32_t count = r.scalar<uint32_t>();
  MlpWeights<T> net;
  for (uint32_t i = 0; i < count; ++i) {
    LinearLayer<T> l;
    l.out = int(r.scalar<uint32_t>());
    l.in = int(r.scalar<uint32_t>());
    if (l.out <= 0 || l.in <= 0 || l.out > 1 << 16 || l.in > 1 << 16)
      throw IoError(path + ": implausible layer shape");
    l.W.resize(size_t(l.out) * l.in);
    for (auto& v : l.W) v = T(r.scalar<double>());
    l.b.resize(l.out);
    for (auto& v : l.b) v = T(r.scalar<double>());
    net.layers.push_back(std::move(l));
  }
  return net;
}

}  // namespace nm
