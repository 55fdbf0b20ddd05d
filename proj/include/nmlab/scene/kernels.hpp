#pragma once

#include <vector>

#include "nmlab/core/error.hpp"
#include "nmlab/core/rng.hpp"
#include "nmlab/core/types.hpp"

namespace nm {

// Gaussian kernel cloud: render-side representation of the object.
// Colors are constant per kernel (degree-0 shading).
template <typename T>
struct GaussianKernelSet {
  std::vector<Vec3<T>> center;
  std::vector<T> opacity;     // [0,1]
  std::vector<Mat3<T>> cov;   // SPD, m^2
  std::vector<Vec3<T>> color; // RGB in [0,1]

  size_t size() const { return center.size(); }
};

// Builds isotropic kernels at the given points: A = radius^2 * I.
template <typename T>
GaussianKernelSet<T> synth_kernels(const std::vector<Vec3<T>>& points, T radius,
                                   const Vec3<T>& color, T opacity) {
  if (!(radius > 0)) throw ArgumentError("kernel radius must be positive");
  if (opacity < 0 || opacity > 1) throw ArgumentError("opacity must be in [0,1]");
  GaussianKernelSet<T> ks;
  ks.center = points;
  ks.opacity.assign(points.size(), opacity);
  ks.cov.assign(points.size(), Mat3<T>::identity() * (radius * radius));
  ks.color.assign(points.size(), color);
  return ks;
}

// Deterministic subsample without replacement (partial Fisher-Yates).
template <typename T>
std::vector<Vec3<T>> subsample_points(const std::vector<Vec3<T>>& points,
                                      size_t count, uint64_t seed) {
  std::vector<size_t> idx(points.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(seed, "scene.subsample");
  count = std::min(count, points.size());
  std::vector<Vec3<T>> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    size_t j = i + rng.uniform_index(idx.size() - i);
    std::swap(idx[i], idx[j]);
    out.push_back(points[idx[i]]);
  }
  return out;
}

}  // namespace nm
