#pragma once

#include <cmath>
#include <vector>

#include "nmlab/core/rng.hpp"
#include "nmlab/scene/scene.hpp"

namespace nm {

// Uniform fill of a shape with ~target_count points. Stratified
// jittered-grid sampling over the bounding box: one candidate per cell,
// kept when inside the shape. Deterministic for a fixed seed.
inline std::vector<Vec3d> sample_volume(const ShapeSpec& shape, int target_count,
                                        uint64_t seed,
                                        double safe_margin = 2.0 / 32.0) {
  if (target_count < 1) throw ArgumentError("target_count must be >= 1");
  if (shape.kind == ShapeSpec::Kind::Points) {
    for (const auto& p : shape.points) {
      for (int a = 0; a < 3; ++a)
        if (p[a] < safe_margin || p[a] > 1.0 - safe_margin)
          throw DomainError("imported point outside safe margin");
    }
    return shape.points;
  }
  if (!shape.inside_margin(safe_margin))
    throw DomainError("shape outside safe margin");

  Vec3d lo, hi;
  shape.bounds(lo, hi);
  Vec3d ext = hi - lo;
  double bbox_vol = ext.x * ext.y * ext.z;
  double shape_vol = shape.volume();
  if (!(shape_vol > 0)) throw DomainError("shape has zero volume");

  // Cell count chosen so the expected kept count matches the target.
  double cells = double(target_count) * bbox_vol / shape_vol;
  int m = std::max(1, int(std::llround(std::cbrt(cells))));

  Rng rng(seed, "scene.sample_volume");
  std::vector<Vec3d> pts;
  pts.reserve(size_t(target_count) + size_t(target_count) / 4);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Vec3d p{lo.x + (i + rng.uniform()) * ext.x / m,
                lo.y + (j + rng.uniform()) * ext.y / m,
                lo.z + (k + rng.uniform()) * ext.z / m};
        if (shape.contains(p)) pts.push_back(p);
      }
  if (pts.empty()) throw DomainError("sampling produced no points");
  return pts;
}

}  // namespace nm
