#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "nmlab/core/error.hpp"
#include "nmlab/core/types.hpp"

namespace nm {

enum class BoundaryType { Slip, Sticky };
enum class TransferScheme { Pic, Apic };

// World description: background grid over [0,1]^3, gravity, floor.
struct SceneConfig {
  int grid_n = 32;                  // cells per axis
  Vec3d gravity{0.0, -9.8, 0.0};    // m/s^2
  double floor_height = 3.0 / 32.0; // m
  BoundaryType boundary = BoundaryType::Slip;
  double friction = 0.0;            // Coulomb coefficient for slip floors
  double dt = 1e-3;                 // s
  int save_every = 10;              // substeps per saved frame
  TransferScheme transfer = TransferScheme::Pic;

  double cell_width() const { return 1.0 / grid_n; }
  double safe_margin() const { return 2.0 / grid_n; }

  void validate() const {
    if (grid_n < 8) throw ArgumentError("grid_n must be >= 8");
    if (!(dt > 0)) throw ArgumentError("dt must be positive");
    if (save_every < 1) throw ArgumentError("save_every must be >= 1");
    if (floor_height < 0 || floor_height > 1)
      throw ArgumentError("floor must lie within the unit domain");
  }
};

// Sampling volumes: analytic primitives, unions of primitives, or an
// imported point list (NMPTS01).
struct ShapeSpec {
  enum class Kind { Sphere, Box, Union, Points };
  Kind kind = Kind::Sphere;

  Vec3d center{0.5, 0.5, 0.5};  // sphere
  double radius = 0.1;

  Vec3d box_min{0.4, 0.4, 0.4};  // box
  Vec3d box_max{0.6, 0.6, 0.6};

  std::vector<ShapeSpec> parts;  // union

  std::vector<Vec3d> points;  // imported point list

  static ShapeSpec sphere(Vec3d c, double r) {
    ShapeSpec s;
    s.kind = Kind::Sphere;
    s.center = c;
    s.radius = r;
    return s;
  }
  static ShapeSpec box(Vec3d lo, Vec3d hi) {
    ShapeSpec s;
    s.kind = Kind::Box;
    s.box_min = lo;
    s.box_max = hi;
    return s;
  }
  static ShapeSpec union_of(std::vector<ShapeSpec> parts) {
    ShapeSpec s;
    s.kind = Kind::Union;
    s.parts = std::move(parts);
    return s;
  }
  static ShapeSpec point_list(std::vector<Vec3d> pts) {
    ShapeSpec s;
    s.kind = Kind::Points;
    s.points = std::move(pts);
    return s;
  }

  bool contains(const Vec3d& p) const {
    switch (kind) {
      case Kind::Sphere:
        return norm2(p - center) <= radius * radius;
      case Kind::Box:
        return p.x >= box_min.x && p.x <= box_max.x && p.y >= box_min.y &&
               p.y <= box_max.y && p.z >= box_min.z && p.z <= box_max.z;
      case Kind::Union:
        for (const auto& part : parts)
          if (part.contains(p)) return true;
        return false;
      case Kind::Points:
        return false;  // point lists are used verbatim, not resampled
    }
    return false;
  }

  void bounds(Vec3d& lo, Vec3d& hi) const {
    switch (kind) {
      case Kind::Sphere:
        lo = center - Vec3d::all(radius);
        hi = center + Vec3d::all(radius);
        return;
      case Kind::Box:
        lo = box_min;
        hi = box_max;
        return;
      case Kind::Union: {
        lo = Vec3d::all(1e30);
        hi = Vec3d::all(-1e30);
        for (const auto& part : parts) {
          Vec3d plo, phi;
          part.bounds(plo, phi);
          for (int a = 0; a < 3; ++a) {
            lo[a] = std::min(lo[a], plo[a]);
            hi[a] = std::max(hi[a], phi[a]);
          }
        }
        return;
      }
      case Kind::Points: {
        lo = Vec3d::all(1e30);
        hi = Vec3d::all(-1e30);
        for (const auto& p : points)
          for (int a = 0; a < 3; ++a) {
            lo[a] = std::min(lo[a], p[a]);
            hi[a] = std::max(hi[a], p[a]);
          }
        return;
      }
    }
  }

  // Analytic volume where closed forms exist; unions are measured on a
  // deterministic jittered grid so overlapping parts are not double counted.
  double volume() const {
    switch (kind) {
      case Kind::Sphere:
        return 4.0 / 3.0 * 3.14159265358979323846 * radius * radius * radius;
      case Kind::Box: {
        Vec3d d = box_max - box_min;
        return d.x * d.y * d.z;
      }
      case Kind::Union:
        return measured_volume(96);
      case Kind::Points:
        throw ArgumentError("point-list shapes have no analytic volume");
    }
    return 0;
  }

  double measured_volume(int grid) const {
    Vec3d lo, hi;
    bounds(lo, hi);
    Vec3d d = hi - lo;
    double cell = d.x * d.y * d.z / (double(grid) * grid * grid);
    long long inside = 0;
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j)
        for (int k = 0; k < grid; ++k) {
          Vec3d p{lo.x + (i + 0.5) * d.x / grid, lo.y + (j + 0.5) * d.y / grid,
                  lo.z + (k + 0.5) * d.z / grid};
          if (contains(p)) ++inside;
        }
    return double(inside) * cell;
  }

  bool inside_margin(double margin) const {
    Vec3d lo, hi;
    bounds(lo, hi);
    for (int a = 0; a < 3; ++a)
      if (lo[a] < margin || hi[a] > 1.0 - margin) return false;
    return true;
  }
};

}  // namespace nm
