#pragma once

#include <string>
#include <vector>

#include "nmlab/core/error.hpp"
#include "nmlab/core/io.hpp"
#include "nmlab/core/types.hpp"

namespace nm {

// Simulation state s_t: one entry per material point.
template <typename T>
struct ParticleSet {
  std::vector<Vec3<T>> pos;   // m, inside [0,1]^3
  std::vector<Vec3<T>> vel;   // m/s
  std::vector<Mat3<T>> F;     // elastic deformation gradient
  std::vector<T> mass;        // kg
  std::vector<T> V0;          // rest volume, m^3
  std::vector<T> rho;         // kg/m^3

  size_t size() const { return pos.size(); }

  void append(const ParticleSet& other) {
    pos.insert(pos.end(), other.pos.begin(), other.pos.end());
    vel.insert(vel.end(), other.vel.begin(), other.vel.end());
    F.insert(F.end(), other.F.begin(), other.F.end());
    mass.insert(mass.end(), other.mass.begin(), other.mass.end());
    V0.insert(V0.end(), other.V0.begin(), other.V0.end());
    rho.insert(rho.end(), other.rho.begin(), other.rho.end());
  }

  T total_mass() const {
    T m = 0;
    for (T mi : mass) m += mi;
    return m;
  }

  Vec3<T> total_momentum() const {
    Vec3<T> p{};
    for (size_t i = 0; i < size(); ++i) p += vel[i] * mass[i];
    return p;
  }
};

// Rest-state construction: volume split evenly over particles, zero
// velocity, identity deformation gradient, M = rho * V0.
template <typename T>
ParticleSet<T> init_rest_state(const std::vector<Vec3<T>>& positions,
                               const std::vector<T>& rho_per_particle,
                               T total_volume) {
  if (!(total_volume > 0)) throw ArgumentError("total_volume must be positive");
  if (positions.empty()) throw ArgumentError("no particles");
  if (rho_per_particle.size() != positions.size())
    throw ArgumentError("rho count does not match particle count");
  for (T r : rho_per_particle)
    if (!(r > 0)) throw ArgumentError("density must be positive");

  ParticleSet<T> ps;
  size_t n = positions.size();
  ps.pos = positions;
  ps.vel.assign(n, Vec3<T>{});
  ps.F.assign(n, Mat3<T>::identity());
  ps.rho = rho_per_particle;
  ps.V0.assign(n, total_volume / T(n));
  ps.mass.resize(n);
  for (size_t i = 0; i < n; ++i) ps.mass[i] = ps.rho[i] * ps.V0[i];
  return ps;
}

template <typename T>
ParticleSet<T> init_rest_state(const std::vector<Vec3<T>>& positions, T rho,
                               T total_volume) {
  return init_rest_state(positions, std::vector<T>(positions.size(), rho),
                         total_volume);
}

// Point-list file: magic "NMPTS01", u64 count, N x 3 f32 positions.
inline void write_points(const std::string& path, const std::vector<Vec3d>& pts) {
  BinaryWriter w(path);
  w.magic("NMPTS01");
  w.scalar<uint64_t>(pts.size());
  for (const auto& p : pts) {
    w.scalar<float>(float(p.x));
    w.scalar<float>(float(p.y));
    w.scalar<float>(float(p.z));
  }
}

inline std::vector<Vec3d> read_points(const std::string& path) {
  BinaryReader r(path);
  r.expect_magic("NMPTS01");
  uint64_t n = r.scalar<uint64_t>();
  std::vector<Vec3d> pts(n);
  for (auto& p : pts) {
    p.x = r.scalar<float>();
    p.y = r.scalar<float>();
    p.z = r.scalar<float>();
  }
  return pts;
}

}  // namespace nm
