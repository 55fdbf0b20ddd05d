#pragma once

#include <algorithm>
#include <cmath>

#include "nmlab/core/types.hpp"

namespace nm {

// Jacobi eigensolver for a symmetric 3x3 matrix. Returns eigenvalues in
// descending order and the matching orthonormal eigenvectors as columns
// of V (right-handed).
template <typename T>
void sym_eig3(const Mat3<T>& a_in, Vec3<T>& eigvals, Mat3<T>& v_out) {
  Mat3<T> a = a_in;
  Mat3<T> v = Mat3<T>::identity();

  for (int sweep = 0; sweep < 32; ++sweep) {
    T off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
    T diag = std::abs(a(0, 0)) + std::abs(a(1, 1)) + std::abs(a(2, 2));
    if (off <= std::numeric_limits<T>::epsilon() * (diag + off)) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a(p, q) == T(0)) continue;
        T apq = a(p, q);
        T theta = (a(q, q) - a(p, p)) / (T(2) * apq);
        T t = std::copysign(T(1), theta) /
              (std::abs(theta) + std::sqrt(theta * theta + T(1)));
        T c = T(1) / std::sqrt(t * t + T(1));
        T s = t * c;
        // A <- J^T A J with Givens rotation in the (p,q) plane.
        for (int k = 0; k < 3; ++k) {
          T akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          T apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          T vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  int order[3] = {0, 1, 2};
  T d[3] = {a(0, 0), a(1, 1), a(2, 2)};
  std::sort(order, order + 3, [&](int i, int j) { return d[i] > d[j]; });
  eigvals = {d[order[0]], d[order[1]], d[order[2]]};
  v_out = Mat3<T>::from_cols(v.col(order[0]), v.col(order[1]), v.col(order[2]));
  if (det(v_out) < T(0)) v_out.set_col(2, -v_out.col(2));
}

template <typename T>
struct Svd3 {
  Mat3<T> u;
  Vec3<T> sigma;  // descending, nonnegative for det(F) > 0 inputs
  Mat3<T> v;
};

// Rotation-form SVD of F with det(F) > 0: F = U diag(sigma) V^T with
// U, V in SO(3). Computed from the eigendecomposition of F^T F.
template <typename T>
Svd3<T> svd3(const Mat3<T>& f) {
  Mat3<T> c = transpose(f) * f;
  Vec3<T> lam;
  Mat3<T> v;
  sym_eig3(c, lam, v);

  Vec3<T> sigma{std::sqrt(std::max(lam.x, T(0))), std::sqrt(std::max(lam.y, T(0))),
                std::sqrt(std::max(lam.z, T(0)))};

  Mat3<T> u;
  const T tiny = std::numeric_limits<T>::min();
  Vec3<T> u0 = (f * v.col(0)) / std::max(sigma.x, tiny);
  T n0 = norm(u0);
  u0 = n0 > T(0) ? u0 / n0 : Vec3<T>{1, 0, 0};
  Vec3<T> u1 = (f * v.col(1)) / std::max(sigma.y, tiny);
  u1 -= u0 * dot(u0, u1);
  T n1 = norm(u1);
  if (n1 > T(1e-12)) {
    u1 = u1 / n1;
  } else {
    u1 = std::abs(u0.x) < T(0.9) ? Vec3<T>{1, 0, 0} : Vec3<T>{0, 1, 0};
    u1 -= u0 * dot(u0, u1);
    u1 = u1 / norm(u1);
  }
  Vec3<T> u2 = cross(u0, u1);
  u = Mat3<T>::from_cols(u0, u1, u2);

  // det(F) < 0 folds the sign into the smallest singular value.
  if (det(f) < T(0)) sigma.z = -sigma.z;
  return {u, sigma, v};
}

// Polar decomposition F = R S with R in SO(3), S symmetric.
template <typename T>
void polar_decompose(const Mat3<T>& f, Mat3<T>& r, Mat3<T>& s) {
  Svd3<T> svd = svd3(f);
  r = svd.u * transpose(svd.v);
  s = svd.v * Mat3<T>::diag(svd.sigma) * transpose(svd.v);
}

}  // namespace nm
