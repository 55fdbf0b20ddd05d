#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace nm {

// 3-vector with value semantics. T is float or double.
template <typename T>
struct Vec3 {
  T x = 0, y = 0, z = 0;

  Vec3() = default;
  Vec3(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}
  static Vec3 all(T v) { return {v, v, v}; }

  T& operator[](int i) { return (&x)[i]; }
  T operator[](int i) const { return (&x)[i]; }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(T s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(T s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(T s) { x *= s; y *= s; z *= s; return *this; }

  friend Vec3 operator*(T s, const Vec3& v) { return v * s; }
};

template <typename T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <typename T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <typename T>
T norm2(const Vec3<T>& a) { return dot(a, a); }

template <typename T>
T norm(const Vec3<T>& a) { return std::sqrt(norm2(a)); }

template <typename T>
Vec3<T> cwise_mul(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.x * b.x, a.y * b.y, a.z * b.z};
}

// 3x3 matrix, row-major storage.
template <typename T>
struct Mat3 {
  std::array<T, 9> m{};  // m[3*r + c]

  Mat3() = default;
  static Mat3 zero() { return Mat3{}; }
  static Mat3 identity() {
    Mat3 I;
    I(0, 0) = I(1, 1) = I(2, 2) = T(1);
    return I;
  }
  static Mat3 diag(T a, T b, T c) {
    Mat3 D;
    D(0, 0) = a; D(1, 1) = b; D(2, 2) = c;
    return D;
  }
  static Mat3 diag(const Vec3<T>& d) { return diag(d.x, d.y, d.z); }
  static Mat3 from_rows(const Vec3<T>& r0, const Vec3<T>& r1, const Vec3<T>& r2) {
    Mat3 A;
    for (int c = 0; c < 3; ++c) { A(0, c) = r0[c]; A(1, c) = r1[c]; A(2, c) = r2[c]; }
    return A;
  }
  static Mat3 from_cols(const Vec3<T>& c0, const Vec3<T>& c1, const Vec3<T>& c2) {
    Mat3 A;
    for (int r = 0; r < 3; ++r) { A(r, 0) = c0[r]; A(r, 1) = c1[r]; A(r, 2) = c2[r]; }
    return A;
  }

  T& operator()(int r, int c) { return m[3 * r + c]; }
  T operator()(int r, int c) const { return m[3 * r + c]; }

  Vec3<T> row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
  Vec3<T> col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }
  void set_col(int c, const Vec3<T>& v) { m[c] = v.x; m[3 + c] = v.y; m[6 + c] = v.z; }

  Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
    return r;
  }
  Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = m[i] - o.m[i];
    return r;
  }
  Mat3 operator*(T s) const {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = m[i] * s;
    return r;
  }
  Mat3& operator+=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) m[i] += o.m[i];
    return *this;
  }
  Mat3& operator-=(const Mat3& o) {
    for (int i = 0; i < 9; ++i) m[i] -= o.m[i];
    return *this;
  }
  friend Mat3 operator*(T s, const Mat3& a) { return a * s; }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
    return r;
  }
  Vec3<T> operator*(const Vec3<T>& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
};

template <typename T>
Mat3<T> transpose(const Mat3<T>& a) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

template <typename T>
T trace(const Mat3<T>& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

template <typename T>
T det(const Mat3<T>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

template <typename T>
Mat3<T> inverse(const Mat3<T>& a) {
  Mat3<T> adj;
  adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  adj(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  adj(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  adj(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  adj(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  adj(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  adj(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  T d = det(a);
  return adj * (T(1) / d);
}

template <typename T>
Mat3<T> outer(const Vec3<T>& a, const Vec3<T>& b) {
  Mat3<T> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

template <typename T>
T frobenius_inner(const Mat3<T>& a, const Mat3<T>& b) {
  T s = 0;
  for (int i = 0; i < 9; ++i) s += a.m[i] * b.m[i];
  return s;
}

template <typename T>
T frobenius_norm(const Mat3<T>& a) { return std::sqrt(frobenius_inner(a, a)); }

template <typename T>
T max_abs(const Mat3<T>& a) {
  T s = 0;
  for (int i = 0; i < 9; ++i) s = std::max(s, std::abs(a.m[i]));
  return s;
}

template <typename T>
Mat3<T> sym(const Mat3<T>& a) { return (a + transpose(a)) * T(0.5); }

template <typename T>
Mat3<T> skew(const Mat3<T>& a) { return (a - transpose(a)) * T(0.5); }

// Axial vector of a skew matrix: skew_mat(w) v = w x v.
template <typename T>
Vec3<T> axial(const Mat3<T>& w) {
  return {w(2, 1), w(0, 2), w(1, 0)};
}

template <typename T>
Mat3<T> skew_mat(const Vec3<T>& w) {
  Mat3<T> s;
  s(0, 1) = -w.z; s(0, 2) = w.y;
  s(1, 0) = w.z;  s(1, 2) = -w.x;
  s(2, 0) = -w.y; s(2, 1) = w.x;
  return s;
}

using Vec3f = Vec3<float>;
using Vec3d = Vec3<double>;
using Mat3f = Mat3<float>;
using Mat3d = Mat3<double>;

}  // namespace nm
