#pragma once

// Quaternion arithmetic and the geometry of the sphere S of unit imaginaries,
// S = { q : q^2 = -1 }.  Everything downstream (series, operators, subspaces)
// is built on these two value types.

#include <cmath>
#include <optional>
#include <utility>

#include "slicelab/error.hpp"

namespace slicelab {

// Absolute tolerance below which a norm counts as zero.
inline constexpr double kZeroTol = 1e-12;

struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(double real) : w(real) {}  // reals embed in H

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double re() const { return w; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  double im_norm() const { return std::sqrt(x * x + y * y + z * z); }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

// Hamilton product; noncommutative, so factor order matters everywhere.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double eps = kZeroTol) {
  return (a - b).norm() <= eps;
}

inline Quaternion inverse(const Quaternion& q) {
  double nsq = q.norm_sq();
  if (std::sqrt(nsq) <= kZeroTol) fail(Err::ZeroDivision, "quaternion inverse of (approximately) zero");
  return {q.w / nsq, -q.x / nsq, -q.y / nsq, -q.z / nsq};
}

// A point of S, kept normalized on construction.
struct UnitImaginary {
  double x = 1.0, y = 0.0, z = 0.0;

  UnitImaginary() = default;
  UnitImaginary(double x_, double y_, double z_) {
    double n = std::sqrt(x_ * x_ + y_ * y_ + z_ * z_);
    if (n <= kZeroTol) fail(Err::DegenerateUnits, "cannot normalize zero imaginary direction");
    x = x_ / n; y = y_ / n; z = z_ / n;
  }

  static UnitImaginary i() { return {1, 0, 0}; }
  static UnitImaginary j() { return {0, 1, 0}; }
  static UnitImaginary k() { return {0, 0, 1}; }

  Quaternion q() const { return {0.0, x, y, z}; }
  UnitImaginary operator-() const {
    UnitImaginary r;
    r.x = -x; r.y = -y; r.z = -z;
    return r;
  }
};

inline double dot(const UnitImaginary& a, const UnitImaginary& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Angle between two unit imaginaries, in radians.
inline double angle_between(const UnitImaginary& a, const UnitImaginary& b) {
  double c = dot(a, b);
  return std::acos(std::max(-1.0, std::min(1.0, c)));
}

// Splits the product KJ into -<K,J> + K x J, i.e. returns (dot, cross) with
// mul(K, J) = -dot + cross.  The cross part is a pure imaginary quaternion.
inline std::pair<double, Quaternion> dot_cross_decompose(const UnitImaginary& K, const UnitImaginary& J) {
  double d = dot(K, J);
  Quaternion c{0.0, K.y * J.z - K.z * J.y, K.z * J.x - K.x * J.z, K.x * J.y - K.y * J.x};
  return {d, c};
}

// e^{tI} = cos t + I sin t; parameterizes the boundary circle of the slice L_I.
inline Quaternion exp_unit(double t, const UnitImaginary& I) {
  double c = std::cos(t), s = std::sin(t);
  return {c, s * I.x, s * I.y, s * I.z};
}

// q = x + yI with y >= 0; the axis is undefined (within tolerance) for reals.
struct SliceDecomposition {
  double x = 0.0;
  double y = 0.0;
  std::optional<UnitImaginary> axis;
};

inline SliceDecomposition slice_decompose(const Quaternion& q) {
  SliceDecomposition d;
  d.x = q.w;
  d.y = q.im_norm();
  if (d.y > kZeroTol) d.axis = UnitImaginary{q.x, q.y, q.z};
  return d;
}

}  // namespace slicelab
