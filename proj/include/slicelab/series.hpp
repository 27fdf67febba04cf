#pragma once

// Finitely supported quaternionic Laurent series
//
//     f(q) = sum_n q^n a_n,      a_n in H,
//
// with powers of q on the left and coefficients on the right.  These model
// slice L^2 boundary functions at truncation scale; the monomials q^n form an
// orthonormal basis for the right inner product implemented by l2_inner.

#include <vector>

#include "slicelab/interval.hpp"
#include "slicelab/quaternion.hpp"

namespace slicelab {

class SliceLaurentSeries {
 public:
  SliceLaurentSeries() = default;  // the zero series
  SliceLaurentSeries(int n_min, std::vector<Quaternion> coeffs);

  static SliceLaurentSeries constant(const Quaternion& c) { return monomial(0, c); }
  static SliceLaurentSeries monomial(int n, const Quaternion& a = 1.0);

  bool is_zero() const { return c_.empty(); }
  int n_min() const { return n_min_; }
  int n_max() const { return n_min_ + static_cast<int>(c_.size()) - 1; }
  Interval support() const { return c_.empty() ? Interval{} : Interval{n_min(), n_max()}; }

  // Coefficient of q^n; zero outside the stored window.
  Quaternion coeff(int n) const {
    int idx = n - n_min_;
    if (idx < 0 || idx >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(idx)];
  }
  const std::vector<Quaternion>& coeffs() const { return c_; }

  // True when every coefficient with negative index is (approximately) zero.
  bool is_hardy(double eps = kZeroTol) const;

  double l2_norm_sq() const;
  double l2_norm() const;
  double l1_norm() const;  // sum of coefficient norms

  // Drops leading/trailing coefficients with norm <= eps.
  SliceLaurentSeries trimmed(double eps = 0.0) const;
  // q^k * f, i.e. every index shifted by k.
  SliceLaurentSeries shifted(int k) const;
  // Coefficients restricted to the window; others dropped.
  SliceLaurentSeries restricted(const Interval& window) const;
  // f * c for a constant c: every coefficient multiplied by c on the right.
  SliceLaurentSeries right_mul(const Quaternion& c) const;
  SliceLaurentSeries scaled(double s) const;

 private:
  int n_min_ = 0;
  std::vector<Quaternion> c_;
};

SliceLaurentSeries operator+(const SliceLaurentSeries& f, const SliceLaurentSeries& g);
SliceLaurentSeries operator-(const SliceLaurentSeries& f, const SliceLaurentSeries& g);

// The *-product: (f*g)_n = sum_k a_k b_{n-k}.  Fails with SupportOverflow if
// the result support leaves [-max_degree, max_degree].
SliceLaurentSeries star(const SliceLaurentSeries& f, const SliceLaurentSeries& g);

// f^c: coefficientwise quaternion conjugation.  (f*g)^c = g^c * f^c.
SliceLaurentSeries conjugate(const SliceLaurentSeries& f);

// f~(q) = f(conj(q)); on the boundary this is the index reversal a_n -> a_{-n}.
SliceLaurentSeries tilde(const SliceLaurentSeries& f);

// f^s = f^c * f = f * f^c; both orders are computed and checked against each
// other (they agree coefficientwise, and the result has real coefficients).
SliceLaurentSeries symmetrize(const SliceLaurentSeries& f);

// Evaluation by Horner from both ends of the support.  Negative indices need
// q invertible: ZeroDivision otherwise.
Quaternion evaluate(const SliceLaurentSeries& f, const Quaternion& q);

// T_{f^c}(q) = f(q)^{-1} q f(q); defined where f(q) != 0 (ZeroValue otherwise).
// It stays on the sphere of q, and f*g(q) = f(q) g(T_{f^c}(q)).
Quaternion t_map(const SliceLaurentSeries& f, const Quaternion& q);

// Coefficient-level *-inverse r with star(f, r) = 1 on the requested window.
// After factoring the minimal monomial q^m out of f the convolution system is
// lower triangular and solved directly; the result is supported on
// [-m, out_support.hi].  NotInvertible when f is (approximately) zero or the
// leading coefficient of f^s falls below the zero tolerance.
SliceLaurentSeries star_inverse(const SliceLaurentSeries& f, const Interval& out_support);

// Right inner product <f, g> = sum_n conj(b_n) a_n.  Right-linear in f:
// <f c, g> = <f, g> c.
Quaternion l2_inner(const SliceLaurentSeries& f, const SliceLaurentSeries& g);

// L2 / max distance between coefficient lists over the union support.
double coeff_distance(const SliceLaurentSeries& f, const SliceLaurentSeries& g);
double coeff_max_distance(const SliceLaurentSeries& f, const SliceLaurentSeries& g);

}  // namespace slicelab
