#include "slicelab/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slicelab/config.hpp"
#include "slicelab/error.hpp"

namespace slicelab {

namespace {

void check_support_cap(int lo, int hi, const char* op) {
  int cap = config().max_degree;
  if (lo < -cap || hi > cap)
    fail(Err::SupportOverflow, std::string(op) + ": support [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "] exceeds max_degree " + std::to_string(cap));
}

}  // namespace

SliceLaurentSeries::SliceLaurentSeries(int n_min, std::vector<Quaternion> coeffs)
    : n_min_(n_min), c_(std::move(coeffs)) {
  if (c_.empty()) n_min_ = 0;
}

SliceLaurentSeries SliceLaurentSeries::monomial(int n, const Quaternion& a) {
  return SliceLaurentSeries(n, {a});
}

bool SliceLaurentSeries::is_hardy(double eps) const {
  for (int n = n_min(); n < 0 && n <= n_max(); ++n)
    if (coeff(n).norm() > eps) return false;
  return true;
}

double SliceLaurentSeries::l2_norm_sq() const {
  double s = 0.0;
  for (const auto& a : c_) s += a.norm_sq();
  return s;
}

double SliceLaurentSeries::l2_norm() const { return std::sqrt(l2_norm_sq()); }

double SliceLaurentSeries::l1_norm() const {
  double s = 0.0;
  for (const auto& a : c_) s += a.norm();
  return s;
}

SliceLaurentSeries SliceLaurentSeries::trimmed(double eps) const {
  int lo = 0, hi = static_cast<int>(c_.size()) - 1;
  while (lo <= hi && c_[static_cast<std::size_t>(lo)].norm() <= eps) ++lo;
  while (hi >= lo && c_[static_cast<std::size_t>(hi)].norm() <= eps) --hi;
  if (lo > hi) return {};
  return SliceLaurentSeries(n_min_ + lo,
                            std::vector<Quaternion>(c_.begin() + lo, c_.begin() + hi + 1));
}

SliceLaurentSeries SliceLaurentSeries::shifted(int k) const {
  if (is_zero()) return {};
  check_support_cap(n_min_ + k, n_max() + k, "shift");
  return SliceLaurentSeries(n_min_ + k, c_);
}

SliceLaurentSeries SliceLaurentSeries::restricted(const Interval& window) const {
  if (is_zero() || window.empty()) return {};
  int lo = std::max(n_min(), window.lo), hi = std::min(n_max(), window.hi);
  if (lo > hi) return {};
  std::vector<Quaternion> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) out.push_back(coeff(n));
  return SliceLaurentSeries(lo, std::move(out));
}

SliceLaurentSeries SliceLaurentSeries::right_mul(const Quaternion& c) const {
  std::vector<Quaternion> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * c;
  return SliceLaurentSeries(n_min_, std::move(out));
}

SliceLaurentSeries SliceLaurentSeries::scaled(double s) const {
  std::vector<Quaternion> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = s * c_[i];
  return SliceLaurentSeries(n_min_, std::move(out));
}

SliceLaurentSeries operator+(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  int lo = std::min(f.n_min(), g.n_min()), hi = std::max(f.n_max(), g.n_max());
  std::vector<Quaternion> out(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) out[static_cast<std::size_t>(n - lo)] = f.coeff(n) + g.coeff(n);
  return SliceLaurentSeries(lo, std::move(out));
}

SliceLaurentSeries operator-(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
  return f + g.scaled(-1.0);
}

SliceLaurentSeries star(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
  if (f.is_zero() || g.is_zero()) return {};
  int lo = f.n_min() + g.n_min(), hi = f.n_max() + g.n_max();
  check_support_cap(lo, hi, "star");
  std::vector<Quaternion> out(static_cast<std::size_t>(hi - lo + 1));
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return SliceLaurentSeries(lo, std::move(out));
}

SliceLaurentSeries conjugate(const SliceLaurentSeries& f) {
  std::vector<Quaternion> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs()[i].conj();
  return SliceLaurentSeries(f.is_zero() ? 0 : f.n_min(), std::move(out));
}

SliceLaurentSeries tilde(const SliceLaurentSeries& f) {
  if (f.is_zero()) return {};
  check_support_cap(-f.n_max(), -f.n_min(), "tilde");
  std::vector<Quaternion> out(f.coeffs().rbegin(), f.coeffs().rend());
  return SliceLaurentSeries(-f.n_max(), std::move(out));
}

SliceLaurentSeries symmetrize(const SliceLaurentSeries& f) {
  SliceLaurentSeries left = star(conjugate(f), f);
  SliceLaurentSeries right = star(f, conjugate(f));
  // Both orders agree coefficientwise (and are real); disagreement would mean
  // a broken convolution, not bad input.
  if (coeff_max_distance(left, right) > 1e-12)
    throw std::logic_error("symmetrize: f^c*f and f*f^c disagree beyond tolerance");
  return left;
}

Quaternion evaluate(const SliceLaurentSeries& f, const Quaternion& q) {
  if (f.is_zero()) return {};
  Quaternion acc{};
  // Nonnegative part, Horner from the top down to the constant term.
  if (f.n_max() >= 0) {
    for (int n = f.n_max(); n >= 0; --n) acc = q * acc + f.coeff(n);
  }
  // Negative part, Horner in p = q^{-1} from the bottom.
  if (f.n_min() < 0) {
    Quaternion p = inverse(q);  // ZeroDivision for q ~ 0
    Quaternion neg{};
    for (int n = f.n_min(); n <= -1; ++n) neg = p * neg + f.coeff(n);
    acc += p * neg;
  }
  return acc;
}

Quaternion t_map(const SliceLaurentSeries& f, const Quaternion& q) {
  Quaternion v = evaluate(f, q);
  if (v.norm() <= kZeroTol) fail(Err::ZeroValue, "t_map: f vanishes at the evaluation point");
  return inverse(v) * q * v;
}

SliceLaurentSeries star_inverse(const SliceLaurentSeries& f, const Interval& out_support) {
  SliceLaurentSeries ft = f.trimmed(kZeroTol);
  if (ft.is_zero()) fail(Err::NotInvertible, "star_inverse: zero series");
  int m = ft.n_min();
  Quaternion a0 = ft.coeff(m);
  // Leading coefficient of f^s is |a0|^2; below the zero tolerance the series
  // has no usable *-reciprocal at this truncation.
  if (a0.norm_sq() <= kZeroTol)
    fail(Err::NotInvertible, "star_inverse: leading coefficient of f^s below zero tolerance");
  if (out_support.empty() || out_support.hi < -m)
    fail(Err::Usage, "star_inverse: requested window ends before q^{-m}");
  check_support_cap(-m, out_support.hi, "star_inverse");

  int count = out_support.hi + m + 1;  // coefficients of r0 = q^m * r at 0..count-1
  Quaternion a0inv = inverse(a0);
  std::vector<Quaternion> r(static_cast<std::size_t>(count));
  r[0] = a0inv;
  int fw = ft.support().length();
  for (int n = 1; n < count; ++n) {
    Quaternion s{};
    int kmax = std::min(n, fw - 1);
    for (int k = 1; k <= kmax; ++k) s += ft.coeff(m + k) * r[static_cast<std::size_t>(n - k)];
    r[static_cast<std::size_t>(n)] = -(a0inv * s);
  }
  return SliceLaurentSeries(-m, std::move(r)).trimmed(0.0);
}

Quaternion l2_inner(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
  if (f.is_zero() || g.is_zero()) return {};
  int lo = std::max(f.n_min(), g.n_min()), hi = std::min(f.n_max(), g.n_max());
  Quaternion s{};
  for (int n = lo; n <= hi; ++n) s += g.coeff(n).conj() * f.coeff(n);
  return s;
}

double coeff_distance(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
  return (f - g).l2_norm();
}

double coeff_max_distance(const SliceLaurentSeries& f, const SliceLaurentSeries& g) {
  SliceLaurentSeries d = f - g;
  double m = 0.0;
  for (const auto& a : d.coeffs()) m = std::max(m, a.norm());
  return m;
}

}  // namespace slicelab
