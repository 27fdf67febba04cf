#include "slicelab/operators.hpp"

#include <algorithm>
#include <cmath>

#include "slicelab/error.hpp"
#include "slicelab/random.hpp"

namespace slicelab {

QuaternionMatrix::QuaternionMatrix(const Interval& rows, const Interval& cols)
    : rows_(rows), cols_(cols) {
  if (rows_.empty() || cols_.empty()) fail(Err::Usage, "matrix index ranges must be nonempty");
  e_.assign(static_cast<size_t>(rows_.length()) * cols_.length(), Quaternion{});
}

Quaternion& QuaternionMatrix::at(int i, int j) {
  if (!rows_.contains(i) || !cols_.contains(j)) fail(Err::Usage, "matrix index out of range");
  return e_[static_cast<size_t>(i - rows_.lo) * cols_.length() + (j - cols_.lo)];
}

const Quaternion& QuaternionMatrix::at(int i, int j) const {
  if (!rows_.contains(i) || !cols_.contains(j)) fail(Err::Usage, "matrix index out of range");
  return e_[static_cast<size_t>(i - rows_.lo) * cols_.length() + (j - cols_.lo)];
}

QuaternionMatrix& QuaternionMatrix::operator-=(const QuaternionMatrix& o) {
  if (!(rows_ == o.rows_) || !(cols_ == o.cols_))
    fail(Err::AmbientMismatch, "matrix ranges differ");
  for (size_t n = 0; n < e_.size(); ++n) e_[n] -= o.e_[n];
  return *this;
}

QuaternionMatrix operator-(QuaternionMatrix a, const QuaternionMatrix& b) {
  a -= b;
  return a;
}

QuaternionMatrix identity(const Interval& range) {
  QuaternionMatrix m(range, range);
  for (int i = range.lo; i <= range.hi; ++i) m.at(i, i) = Quaternion{1.0};
  return m;
}

QuaternionMatrix multiplier_matrix(const SliceLaurentSeries& phi, const Interval& domain,
                                   const Interval& codomain) {
  QuaternionMatrix m(codomain, domain);
  for (int i = codomain.lo; i <= codomain.hi; ++i)
    for (int j = domain.lo; j <= domain.hi; ++j) m.at(i, j) = phi.coeff(i - j);
  return m;
}

bool multiplier_truncates(const SliceLaurentSeries& phi, const Interval& domain,
                          const Interval& codomain) {
  if (phi.is_zero() || domain.empty()) return false;
  Interval reach{domain.lo + phi.n_min(), domain.hi + phi.n_max()};
  return !codomain.contains(reach);
}

SliceLaurentSeries apply(const QuaternionMatrix& m, const SliceLaurentSeries& f) {
  if (!f.is_zero() && !m.cols().contains(f.support()))
    fail(Err::AmbientMismatch, "series support exceeds matrix domain");
  std::vector<Quaternion> out(static_cast<size_t>(m.rows().length()));
  for (int i = m.rows().lo; i <= m.rows().hi; ++i) {
    Quaternion acc{};
    for (int j = m.cols().lo; j <= m.cols().hi; ++j) acc += m.at(i, j) * f.coeff(j);
    out[static_cast<size_t>(i - m.rows().lo)] = acc;
  }
  return SliceLaurentSeries(m.rows().lo, std::move(out)).trimmed(0.0);
}

QuaternionMatrix adjoint(const QuaternionMatrix& m) {
  QuaternionMatrix a(m.cols(), m.rows());
  for (int i = m.cols().lo; i <= m.cols().hi; ++i)
    for (int j = m.rows().lo; j <= m.rows().hi; ++j) a.at(i, j) = m.at(j, i).conj();
  return a;
}

QuaternionMatrix matmul(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  if (!(a.cols() == b.rows())) fail(Err::AmbientMismatch, "inner matrix ranges differ");
  QuaternionMatrix c(a.rows(), b.cols());
  for (int i = a.rows().lo; i <= a.rows().hi; ++i)
    for (int k = a.cols().lo; k <= a.cols().hi; ++k) {
      const Quaternion& aik = a.at(i, k);
      if (aik.norm_sq() == 0.0) continue;
      for (int j = b.cols().lo; j <= b.cols().hi; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

QuaternionMatrix restrict_cols(const QuaternionMatrix& m, const Interval& cols) {
  if (!m.cols().contains(cols)) fail(Err::Usage, "column restriction out of range");
  QuaternionMatrix r(m.rows(), cols);
  for (int i = m.rows().lo; i <= m.rows().hi; ++i)
    for (int j = cols.lo; j <= cols.hi; ++j) r.at(i, j) = m.at(i, j);
  return r;
}

namespace {

double vec_norm(const std::vector<Quaternion>& v) {
  double s = 0.0;
  for (const auto& q : v) s += q.norm_sq();
  return std::sqrt(s);
}

}  // namespace

double operator_norm(const QuaternionMatrix& m, int iterations) {
  QuaternionMatrix g = matmul(adjoint(m), m);
  const Interval range = g.rows();
  Rng rng(0x5eedull);
  std::vector<Quaternion> v(static_cast<size_t>(range.length()));
  for (auto& q : v) q = rng.quaternion();
  double nv = vec_norm(v);
  if (nv == 0.0) return 0.0;
  for (auto& q : v) q = q * (1.0 / nv);
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<Quaternion> w(v.size());
    for (int i = range.lo; i <= range.hi; ++i) {
      Quaternion acc{};
      for (int j = range.lo; j <= range.hi; ++j)
        acc += g.at(i, j) * v[static_cast<size_t>(j - range.lo)];
      w[static_cast<size_t>(i - range.lo)] = acc;
    }
    double nw = vec_norm(w);
    if (nw == 0.0) return 0.0;
    lambda = nw;
    for (size_t n = 0; n < w.size(); ++n) v[n] = w[n] * (1.0 / nw);
  }
  return std::sqrt(lambda);
}

double isometry_residual(const SliceLaurentSeries& phi, const Interval& domain) {
  if (phi.is_zero()) return 1.0;
  Interval codomain{domain.lo + phi.n_min(), domain.hi + phi.n_max()};
  QuaternionMatrix m = multiplier_matrix(phi, domain, codomain);
  double probe = 0.0;
  for (int j = domain.lo; j <= domain.hi; ++j) {
    double col = 0.0;
    for (int i = codomain.lo; i <= codomain.hi; ++i) col += m.at(i, j).norm_sq();
    probe = std::max(probe, std::abs(std::sqrt(col) - 1.0));
  }
  QuaternionMatrix gram = matmul(adjoint(m), m) - identity(domain);
  return probe + operator_norm(gram);
}

double projection_residual(const SliceLaurentSeries& phi, const Interval& domain) {
  if (phi.is_zero()) return 0.0;
  const int pad = std::max(std::abs(phi.n_min()), std::abs(phi.n_max()));
  Interval window{domain.lo - 2 * pad, domain.hi + 2 * pad};
  QuaternionMatrix m = multiplier_matrix(phi, window, window);
  QuaternionMatrix idem = restrict_cols(matmul(m, m) - m, domain);
  QuaternionMatrix herm = restrict_cols(adjoint(m) - m, domain);
  return operator_norm(idem) + operator_norm(herm);
}

}  // namespace slicelab
