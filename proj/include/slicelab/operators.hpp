#pragma once

// Finite matrix models of multiplier operators M_phi f = phi * f acting on
// windows of the monomial basis.  Matrices act right-linearly on coefficient
// vectors: (M v)_i = sum_j M_ij v_j.  A multiplier matrix is Toeplitz,
// M_ij = a_{i-j}, and residual checks are evaluated on interior blocks whose
// convolution sums are unaffected by the window edges.

#include <vector>

#include "slicelab/interval.hpp"
#include "slicelab/quaternion.hpp"
#include "slicelab/series.hpp"

namespace slicelab {

class QuaternionMatrix {
 public:
  QuaternionMatrix() = default;
  QuaternionMatrix(const Interval& rows, const Interval& cols);

  const Interval& rows() const { return rows_; }
  const Interval& cols() const { return cols_; }

  Quaternion& at(int i, int j);
  const Quaternion& at(int i, int j) const;

  QuaternionMatrix& operator-=(const QuaternionMatrix& o);

 private:
  Interval rows_, cols_;
  std::vector<Quaternion> e_;
};

QuaternionMatrix operator-(QuaternionMatrix a, const QuaternionMatrix& b);

QuaternionMatrix identity(const Interval& range);

// Toeplitz window of M_phi from domain into codomain.
QuaternionMatrix multiplier_matrix(const SliceLaurentSeries& phi, const Interval& domain,
                                   const Interval& codomain);

// True when the codomain cannot hold domain + support(phi), i.e. the window
// truncates the action.
bool multiplier_truncates(const SliceLaurentSeries& phi, const Interval& domain,
                          const Interval& codomain);

// Matrix action on a series supported in the column range; result lives on the
// row range.
SliceLaurentSeries apply(const QuaternionMatrix& m, const SliceLaurentSeries& f);

// Conjugate transpose with swapped index ranges: (M+)_ij = conj(M_ji).
QuaternionMatrix adjoint(const QuaternionMatrix& m);

// Composition A.B (column range of A must equal row range of B).
QuaternionMatrix matmul(const QuaternionMatrix& a, const QuaternionMatrix& b);

// Column restriction (used for interior-block residuals).
QuaternionMatrix restrict_cols(const QuaternionMatrix& m, const Interval& cols);

// Spectral norm estimate: fixed-seed power iteration on M+M (50 rounds).
double operator_norm(const QuaternionMatrix& m, int iterations = 50);

// max_n | ||M e_n|| - 1 | plus ||M+M - Id|| with the codomain sized so no sum
// is truncated; zero exactly for unimodular symbols.
double isometry_residual(const SliceLaurentSeries& phi, const Interval& domain);

// ||M^2 - M|| + ||M+ - M|| over a square window padded so the compared columns
// carry complete convolution sums.
double projection_residual(const SliceLaurentSeries& phi, const Interval& domain);

}  // namespace slicelab
