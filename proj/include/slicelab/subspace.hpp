#pragma once

// Invariant-subspace engine: shift-span (Krylov) bases under M_q, wandering
// vectors of simply invariant subspaces, cyclicity residuals, and the
// constructive inner-outer factorization they induce.

#include <vector>

#include "slicelab/boundary.hpp"
#include "slicelab/interval.hpp"
#include "slicelab/series.hpp"

namespace slicelab {

// Ordered orthonormal family under the right inner product l2_inner, tagged
// with the ambient coefficient window it lives in.
struct SubspaceBasis {
  Interval ambient;
  std::vector<SliceLaurentSeries> vectors;

  std::size_t rank() const { return vectors.size(); }
};

// Modified Gram-Schmidt adapted to right-linearity (v <- v - u.<v,u>), with
// one reorthogonalization pass; vectors with residual norm below 1e-10 are
// dropped.  Ambient defaults to the hull of the input supports.
SubspaceBasis orthonormalize(const std::vector<SliceLaurentSeries>& vectors,
                             const Interval& ambient = Interval{});

// Basis of span{q^n * g : 0 <= n <= depth}; ambient [0, g.n_max + depth].
SubspaceBasis krylov_span(const SliceLaurentSeries& g, int depth);

// Orthogonal projection sum u_i.<f,u_i>; AmbientMismatch when f's support
// leaves the basis ambient.
SliceLaurentSeries project(const SliceLaurentSeries& f, const SubspaceBasis& basis);

// ||1 - P_{E_g,depth} 1||; near 0 certifies cyclicity at this depth, near 1
// (for g(0) = 0) certifies non-cyclicity.
double cyclicity_residual(const SliceLaurentSeries& g, int depth);

// Depth-qualified reading of a cyclicity residual: "cyclic at depth",
// "non-cyclic at depth", or "inconclusive".
const char* cyclicity_verdict(double residual);

// Canonical representative under right unit constants: unit l2 norm, and the
// lowest-order coefficient with norm > 1e-8 rotated to a positive real.
SliceLaurentSeries phase_normalized(const SliceLaurentSeries& f);

// Unit vector in K (-) qK where K is the shift-span of the generators at the
// given depth: phi = normalize(v - P_{qK} v) for the first generator v whose
// residual exceeds 1e-8.  Phase-normalized so the lowest-order significant
// coefficient is a positive real.  DoublyInvariant when every generator's
// residual vanishes at this truncation.
SliceLaurentSeries wandering_vector(const std::vector<SliceLaurentSeries>& generators, int depth);

struct Factorization {
  SliceLaurentSeries phi;  // inner factor (unimodular boundary symbol)
  SliceLaurentSeries g;    // outer factor (cyclic at depth)
  double res_reconstruction = 0.0;  // ||f - phi*g||
  double res_unimodularity = 0.0;   // unimodularity_residual(phi)
  double res_cyclicity = 0.0;       // cyclicity_residual(g, depth)
  int depth = 0;

  bool passed(double tol) const {
    return res_reconstruction < tol && res_unimodularity < tol && res_cyclicity < tol;
  }
};

// f = phi * g with phi the wandering vector of the shift-span of f and
// g = tilde(conjugate(phi)) * f cut to nonnegative support.  Residuals are
// reported, not enforced; callers decide what tolerance to demand.
Factorization inner_outer_factorize(const SliceLaurentSeries& f, int depth,
                                    const BoundaryGrid& grid);

// Truncated Blaschke factor with its only zero at a: the *-quotient of (a - q)
// by (1 - q conj(a)), laid out on support [0, n].  Self-checked: |B(a)| and
// the unimodularity coefficient residual must sit at truncation-tail scale.
// PointTooCloseToBoundary when |a| > 0.7.
SliceLaurentSeries blaschke_factor(const Quaternion& a, int n = 128);

// Residuals qualifying phi * L^2 as doubly invariant: M_phi must be a
// self-adjoint projection, the symbol must satisfy tilde(phi) * conjugate(phi)
// = tilde(phi), and the range must absorb the shift both ways.
struct DoublyInvariantReport {
  double res_projection = 0.0;  // ||M^2 - M|| + ||M+ - M||
  double res_symbol = 0.0;      // ||tilde(phi)*conjugate(phi) - tilde(phi)||
  double res_shift = 0.0;       // ||(Id-P) M_q P|| + ||(Id-P) M_q^{-1} P||

  double worst() const;
};

DoublyInvariantReport doubly_invariant_projector(const SliceLaurentSeries& phi,
                                                 const Interval& support);

}  // namespace slicelab
