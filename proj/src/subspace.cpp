#include "slicelab/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slicelab/config.hpp"
#include "slicelab/error.hpp"
#include "slicelab/operators.hpp"

namespace slicelab {

namespace {

constexpr double kRankRelTol = 1e-7;
constexpr double kWanderTol = 1e-8;

SliceLaurentSeries subtract_projection(const SliceLaurentSeries& v, const SubspaceBasis& basis) {
  SliceLaurentSeries r = v;
  for (const SliceLaurentSeries& u : basis.vectors) r = r - u.right_mul(l2_inner(r, u));
  return r;
}

}  // namespace

SubspaceBasis orthonormalize(const std::vector<SliceLaurentSeries>& vectors,
                             const Interval& ambient) {
  SubspaceBasis basis;
  basis.ambient = ambient;
  for (const SliceLaurentSeries& v : vectors)
    basis.ambient = Interval::hull(basis.ambient, v.support());
  // Pivoted modified Gram-Schmidt. Always orthogonalize the remaining
  // candidate with the largest residual next and stop once every residual
  // sits below a relative floor; near-dependent candidates are never
  // normalized, which keeps amplified cancellation noise out of the basis.
  std::vector<SliceLaurentSeries> work = vectors;
  std::vector<double> norms(work.size());
  double scale = 0.0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    norms[i] = work[i].l2_norm();
    scale = std::max(scale, norms[i]);
  }
  const double floor = kRankRelTol * scale;
  for (;;) {
    std::size_t best = work.size();
    double best_norm = floor;
    for (std::size_t i = 0; i < work.size(); ++i)
      if (norms[i] > best_norm) {
        best_norm = norms[i];
        best = i;
      }
    if (best == work.size()) break;
    SliceLaurentSeries u = subtract_projection(work[best], basis);
    double n = u.l2_norm();
    norms[best] = 0.0;
    if (n <= floor) continue;
    u = u.scaled(1.0 / n);
    basis.vectors.push_back(u);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (norms[i] == 0.0) continue;
      work[i] = work[i] - u.right_mul(l2_inner(work[i], u));
      norms[i] = work[i].l2_norm();
    }
  }
  return basis;
}

SubspaceBasis krylov_span(const SliceLaurentSeries& g, int depth) {
  if (!g.is_hardy()) fail(Err::Usage, "krylov_span: generator must be Hardy-supported");
  if (depth < 0) fail(Err::Usage, "krylov_span: negative depth");
  std::vector<SliceLaurentSeries> shifts;
  shifts.reserve(static_cast<std::size_t>(depth) + 1);
  for (int n = 0; n <= depth; ++n) shifts.push_back(g.shifted(n));
  Interval ambient{0, g.is_zero() ? depth : g.n_max() + depth};
  return orthonormalize(shifts, ambient);
}

SliceLaurentSeries project(const SliceLaurentSeries& f, const SubspaceBasis& basis) {
  if (!f.is_zero() && !basis.ambient.contains(f.support()))
    fail(Err::AmbientMismatch, "project: series support leaves the basis ambient window");
  SliceLaurentSeries p;
  for (const SliceLaurentSeries& u : basis.vectors) p = p + u.right_mul(l2_inner(f, u));
  return p;
}

double cyclicity_residual(const SliceLaurentSeries& g, int depth) {
  if (g.l2_norm() <= kZeroTol) fail(Err::ZeroFunction, "cyclicity_residual: zero generator");
  SliceLaurentSeries one = SliceLaurentSeries::constant(1.0);
  return (one - project(one, krylov_span(g, depth))).l2_norm();
}

const char* cyclicity_verdict(double residual) {
  if (residual < 1e-6) return "cyclic at depth";
  if (residual > 0.1) return "non-cyclic at depth";
  return "inconclusive";
}

SliceLaurentSeries phase_normalized(const SliceLaurentSeries& f) {
  double n = f.l2_norm();
  if (n <= kZeroTol) fail(Err::ZeroFunction, "phase_normalized: zero series");
  SliceLaurentSeries unit = f.scaled(1.0 / n);
  for (int idx = unit.n_min(); idx <= unit.n_max(); ++idx) {
    Quaternion c = unit.coeff(idx);
    double cn = c.norm();
    if (cn > kWanderTol) return unit.right_mul((1.0 / cn) * c.conj()).trimmed(0.0);
  }
  return unit;
}

SliceLaurentSeries wandering_vector(const std::vector<SliceLaurentSeries>& generators, int depth) {
  if (generators.empty()) fail(Err::Usage, "wandering_vector: no generators");
  for (const SliceLaurentSeries& g : generators)
    if (!g.is_hardy()) fail(Err::Usage, "wandering_vector: generators must be Hardy-supported");

  std::vector<SliceLaurentSeries> shifts;
  shifts.reserve(generators.size() * (static_cast<std::size_t>(depth) + 1));
  for (const SliceLaurentSeries& g : generators)
    for (int n = 0; n <= depth; ++n) shifts.push_back(g.shifted(n));
  SubspaceBasis k = orthonormalize(shifts);

  // M_q is an isometry, so shifting an orthonormal basis of K gives one of qK.
  SubspaceBasis qk;
  qk.ambient = Interval{std::min(0, k.ambient.lo), k.ambient.hi + 1};
  qk.vectors.reserve(k.vectors.size());
  for (const SliceLaurentSeries& u : k.vectors) qk.vectors.push_back(u.shifted(1));

  for (const SliceLaurentSeries& g : generators) {
    SliceLaurentSeries r = g - project(g, qk);
    if (r.l2_norm() <= kWanderTol) continue;
    return phase_normalized(r);
  }
  fail(Err::DoublyInvariant,
       "wandering_vector: every generator lies in the shifted span at this truncation");
}

Factorization inner_outer_factorize(const SliceLaurentSeries& f, int depth,
                                    const BoundaryGrid& grid) {
  if (!f.is_hardy()) fail(Err::Usage, "inner_outer_factorize: input not in the Hardy class");
  if (f.l2_norm() <= kZeroTol) fail(Err::ZeroFunction, "inner_outer_factorize: zero input");

  Factorization out;
  out.depth = depth;
  out.phi = wandering_vector({f}, depth).trimmed(1e-10);
  SliceLaurentSeries lift = star(tilde(conjugate(out.phi)), f);
  out.g = lift.restricted(Interval{0, std::max(0, lift.n_max())}).trimmed(1e-14);

  out.res_reconstruction = (f - star(out.phi, out.g)).l2_norm();
  out.res_unimodularity = unimodularity_residual(out.phi, grid);
  out.res_cyclicity = out.g.l2_norm() <= kZeroTol ? 1.0 : cyclicity_residual(out.g, depth);
  return out;
}

SliceLaurentSeries blaschke_factor(const Quaternion& a, int n) {
  if (n < 8) fail(Err::Usage, "blaschke_factor: truncation order too small");
  double r = a.norm();
  if (r > 0.7)
    fail(Err::PointTooCloseToBoundary,
         "blaschke_factor: need |a| <= 0.7, got " + std::to_string(r));

  // (1 - q conj(a))^{-*} = sum_n q^n conj(a)^n, so the quotient against
  // (a - q) collapses to a geometric tail.
  std::vector<Quaternion> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[0] = a;
  Quaternion pow{1.0};
  const Quaternion scale = a.norm_sq() - 1.0;
  for (int m = 1; m <= n; ++m) {
    coeffs[static_cast<std::size_t>(m)] = pow * scale;
    pow = pow * a.conj();
  }
  SliceLaurentSeries b = SliceLaurentSeries(0, std::move(coeffs)).trimmed(0.0);

  const double tail = std::max(1e-10, 20.0 * std::pow(std::max(r, 0.1), n - 1));
  if (evaluate(b, a).norm() > tail)
    throw std::logic_error("blaschke_factor: zero-point self-check failed");
  if (coeff_distance(star(tilde(b), conjugate(b)), SliceLaurentSeries::constant(1.0)) > tail)
    throw std::logic_error("blaschke_factor: unimodularity self-check failed");
  return b;
}

double DoublyInvariantReport::worst() const {
  return std::max({res_projection, res_symbol, res_shift});
}

DoublyInvariantReport doubly_invariant_projector(const SliceLaurentSeries& phi,
                                                 const Interval& support) {
  if (support.empty()) fail(Err::Usage, "doubly_invariant_projector: empty support window");
  DoublyInvariantReport rep;
  rep.res_projection = projection_residual(phi, support);
  if (!phi.is_zero())
    rep.res_symbol = coeff_distance(star(tilde(phi), conjugate(phi)), tilde(phi));

  const int pad =
      phi.is_zero() ? 1 : std::max(1, std::max(std::abs(phi.n_min()), std::abs(phi.n_max())));
  Interval window{support.lo - 2 * pad - 1, support.hi + 2 * pad + 1};
  QuaternionMatrix p = multiplier_matrix(phi, window, window);
  QuaternionMatrix comp = identity(window) - p;
  for (int dir : {1, -1}) {
    QuaternionMatrix shift = multiplier_matrix(SliceLaurentSeries::monomial(dir), window, window);
    QuaternionMatrix leak = restrict_cols(matmul(comp, matmul(shift, p)), support);
    rep.res_shift += operator_norm(leak);
  }
  return rep;
}

}  // namespace slicelab
