#include "slicelab/idempotent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slicelab/config.hpp"
#include "slicelab/error.hpp"

namespace slicelab {

namespace {

constexpr double kTileEps = 1e-9;

double effective_tol(double tol) { return tol > 0.0 ? tol : config().tol; }

// f restricted to the sphere e^{tS} is affine in the direction: f = alpha +
// I beta.  Recovered exactly from the two samples along +-P.
struct SphereAffine {
  Quaternion alpha, beta;

  Quaternion value(const UnitImaginary& I) const { return alpha + I.q() * beta; }

  // |f|^2 = |alpha|^2 + |beta|^2 - 2 <I, Im(beta conj(alpha))>; extremes are
  // attained along the Im(beta conj(alpha)) axis.
  static SphereAffine sample(const SliceLaurentSeries& f, double t, const UnitImaginary& P) {
    Quaternion wp = evaluate(f, exp_unit(t, P));
    Quaternion wm = evaluate(f, exp_unit(t, -P));
    Quaternion alpha = 0.5 * (wp + wm);
    Quaternion beta = -1.0 * (P.q() * (0.5 * (wp - wm)));
    return {alpha, beta};
  }

  Quaternion gradient_axis(const Quaternion& level) const {
    Quaternion p = beta * (alpha - level).conj();
    return {0.0, p.x, p.y, p.z};
  }

  double sphere_max_abs(const Quaternion& level) const {
    Quaternion d = alpha - level;
    double c = d.norm_sq() + beta.norm_sq();
    return std::sqrt(std::max(0.0, c + 2.0 * gradient_axis(level).norm()));
  }
};

}  // namespace

SphereBehavior SphereBehavior::pair(const UnitImaginary& J, const UnitImaginary& K) {
  if ((J.q() - K.q()).norm() <= kZeroTol)
    fail(Err::DegenerateUnits, "pair behavior needs distinct units");
  return {SphereClass::Pair, J, K};
}

Quaternion idempotent_value(const SphereBehavior& b, const UnitImaginary& I) {
  switch (b.kind) {
    case SphereClass::Zero: return {};
    case SphereClass::One: return {1.0};
    case SphereClass::Pair: break;
  }
  Quaternion d = b.J.q() - b.K.q();
  if (d.norm() <= kZeroTol) fail(Err::DegenerateUnits, "pair behavior needs distinct units");
  Quaternion dinv = inverse(d);
  return -1.0 * (dinv * b.K.q() + I.q() * dinv);
}

bool self_tilde_conjugate(const SphereBehavior& b, double eps) {
  if (b.kind != SphereClass::Pair) return true;
  return (b.K.q() + b.J.q()).norm() <= eps;
}

void IdempotentSpec::validate() const {
  if (intervals.empty()) fail(Err::Usage, "idempotent spec: no intervals");
  std::vector<IdempotentInterval> sorted = intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const IdempotentInterval& a, const IdempotentInterval& b) { return a.t0 < b.t0; });
  double cursor = 0.0;
  for (const IdempotentInterval& iv : sorted) {
    if (std::abs(iv.t0 - cursor) > kTileEps)
      fail(Err::Usage, "idempotent spec: intervals must tile (0, pi) without gaps or overlaps");
    if (iv.t1 - iv.t0 <= kTileEps) fail(Err::Usage, "idempotent spec: empty interval");
    if (iv.behavior.kind == SphereClass::Pair &&
        (iv.behavior.J.q() - iv.behavior.K.q()).norm() <= kZeroTol)
      fail(Err::DegenerateUnits, "idempotent spec: pair with coinciding units");
    cursor = iv.t1;
  }
  if (std::abs(cursor - std::numbers::pi) > kTileEps)
    fail(Err::Usage, "idempotent spec: intervals must end at pi");
  if ((real_plus != 0 && real_plus != 1) || (real_minus != 0 && real_minus != 1))
    fail(Err::Usage, "idempotent spec: real point values must be 0 or 1");
}

SphereBehavior IdempotentSpec::behavior_at(double t) const {
  if (!(t > 0.0 && t < std::numbers::pi))
    fail(Err::Usage, "idempotent spec: t outside (0, pi)");
  for (const IdempotentInterval& iv : intervals)
    if (t >= iv.t0 - kTileEps && t < iv.t1) return iv.behavior;
  fail(Err::Usage, "idempotent spec: t not covered by any interval");
}

SliceLaurentSeries fit_idempotent(const BehaviorFn& behavior, int m, const UnitImaginary& I0) {
  if (m < 2) fail(Err::Usage, "fit_idempotent: need m >= 2");
  if (m > config().max_degree)
    fail(Err::SupportOverflow, "fit_idempotent: support [-m, m] exceeds max_degree");
  const int n = 2 * m;
  const double step = std::numbers::pi / m;

  std::vector<Quaternion> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double th = (k + 0.5) * step;
    v[static_cast<std::size_t>(k)] =
        k < m ? idempotent_value(behavior(th), I0)
              : idempotent_value(behavior(2.0 * std::numbers::pi - th), -I0);
  }

  std::vector<Quaternion> coeffs(static_cast<std::size_t>(2 * m + 1));
  const double scale = 1.0 / n;
  for (int idx = -(m - 1); idx <= m - 1; ++idx) {
    Quaternion acc{};
    for (int k = 0; k < n; ++k)
      acc += exp_unit(-idx * (k + 0.5) * step, I0) * v[static_cast<std::size_t>(k)];
    coeffs[static_cast<std::size_t>(idx + m)] = scale * acc;
  }
  // Frequencies -m and m coincide on the offset grid up to sign; the shared
  // bin is split so the fitted series keeps conj(a_{-n}) = a_n whenever the
  // sampled values do.
  Quaternion edge{};
  for (int k = 0; k < n; ++k)
    edge += exp_unit(m * (k + 0.5) * step, I0) * v[static_cast<std::size_t>(k)];
  coeffs[0] = 0.5 * scale * edge;
  coeffs[static_cast<std::size_t>(2 * m)] = -0.5 * scale * edge;

  SliceLaurentSeries f = SliceLaurentSeries(-m, std::move(coeffs)).trimmed(0.0);

  // When every sampled sphere is tilde-conjugation symmetric the target
  // satisfies tilde(conjugate(f)) = f; averaging enforces that coefficientwise
  // without touching the node values (which already obey it exactly).
  bool symmetric = true;
  for (int k = 0; k < m && symmetric; ++k)
    symmetric = self_tilde_conjugate(behavior((k + 0.5) * step));
  if (symmetric && !f.is_zero()) f = (f + tilde(conjugate(f))).scaled(0.5);
  return f;
}

SliceLaurentSeries fit_idempotent(const IdempotentSpec& spec, int m, const UnitImaginary& I0) {
  spec.validate();
  return fit_idempotent([&spec](double t) { return spec.behavior_at(t); }, m, I0);
}

double fit_residual(const SliceLaurentSeries& f, const BehaviorFn& behavior, int m, int n_dirs) {
  std::vector<UnitImaginary> dirs = sphere_lattice(n_dirs);
  double worst = 0.0;
  for (int k = 0; k < m; ++k) {
    double t = (k + 0.5) * std::numbers::pi / m;
    SphereBehavior b = behavior(t);
    for (const UnitImaginary& I : dirs) {
      Quaternion diff = evaluate(f, exp_unit(t, I)) - idempotent_value(b, I);
      worst = std::max(worst, diff.norm());
    }
  }
  return worst;
}

double verify_idempotent(const SliceLaurentSeries& f, const BoundaryGrid& grid) {
  SliceLaurentSeries d = star(f, f) - f;
  double node_max = 0.0;
  for (double t : grid.t_nodes)
    for (const UnitImaginary& I : grid.sphere_nodes)
      node_max = std::max(node_max, evaluate(d, exp_unit(t, I)).norm());
  return node_max + d.l2_norm();
}

SphereBehavior classify_sphere(const SliceLaurentSeries& f, double t, double tol) {
  const double eps = effective_tol(tol);
  if (!(t > 0.0 && t < std::numbers::pi)) fail(Err::Usage, "classify_sphere: t outside (0, pi)");

  const std::vector<UnitImaginary> scan = sphere_lattice(1024);
  std::vector<Quaternion> samples;
  samples.reserve(scan.size());
  for (const UnitImaginary& I : scan) samples.push_back(evaluate(f, exp_unit(t, I)));

  SphereAffine aff = SphereAffine::sample(f, t, scan.front());
  if (aff.sphere_max_abs(Quaternion{}) <= eps) return SphereBehavior::zero();
  if (aff.sphere_max_abs(Quaternion{1.0}) <= eps) return SphereBehavior::one();

  // Coarse argmins over the lattice, then local refinement: each step
  // re-estimates the affine form at the current candidate and jumps to the
  // predicted extremal axis.
  auto locate = [&](const Quaternion& level) -> UnitImaginary {
    std::size_t best = 0;
    double best_val = (samples[0] - level).norm();
    for (std::size_t s = 1; s < samples.size(); ++s) {
      double val = (samples[s] - level).norm();
      if (val < best_val) {
        best = s;
        best_val = val;
      }
    }
    UnitImaginary cand = scan[best];
    for (int step = 0; step < 20; ++step) {
      Quaternion axis = SphereAffine::sample(f, t, cand).gradient_axis(level);
      if (axis.norm() <= kZeroTol)
        fail(Err::Unclassifiable, "classify_sphere: no isolated extremum on the sphere");
      UnitImaginary next{axis.x, axis.y, axis.z};
      double moved = (next.q() - cand.q()).norm();
      cand = next;
      if (moved <= 1e-13) break;
    }
    return cand;
  };

  UnitImaginary J = locate(Quaternion{});
  UnitImaginary K = locate(Quaternion{1.0});
  if ((J.q() - K.q()).norm() <= kZeroTol)
    fail(Err::Unclassifiable, "classify_sphere: zero and unit directions coincide");
  SphereBehavior pair = SphereBehavior::pair(J, K);

  double recon = 0.0;
  for (std::size_t s = 0; s < scan.size(); ++s)
    recon = std::max(recon, (idempotent_value(pair, scan[s]) - samples[s]).norm());
  recon = std::max(recon, evaluate(f, exp_unit(t, J)).norm());
  recon = std::max(recon, (evaluate(f, exp_unit(t, K)) - Quaternion{1.0}).norm());
  if (recon > eps)
    fail(Err::Unclassifiable,
         "classify_sphere: pair reconstruction misses the samples (residual " +
             std::to_string(recon) + ")");
  return pair;
}

int classify_real_point(const SliceLaurentSeries& f, int sign, double tol) {
  if (sign != 1 && sign != -1) fail(Err::Usage, "classify_real_point: sign must be +1 or -1");
  Quaternion v = evaluate(f, Quaternion{static_cast<double>(sign)});
  if (v.norm() <= tol) return 0;
  if ((v - Quaternion{1.0}).norm() <= tol) return 1;
  fail(Err::Unclassifiable, "real point value is neither 0 nor 1 (|f| = " +
                                std::to_string(v.norm()) + ")");
}

PairReport pair_report(const SliceLaurentSeries& f, double t, double tol) {
  PairReport r;
  r.t = t;
  r.pair = classify_sphere(f, t, tol);
  if (r.pair.kind != SphereClass::Pair)
    fail(Err::Usage, "pair_report: sphere classifies as a constant");

  r.a = evaluate(f, exp_unit(-t, r.pair.J));
  r.x = r.a.re();
  r.y = r.a.im_norm();
  if (r.y > 1e-8) r.k_dec = UnitImaginary{r.a.x, r.a.y, r.a.z};

  const Quaternion Jq = r.pair.J.q();
  r.res_x_one = std::abs(r.x - 1.0);
  r.res_orth = r.k_dec ? std::abs(dot(*r.k_dec, r.pair.J)) : 0.0;
  r.res_eq = (r.a * Jq + Jq * r.a - 2.0 * Jq).norm();
  r.tilde_conj_symmetric = coeff_max_distance(tilde(conjugate(f)), f) <= 1e-12;
  r.res_a_one = (r.a - Quaternion{1.0}).norm();
  return r;
}

}  // namespace slicelab
