#include "slicelab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "slicelab/boundary.hpp"
#include "slicelab/config.hpp"
#include "slicelab/error.hpp"
#include "slicelab/idempotent.hpp"
#include "slicelab/operators.hpp"
#include "slicelab/random.hpp"
#include "slicelab/subspace.hpp"

namespace slicelab {

namespace {

CheckResult upper_check(std::string name, double value, double bound) {
  return {std::move(name), value, bound, true, false, value < bound};
}

CheckResult lower_check(std::string name, double value, double bound) {
  return {std::move(name), value, bound, false, false, value >= bound};
}

CheckResult info_line(std::string name, double value) {
  return {std::move(name), value, 0.0, true, true, true};
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

SliceLaurentSeries random_series(Rng& rng, int lo, int hi, int max_len) {
  int len = rng.uniform_int(std::min(2, max_len), max_len);
  int start = rng.uniform_int(lo, hi - len + 1);
  std::vector<Quaternion> c(static_cast<std::size_t>(len));
  for (auto& q : c) q = rng.quaternion();
  return {start, std::move(c)};
}

SliceLaurentSeries normalized(const SliceLaurentSeries& f) { return f.scaled(1.0 / f.l2_norm()); }

Quaternion random_point_in_ball(Rng& rng, double r_lo, double r_hi) {
  return rng.uniform(r_lo, r_hi) * rng.unit_quaternion();
}

const SliceLaurentSeries kOne = SliceLaurentSeries::constant(1.0);

double unimodularity_coeff_residual(const SliceLaurentSeries& phi) {
  return coeff_distance(star(tilde(phi), conjugate(phi)), kOne);
}

// t node at roughly the given fraction of (0, pi); exact grid node.
double node_t(const BoundaryGrid& grid, double frac) {
  auto idx = static_cast<std::size_t>(frac * static_cast<double>(grid.t_nodes.size()));
  return grid.t_nodes[std::min(idx, grid.t_nodes.size() - 1)];
}

double zero_fraction(const SliceLaurentSeries& f, const BoundaryGrid& grid, double eps) {
  std::size_t hits = 0;
  for (double t : grid.t_nodes)
    for (const UnitImaginary& I : grid.sphere_nodes)
      if (evaluate(f, exp_unit(t, I)).norm() < eps) ++hits;
  return static_cast<double>(hits) / static_cast<double>(grid.node_count());
}

double unit_fraction(const SliceLaurentSeries& f, const BoundaryGrid& grid, double eps) {
  std::size_t hits = 0;
  for (double t : grid.t_nodes)
    for (const UnitImaginary& I : grid.sphere_nodes)
      if (std::abs(evaluate(f, exp_unit(t, I)).norm() - 1.0) < eps) ++hits;
  return static_cast<double>(hits) / static_cast<double>(grid.node_count());
}

// --- 1: *-algebra identities over seeded random triples ------------------

std::vector<CheckResult> criterion_1() {
  Stopwatch watch;
  Rng rng(config().seed);
  double assoc = 0.0, conj_rule = 0.0, norm_eq = 0.0, tilde_inv = 0.0;
  for (int it = 0; it < 1000; ++it) {
    SliceLaurentSeries f = random_series(rng, -16, 16, 6);
    SliceLaurentSeries g = random_series(rng, -16, 16, 6);
    SliceLaurentSeries h = random_series(rng, -16, 16, 6);
    assoc = std::max(assoc, coeff_distance(star(star(f, g), h), star(f, star(g, h))));
    conj_rule =
        std::max(conj_rule, coeff_distance(conjugate(star(f, g)), star(conjugate(g), conjugate(f))));
    norm_eq = std::max(norm_eq, std::abs(f.l2_norm() - conjugate(f).l2_norm()));
    tilde_inv = std::max(tilde_inv, coeff_distance(tilde(tilde(f)), f));
  }
  return {upper_check("star_associativity", assoc, 1e-11),
          upper_check("conjugate_antihomomorphism", conj_rule, 1e-11),
          upper_check("conjugate_norm_equality", norm_eq, 1e-11),
          upper_check("tilde_involution", tilde_inv, 1e-11),
          upper_check("runtime_seconds", watch.seconds(), 10.0)};
}

// --- 2: pointwise evaluation of the *-product ----------------------------

std::vector<CheckResult> criterion_2() {
  Stopwatch watch;
  Rng rng(config().seed + 2);
  BoundaryGrid grid = make_grid(100, 100);
  double worst = 0.0;
  for (int it = 0; it < 200; ++it) {
    SliceLaurentSeries f = random_series(rng, -8, 8, 5);
    SliceLaurentSeries g = random_series(rng, -8, 8, 5);
    SliceLaurentSeries fg = star(f, g);
    const double scale = 1.0 + g.l1_norm();
    for (double t : grid.t_nodes)
      for (const UnitImaginary& I : grid.sphere_nodes) {
        Quaternion q = exp_unit(t, I);
        Quaternion fq = evaluate(f, q);
        if (fq.norm() <= 1e-6) continue;
        Quaternion lhs = evaluate(fg, q);
        Quaternion rhs = fq * evaluate(g, t_map(f, q));
        worst = std::max(worst, (lhs - rhs).norm() / scale);
      }
  }
  return {upper_check("pointwise_star_identity", worst, 1e-9),
          upper_check("runtime_seconds", watch.seconds(), 30.0)};
}

// --- 3: two-point slice reconstruction -----------------------------------

std::vector<CheckResult> criterion_3() {
  Rng rng(config().seed + 3);
  double worst_general = 0.0, worst_mirror = 0.0;
  for (int it = 0; it < 200; ++it) {
    SliceLaurentSeries f = random_series(rng, -8, 8, 6);
    double t = rng.uniform(0.05, std::numbers::pi - 0.05);
    UnitImaginary J = rng.unit_imaginary();
    UnitImaginary K = rng.unit_imaginary();
    while ((J.q() - K.q()).norm() < 0.5) K = rng.unit_imaginary();
    UnitImaginary I = rng.unit_imaginary();

    Quaternion truth = evaluate(f, exp_unit(t, I));
    Quaternion valJ = evaluate(f, exp_unit(t, J));
    Quaternion rec = representation(valJ, evaluate(f, exp_unit(t, K)), J, K, I);
    worst_general = std::max(worst_general, (rec - truth).norm());

    Quaternion rec_m = representation(valJ, evaluate(f, exp_unit(t, -J)), J, -J, I);
    worst_mirror = std::max(worst_mirror, (rec_m - truth).norm());
  }
  return {upper_check("representation_two_point", worst_general, 1e-11),
          upper_check("representation_mirror_point", worst_mirror, 1e-11)};
}

// --- 4: unimodularity lemma and boundary modulus --------------------------

std::vector<CheckResult> criterion_4() {
  Rng rng(config().seed + 4);

  std::vector<SliceLaurentSeries> unimodular;
  for (int k = 0; k < 10; ++k)
    unimodular.push_back(
        SliceLaurentSeries::monomial(rng.uniform_int(-10, 10), rng.unit_quaternion()));
  unimodular.push_back(blaschke_factor(Quaternion{}, 128));
  for (int k = 0; k < 9; ++k)
    unimodular.push_back(blaschke_factor(random_point_in_ball(rng, 0.1, 0.5), 128));

  double worst_uni = 0.0;
  for (const SliceLaurentSeries& phi : unimodular)
    worst_uni = std::max(worst_uni, unimodularity_coeff_residual(phi));

  std::vector<SliceLaurentSeries> rough;
  rough.push_back(SliceLaurentSeries(0, {Quaternion{0.5}, Quaternion{0.5}}));
  rough.push_back(SliceLaurentSeries::monomial(2, 1.05));
  rough.push_back(SliceLaurentSeries::monomial(-3, 0.9));
  for (int k = 0; k < 17; ++k) rough.push_back(normalized(random_series(rng, -8, 8, 6)));

  double best_rough = 1e300;
  for (const SliceLaurentSeries& phi : rough)
    best_rough = std::min(best_rough, unimodularity_coeff_residual(phi));

  BoundaryGrid grid = make_grid(24, 24);
  double worst_mod = 0.0;
  std::vector<SliceLaurentSeries> modulus_fixtures = unimodular;
  for (int k = 0; k < 10; ++k) modulus_fixtures.push_back(random_series(rng, -6, 6, 5));
  for (const SliceLaurentSeries& phi : modulus_fixtures) {
    SliceLaurentSeries sym = star(tilde(phi), conjugate(phi));
    for (double t : grid.t_nodes)
      for (const UnitImaginary& I : grid.sphere_nodes) {
        double lhs = evaluate(phi, exp_unit(-t, I)).norm_sq();
        double rhs = evaluate(sym, exp_unit(t, I)).re();
        worst_mod = std::max(worst_mod, std::abs(lhs - rhs));
      }
  }

  return {upper_check("unimodular_symbol_residual", worst_uni, 1e-9),
          lower_check("non_unimodular_symbol_residual", best_rough, 1e-2),
          upper_check("boundary_modulus_identity", worst_mod, 1e-9)};
}

// --- 5: adjoints of multiplier operators ----------------------------------

std::vector<CheckResult> criterion_5() {
  Rng rng(config().seed + 5);

  double worst_pair = 0.0;
  for (int it = 0; it < 500; ++it) {
    SliceLaurentSeries phi = random_series(rng, -8, 8, 5);
    SliceLaurentSeries f = random_series(rng, -8, 8, 5);
    SliceLaurentSeries g = random_series(rng, -8, 8, 5);
    Quaternion lhs = l2_inner(star(phi, f), g);
    Quaternion rhs = l2_inner(f, star(tilde(conjugate(phi)), g));
    worst_pair = std::max(worst_pair, (lhs - rhs).norm());
  }

  double worst_entry = 0.0;
  const Interval domain{-8, 8}, codomain{-16, 16};
  for (int it = 0; it < 20; ++it) {
    SliceLaurentSeries phi = random_series(rng, -8, 8, 5);
    QuaternionMatrix lhs = adjoint(multiplier_matrix(phi, domain, codomain));
    QuaternionMatrix rhs = multiplier_matrix(tilde(conjugate(phi)), codomain, domain);
    for (int i = domain.lo; i <= domain.hi; ++i)
      for (int j = codomain.lo; j <= codomain.hi; ++j)
        worst_entry = std::max(worst_entry, (lhs.at(i, j) - rhs.at(i, j)).norm());
  }

  const Interval window{0, 8};
  double worst_iso = 0.0;
  for (int k = -3; k <= 5; ++k)
    worst_iso = std::max(
        worst_iso,
        isometry_residual(SliceLaurentSeries::monomial(k, rng.unit_quaternion()), window));
  for (int k = 0; k < 6; ++k)
    worst_iso = std::max(
        worst_iso, isometry_residual(blaschke_factor(random_point_in_ball(rng, 0.1, 0.5), 128),
                                     window));

  double best_rough = 1e300;
  best_rough = std::min(
      best_rough, isometry_residual(SliceLaurentSeries(0, {Quaternion{0.5}, Quaternion{0.5}}), window));
  best_rough = std::min(best_rough, isometry_residual(SliceLaurentSeries::monomial(2, 0.8), window));
  for (int k = 0; k < 10; ++k)
    best_rough = std::min(best_rough, isometry_residual(normalized(random_series(rng, -6, 6, 6)), window));

  return {upper_check("adjoint_pairing_identity", worst_pair, 1e-11),
          upper_check("adjoint_matrix_symbol_match", worst_entry, 1e-14),
          upper_check("isometry_residual_unimodular", worst_iso, 1e-9),
          lower_check("isometry_residual_non_unimodular", best_rough, 1e-2)};
}

// --- 6: idempotent examples ------------------------------------------------

struct IdempotentExample {
  std::string name;
  BehaviorFn behavior;
  bool symmetric;  // tilde-conjugation symmetric
};

std::vector<CheckResult> criterion_6() {
  Stopwatch watch;
  const Config& cfg = config();
  BoundaryGrid grid = make_grid(cfg.grid_t, cfg.grid_sphere);
  const int m = cfg.grid_t;
  const double pi = std::numbers::pi;

  IdempotentSpec chi;
  chi.intervals = {{0.0, 0.3 * pi, SphereBehavior::zero()},
                   {0.3 * pi, 0.7 * pi, SphereBehavior::one()},
                   {0.7 * pi, pi, SphereBehavior::zero()}};

  const UnitImaginary j_ell = grid.sphere_nodes[17];
  const IdempotentExample examples[] = {
      {"chi", [chi](double t) { return chi.behavior_at(t); }, true},
      {"ell", [j_ell](double) { return SphereBehavior::pair(-j_ell, j_ell); }, true},
      {"cossin",
       [](double t) {
         UnitImaginary jc{std::cos(t), std::sin(t), 0.0};
         return SphereBehavior::pair(jc, -jc);
       },
       true}};

  std::vector<CheckResult> out;
  double fit_nodes_worst = 0.0;
  double angular_worst = 0.0, pair_res_worst = 0.0, mirror_worst = 0.0, unit_one_worst = 0.0;

  for (const IdempotentExample& ex : examples) {
    SliceLaurentSeries f = fit_idempotent(ex.behavior, m);
    fit_nodes_worst = std::max(fit_nodes_worst, fit_residual(f, ex.behavior, m, 40));
    double v = verify_idempotent(f, grid);
    out.push_back(upper_check("verify_idempotent_" + ex.name, v, 1e-8));

    for (double frac : {0.08, 0.5, 0.94}) {
      double t = node_t(grid, frac);
      SphereBehavior truth = ex.behavior(t);
      SphereBehavior found = classify_sphere(f, t);
      if (truth.kind != found.kind) {
        angular_worst = std::max(angular_worst, 1.0);
        continue;
      }
      if (truth.kind != SphereClass::Pair) continue;
      angular_worst = std::max({angular_worst, angle_between(found.J, truth.J),
                                angle_between(found.K, truth.K)});

      PairReport rep = pair_report(f, t);
      pair_res_worst = std::max({pair_res_worst, rep.res_x_one, rep.res_orth, rep.res_eq});
      if (ex.symmetric) {
        mirror_worst = std::max(mirror_worst, (rep.pair.K.q() + rep.pair.J.q()).norm());
        unit_one_worst = std::max(unit_one_worst, rep.res_a_one);
      }
    }
  }

  // A pair sphere without the K = -J symmetry; the mirror-point identities
  // must hold regardless.
  {
    SphereBehavior synth = SphereBehavior::pair(UnitImaginary{1.0, 0.2, 0.0}, UnitImaginary::k());
    SliceLaurentSeries f = fit_idempotent([synth](double) { return synth; }, m);
    PairReport rep = pair_report(f, node_t(grid, 0.37));
    pair_res_worst = std::max({pair_res_worst, rep.res_x_one, rep.res_orth, rep.res_eq});
    angular_worst = std::max({angular_worst, angle_between(rep.pair.J, synth.J),
                              angle_between(rep.pair.K, synth.K)});
  }

  out.push_back(upper_check("fit_interpolates_examples_at_nodes", fit_nodes_worst, 1e-9));
  out.push_back(upper_check("classify_sphere_angular_error", angular_worst, 1e-6));
  out.push_back(upper_check("mirror_point_residuals", pair_res_worst, 1e-8));
  out.push_back(upper_check("symmetric_cases_k_equals_minus_j", mirror_worst, 1e-8));
  out.push_back(upper_check("symmetric_cases_mirror_value_one", unit_one_worst, 1e-8));
  out.push_back(upper_check("runtime_seconds", watch.seconds(), 60.0));
  return out;
}

// --- 7: doubly invariant projector ----------------------------------------

std::vector<CheckResult> criterion_7() {
  const Interval window{0, 8};
  DoublyInvariantReport zero = doubly_invariant_projector(SliceLaurentSeries{}, window);
  DoublyInvariantReport one = doubly_invariant_projector(kOne, window);
  double worst = std::max(zero.worst(), one.worst());

  DoublyInvariantReport shift = doubly_invariant_projector(SliceLaurentSeries::monomial(1), window);

  SliceLaurentSeries ell = fit_idempotent(
      [](double) { return SphereBehavior::pair(-UnitImaginary::j(), UnitImaginary::j()); }, 32);
  DoublyInvariantReport ell_rep = doubly_invariant_projector(ell, Interval{-32, 32});

  return {upper_check("exact_idempotents_qualify", worst, 1e-9),
          lower_check("shift_symbol_projection_residual", shift.res_projection, 1.0),
          info_line("truncated_ell_fit_worst_residual", ell_rep.worst())};
}

// --- 8: wandering-vector recovery ------------------------------------------

std::vector<CheckResult> criterion_8() {
  Stopwatch watch;
  Rng rng(config().seed + 8);
  const int depth = 96;

  double worst = 0.0;
  for (int idx = 0; idx < 20; ++idx) {
    SliceLaurentSeries phi0;
    switch (idx % 4) {
      case 0:
        phi0 = SliceLaurentSeries::monomial(1 + idx / 4, rng.unit_quaternion());
        break;
      case 1:
        phi0 = blaschke_factor(random_point_in_ball(rng, 0.15, 0.5), 100);
        break;
      case 2:
        phi0 = star(blaschke_factor(random_point_in_ball(rng, 0.15, 0.5), 60),
                    blaschke_factor(random_point_in_ball(rng, 0.15, 0.5), 60));
        break;
      default:
        phi0 = star(SliceLaurentSeries::monomial(1 + idx / 8, rng.unit_quaternion()),
                    blaschke_factor(random_point_in_ball(rng, 0.15, 0.45), 80));
        break;
    }

    std::vector<SliceLaurentSeries> generators;
    const int n_gen = 1 + idx % 2;
    for (int g = 0; g < n_gen; ++g) {
      SliceLaurentSeries h(0, {Quaternion{1.0}, rng.quaternion(0.25), rng.quaternion(0.12)});
      generators.push_back(star(phi0, h));
    }

    SliceLaurentSeries recovered = wandering_vector(generators, depth);
    worst = std::max(worst, coeff_distance(recovered, phase_normalized(phi0)));
  }

  return {upper_check("wandering_recovery_coeff_distance", worst, 1e-6),
          upper_check("runtime_seconds", watch.seconds(), 120.0)};
}

// --- 9: inner-outer factorization ------------------------------------------

std::vector<CheckResult> criterion_9() {
  const Config& cfg = config();
  BoundaryGrid grid = make_grid(cfg.grid_t, cfg.grid_sphere);
  const int depth = 96;

  const SliceLaurentSeries half_geo(0, {Quaternion{1.0}, Quaternion{0.5}});
  const SliceLaurentSeries third_geo(0, {Quaternion{1.0}, Quaternion{1.0 / 3.0}});
  const std::vector<SliceLaurentSeries> fixtures = {
      star(SliceLaurentSeries::monomial(1), half_geo),
      star(blaschke_factor(0.4 * Quaternion::i(), 128), third_geo),
      star(star(blaschke_factor(0.4 * Quaternion::i(), 60), blaschke_factor(0.3 * Quaternion::j(), 60)),
           third_geo),
      half_geo};

  double rec = 0.0, uni = 0.0, cyc = 0.0, refac = 0.0;
  for (const SliceLaurentSeries& f : fixtures) {
    Factorization fac = inner_outer_factorize(f, depth, grid);
    rec = std::max(rec, fac.res_reconstruction);
    uni = std::max(uni, fac.res_unimodularity);
    cyc = std::max(cyc, fac.res_cyclicity);
    Factorization again = inner_outer_factorize(fac.g, depth, grid);
    refac = std::max(refac, coeff_distance(again.phi, kOne));
  }

  return {upper_check("factorization_reconstruction", rec, 1e-8),
          upper_check("factorization_inner_unimodularity", uni, 1e-6),
          upper_check("factorization_outer_cyclicity", cyc, 1e-6),
          upper_check("refactorized_outer_inner_part_is_one", refac, 1e-6)};
}

// --- 10: cyclicity residuals ------------------------------------------------

std::vector<CheckResult> criterion_10() {
  Rng rng(config().seed + 10);
  const int depth = 64;

  double worst_cyclic = 0.0;
  std::vector<SliceLaurentSeries> cyclic_fixtures = {
      SliceLaurentSeries(0, {Quaternion{1.0}, Quaternion{0.5}}),
      SliceLaurentSeries(0, {Quaternion{1.0}, Quaternion{0.3}, Quaternion{0.2}}),
      SliceLaurentSeries(0, {Quaternion{1.0}, Quaternion{0.5}, Quaternion{0.25}})};
  for (int k = 0; k < 7; ++k) {
    SliceLaurentSeries h(0, {Quaternion{1.0}, rng.quaternion(0.2), rng.quaternion(0.1),
                             rng.quaternion(0.05)});
    cyclic_fixtures.push_back(h);
  }
  for (const SliceLaurentSeries& g : cyclic_fixtures)
    worst_cyclic = std::max(worst_cyclic, cyclicity_residual(g, depth));

  double res_shifted = cyclicity_residual(
      star(SliceLaurentSeries::monomial(1), SliceLaurentSeries(0, {Quaternion{1.0}, Quaternion{0.5}})),
      depth);
  double res_blaschke = cyclicity_residual(blaschke_factor(Quaternion{0.4}, 128), depth);

  const double expected_blaschke = std::sqrt(0.84);
  return {upper_check("outer_fixtures_cyclicity", worst_cyclic, 1e-6),
          lower_check("inner_fixtures_non_cyclicity", std::min(res_shifted, res_blaschke), 0.5),
          upper_check("shifted_generator_residual_is_one", std::abs(res_shifted - 1.0), 1e-9),
          upper_check("blaschke_residual_regression", std::abs(res_blaschke - expected_blaschke),
                      1e-9)};
}

// --- 11: zero-set measure proxy ---------------------------------------------

std::vector<CheckResult> criterion_11() {
  Rng rng(config().seed + 11);
  BoundaryGrid coarse = make_grid(64, 128);
  BoundaryGrid fine = make_grid(256, 512);
  const double eps = 1e-6;

  // A symbol whose symmetrization vanishes on one full coarse-node sphere.
  SliceLaurentSeries lifted =
      SliceLaurentSeries::monomial(1) - SliceLaurentSeries::constant(exp_unit(coarse.t_nodes[20], UnitImaginary::i()));
  SliceLaurentSeries lifted_sym = symmetrize(lifted);
  double frac_coarse = zero_fraction(lifted_sym, coarse, eps);
  double frac_fine = zero_fraction(lifted_sym, fine, eps);

  double worst_fine = frac_fine;
  double worst_drop = frac_fine - frac_coarse;  // must be strictly negative here

  for (int k = 0; k < 4; ++k) {
    // Coefficient norms sum below 1, so the symmetrization has no boundary zeros.
    SliceLaurentSeries f(0, {Quaternion{1.0}, 0.4 * rng.unit_quaternion(), 0.2 * rng.unit_quaternion()});
    SliceLaurentSeries fs = symmetrize(f);
    double c = zero_fraction(fs, coarse, eps);
    double fr = zero_fraction(fs, fine, eps);
    worst_fine = std::max(worst_fine, fr);
    worst_drop = std::max(worst_drop, fr - c);
  }

  double unit_frac = 1.0;
  for (const SliceLaurentSeries& phi :
       {blaschke_factor(0.3 * Quaternion::i() + 0.2 * Quaternion::k(), 64),
        SliceLaurentSeries::monomial(3, rng.unit_quaternion())})
    unit_frac = std::min(unit_frac, unit_fraction(symmetrize(phi), fine, eps));

  return {upper_check("sphere_zero_fraction_drops_on_refinement", frac_fine - frac_coarse, 0.0),
          upper_check("zero_fraction_non_increasing", worst_drop, 1e-12),
          upper_check("zero_fraction_fine_grid", worst_fine, 0.01),
          lower_check("unimodular_symmetrization_unit_fraction", unit_frac, 0.99)};
}

}  // namespace

std::vector<CheckResult> run_criterion(int index) {
  switch (index) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    default: fail(Err::Usage, "run_criterion: index must be in [1, 11]");
  }
}

const char* criterion_title(int index) {
  switch (index) {
    case 1: return "star-algebra identities";
    case 2: return "pointwise star compatibility";
    case 3: return "representation formula";
    case 4: return "unimodularity lemma";
    case 5: return "multiplier adjoint and isometry";
    case 6: return "idempotent examples";
    case 7: return "doubly invariant projector";
    case 8: return "wandering-vector recovery";
    case 9: return "inner-outer factorization";
    case 10: return "cyclicity residuals";
    case 11: return "zero-set measure proxy";
    default: fail(Err::Usage, "criterion_title: index must be in [1, 11]");
  }
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "algebra") return {1, 2, 3};
  if (suite == "isometry") return {4};
  if (suite == "adjoint") return {5};
  if (suite == "idempotent") return {6};
  if (suite == "beurling") return {7, 8};
  if (suite == "factorization") return {9, 10, 11};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  fail(Err::Usage, "unknown suite \"" + suite +
                       "\" (expected algebra, adjoint, isometry, idempotent, beurling, "
                       "factorization, or all)");
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.informative || r.pass; });
}

void print_results(std::ostream& os, const std::vector<CheckResult>& results) {
  char buf[160];
  for (const CheckResult& r : results) {
    if (r.informative) {
      std::snprintf(buf, sizeof(buf), "  %-44s %12.5e             info", r.name.c_str(), r.value);
    } else {
      std::snprintf(buf, sizeof(buf), "  %-44s %12.5e %s %-9.3e %s", r.name.c_str(), r.value,
                    r.upper ? "< " : ">=", r.bound, r.pass ? "PASS" : "FAIL");
    }
    os << buf << '\n';
  }
}

}  // namespace slicelab
