#include <doctest.h>

#include <cmath>
#include <string>

#include "slicelab/boundary.hpp"
#include "slicelab/random.hpp"
#include "slicelab/series.hpp"
#include "slicelab/subspace.hpp"
#include "test_helpers.hpp"

using namespace slicelab;
using namespace slicelab::testing;

namespace {
SliceLaurentSeries random_series(Rng& rng, int lo, int len) {
  std::vector<Quaternion> c(static_cast<std::size_t>(len));
  for (auto& q : c) q = rng.quaternion();
  return {lo, std::move(c)};
}
}  // namespace

TEST_SUITE("subspace") {

TEST_CASE("orthonormalization produces an identity gram matrix") {
  Rng rng(61);
  std::vector<SliceLaurentSeries> vecs;
  for (int k = 0; k < 6; ++k) vecs.push_back(random_series(rng, 0, 8));
  SubspaceBasis basis = orthonormalize(vecs);
  REQUIRE(basis.rank() == 6);
  for (std::size_t i = 0; i < basis.vectors.size(); ++i)
    for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
      Quaternion g = l2_inner(basis.vectors[i], basis.vectors[j]);
      Quaternion expect = i == j ? Quaternion{1.0} : Quaternion{};
      CHECK(qapprox(g, expect, 1e-12));
    }

  // right-multiples are linearly dependent over the quaternions
  std::vector<SliceLaurentSeries> dep = {vecs[0], vecs[0].right_mul(rng.quaternion())};
  CHECK(orthonormalize(dep).rank() == 1);
}

TEST_CASE("krylov span and projection") {
  Rng rng(62);
  SliceLaurentSeries g = random_series(rng, 0, 3);
  SubspaceBasis basis = krylov_span(g, 5);
  CHECK(basis.rank() == 6);
  CHECK(basis.ambient == Interval{0, g.n_max() + 5});

  SliceLaurentSeries f = random_series(rng, 0, 7);
  SliceLaurentSeries p = project(f, basis);
  CHECK(coeff_distance(project(p, basis), p) < 1e-12);
  CHECK(l2_inner(f - p, p).norm() < 1e-11);

  CHECK(code_of([&] { krylov_span(SliceLaurentSeries::monomial(-1), 3); }) == Err::Usage);
}

TEST_CASE("cyclicity residuals and verdicts") {
  SliceLaurentSeries outer(0, {Quaternion{1.0}, Quaternion{0.5}});
  CHECK(cyclicity_residual(outer, 64) < 1e-12);

  SliceLaurentSeries shifted = star(SliceLaurentSeries::monomial(1), outer);
  CHECK(cyclicity_residual(shifted, 16) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK(std::string(cyclicity_verdict(1e-9)) == "cyclic at depth");
  CHECK(std::string(cyclicity_verdict(0.5)) == "non-cyclic at depth");
  CHECK(std::string(cyclicity_verdict(1e-3)) == "inconclusive");
  CHECK(code_of([] { cyclicity_residual(SliceLaurentSeries{}, 4); }) == Err::ZeroFunction);
}

TEST_CASE("blaschke factors") {
  Quaternion a{0.3, 0.1, -0.2, 0.05};
  SliceLaurentSeries B = blaschke_factor(a, 64);
  CHECK(qapprox(B.coeff(0), a, 0.0));
  Quaternion pow{1.0};
  const double scale = a.norm_sq() - 1.0;
  for (int n = 1; n <= 5; ++n) {
    CHECK(qapprox(B.coeff(n), pow * scale, 1e-15));
    pow = pow * a.conj();
  }
  CHECK(std::abs(B.l2_norm() - 1.0) < 1e-10);
  CHECK(evaluate(B, a).norm() < 1e-10);
  CHECK(coeff_distance(star(tilde(B), conjugate(B)), SliceLaurentSeries::constant(1.0)) < 1e-10);

  CHECK(coeff_distance(blaschke_factor(Quaternion{}, 16), SliceLaurentSeries::monomial(1, -1.0)) ==
        0.0);
  CHECK(code_of([] { blaschke_factor(Quaternion{0.9}, 64); }) == Err::PointTooCloseToBoundary);
  CHECK(code_of([] { blaschke_factor(Quaternion{0.1}, 4); }) == Err::Usage);
}

TEST_CASE("wandering vectors of shift-invariant spans") {
  Rng rng(63);
  Quaternion u = rng.unit_quaternion();

  SliceLaurentSeries w1 = wandering_vector({SliceLaurentSeries::constant(1.0)}, 8);
  CHECK(coeff_distance(w1, SliceLaurentSeries::constant(1.0)) < 1e-12);

  SliceLaurentSeries w2 = wandering_vector({SliceLaurentSeries::monomial(3, u)}, 8);
  CHECK(coeff_distance(w2, SliceLaurentSeries::monomial(3)) < 1e-12);

  CHECK(code_of([] { wandering_vector({SliceLaurentSeries::constant(1e-9)}, 4); }) ==
        Err::DoublyInvariant);
  CHECK(code_of([] { wandering_vector({}, 4); }) == Err::Usage);
}

TEST_CASE("inner-outer factorization on seeded fixtures") {
  BoundaryGrid grid = make_grid(64, 64);
  SliceLaurentSeries outer(0, {Quaternion{1.0}, Quaternion{0.5}});
  SliceLaurentSeries f = star(SliceLaurentSeries::monomial(1), outer);

  Factorization fac = inner_outer_factorize(f, 48, grid);
  CHECK(fac.res_reconstruction < 1e-10);
  CHECK(fac.res_unimodularity < 1e-8);
  CHECK(fac.res_cyclicity < 1e-8);
  CHECK(fac.passed(1e-6));
  CHECK(coeff_distance(fac.phi, SliceLaurentSeries::monomial(1)) < 1e-8);
  CHECK(coeff_distance(fac.g, outer) < 1e-8);

  Factorization triv = inner_outer_factorize(SliceLaurentSeries::constant(2.0), 16, grid);
  CHECK(coeff_distance(triv.phi, SliceLaurentSeries::constant(1.0)) < 1e-10);
  CHECK(coeff_distance(triv.g, SliceLaurentSeries::constant(2.0)) < 1e-10);

  CHECK(code_of([&] { inner_outer_factorize(SliceLaurentSeries::monomial(-2), 8, grid); }) ==
        Err::Usage);
  CHECK(code_of([&] { inner_outer_factorize(SliceLaurentSeries{}, 8, grid); }) ==
        Err::ZeroFunction);
}

TEST_CASE("doubly invariant projector report") {
  const Interval window{0, 8};
  CHECK(doubly_invariant_projector(SliceLaurentSeries::constant(1.0), window).worst() < 1e-9);
  CHECK(doubly_invariant_projector(SliceLaurentSeries{}, window).worst() < 1e-12);
  DoublyInvariantReport shift = doubly_invariant_projector(SliceLaurentSeries::monomial(1), window);
  CHECK(shift.res_projection >= 1.0);
  CHECK(code_of([&] { doubly_invariant_projector(SliceLaurentSeries::constant(1.0), Interval{}); }) ==
        Err::Usage);
}

}  // TEST_SUITE
