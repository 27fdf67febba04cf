#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slicelab/boundary.hpp"
#include "slicelab/idempotent.hpp"
#include "slicelab/random.hpp"
#include "slicelab/series.hpp"
#include "test_helpers.hpp"

using namespace slicelab;
using namespace slicelab::testing;

TEST_SUITE("idempotent") {

TEST_CASE("per-sphere values") {
  Rng rng(51);
  UnitImaginary I = rng.unit_imaginary();
  CHECK(qapprox(idempotent_value(SphereBehavior::zero(), I), Quaternion{}, 0.0));
  CHECK(qapprox(idempotent_value(SphereBehavior::one(), I), Quaternion{1.0}, 0.0));

  SphereBehavior generic = SphereBehavior::pair(UnitImaginary::i(), UnitImaginary::j());
  CHECK(qapprox(idempotent_value(generic, UnitImaginary::i()), Quaternion{}, 1e-14));
  CHECK(qapprox(idempotent_value(generic, UnitImaginary::j()), Quaternion{1.0}, 1e-14));

  SphereBehavior mirror = SphereBehavior::pair(-UnitImaginary::k(), UnitImaginary::k());
  for (int it = 0; it < 20; ++it) {
    UnitImaginary dir = rng.unit_imaginary();
    Quaternion closed = 0.5 * (Quaternion{1.0} - dir.q() * UnitImaginary::k().q());
    CHECK(qapprox(idempotent_value(mirror, dir), closed, 1e-13));
  }

  CHECK(code_of([] { SphereBehavior::pair(UnitImaginary::i(), UnitImaginary::i()); }) ==
        Err::DegenerateUnits);
  CHECK(self_tilde_conjugate(mirror));
  CHECK(self_tilde_conjugate(SphereBehavior::zero()));
  CHECK(!self_tilde_conjugate(generic));
}

TEST_CASE("interval spec validation and lookup") {
  const double pi = std::numbers::pi;
  IdempotentSpec spec;
  spec.intervals = {{0.0, 0.4 * pi, SphereBehavior::zero()},
                    {0.4 * pi, pi, SphereBehavior::one()}};
  spec.validate();
  CHECK(spec.behavior_at(0.1).kind == SphereClass::Zero);
  CHECK(spec.behavior_at(3.0).kind == SphereClass::One);

  IdempotentSpec gap;
  gap.intervals = {{0.0, 1.0, SphereBehavior::zero()}, {1.5, pi, SphereBehavior::one()}};
  CHECK(code_of([&] { gap.validate(); }) == Err::Usage);

  IdempotentSpec bad_real;
  bad_real.intervals = {{0.0, pi, SphereBehavior::zero()}};
  bad_real.real_plus = 2;
  CHECK(code_of([&] { bad_real.validate(); }) == Err::Usage);

  CHECK(code_of([&] { fit_idempotent(spec, 1); }) == Err::Usage);
  CHECK(code_of([&] { fit_idempotent(spec, 500); }) == Err::SupportOverflow);
}

TEST_CASE("fits of constant behaviors are the exact idempotents") {
  auto one_fit = fit_idempotent([](double) { return SphereBehavior::one(); }, 16);
  CHECK(coeff_distance(one_fit, SliceLaurentSeries::constant(1.0)) < 1e-12);
  auto zero_fit = fit_idempotent([](double) { return SphereBehavior::zero(); }, 16);
  CHECK(zero_fit.l2_norm() < 1e-12);
}

TEST_CASE("pair fits interpolate, classify, and reflect under conjugation") {
  UnitImaginary J{0.3, -0.5, 0.8};
  auto behavior = [J](double) { return SphereBehavior::pair(-J, J); };
  auto f = fit_idempotent(behavior, 32);
  CHECK(fit_residual(f, behavior, 32, 16) < 1e-10);

  BoundaryGrid probe = make_grid(32, 8);
  double t = probe.t_nodes[9];
  SphereBehavior b = classify_sphere(f, t);
  REQUIRE(b.kind == SphereClass::Pair);
  CHECK(angle_between(b.J, -J) < 1e-6);
  CHECK(angle_between(b.K, J) < 1e-6);

  SphereBehavior bc = classify_sphere(conjugate(f), t);
  REQUIRE(bc.kind == SphereClass::Pair);
  CHECK(angle_between(bc.J, J) < 1e-6);
  CHECK(angle_between(bc.K, -J) < 1e-6);

  PairReport rep = pair_report(f, t);
  CHECK(rep.res_x_one < 1e-8);
  CHECK(rep.res_orth < 1e-8);
  CHECK(rep.res_eq < 1e-8);
  CHECK(rep.tilde_conj_symmetric);
  CHECK(rep.res_a_one < 1e-8);
  CHECK((rep.pair.K.q() + rep.pair.J.q()).norm() < 1e-8);
}

TEST_CASE("real point classification") {
  CHECK(classify_real_point(SliceLaurentSeries::constant(1.0), +1) == 1);
  CHECK(classify_real_point(SliceLaurentSeries::constant(1.0), -1) == 1);
  CHECK(classify_real_point(SliceLaurentSeries{}, +1) == 0);
  CHECK(code_of([] { classify_real_point(SliceLaurentSeries::constant(0.5), +1); }) ==
        Err::Unclassifiable);

  const double pi = std::numbers::pi;
  IdempotentSpec spec;
  spec.intervals = {{0.0, 0.4 * pi, SphereBehavior::zero()},
                    {0.4 * pi, pi, SphereBehavior::one()}};
  spec.real_minus = 1;
  auto f = fit_idempotent(spec, 64);
  CHECK(classify_real_point(f, +1, 0.05) == 0);
  CHECK(classify_real_point(f, -1, 0.05) == 1);
}

TEST_CASE("idempotency residual for exactly representable cases") {
  BoundaryGrid grid = make_grid(16, 8);
  CHECK(verify_idempotent(SliceLaurentSeries::constant(1.0), grid) < 1e-15);
  CHECK(verify_idempotent(SliceLaurentSeries{}, grid) < 1e-15);
  CHECK(verify_idempotent(SliceLaurentSeries::constant(0.5), grid) > 0.1);
}

}  // TEST_SUITE
