#include <doctest.h>

#include <numbers>

#include "slicelab/quaternion.hpp"
#include "slicelab/random.hpp"
#include "test_helpers.hpp"

using namespace slicelab;
using namespace slicelab::testing;

TEST_SUITE("quaternion") {

TEST_CASE("hamilton product, norm, conjugation") {
  Quaternion a = Quaternion{1.0} + Quaternion::i();
  Quaternion b = Quaternion{1.0} - Quaternion::i();
  CHECK(qapprox(a * b, Quaternion{2.0}, 0.0));
  CHECK(qapprox(Quaternion::i() * Quaternion::j(), Quaternion::k(), 0.0));
  CHECK(qapprox(Quaternion::j() * Quaternion::i(), -Quaternion::k(), 0.0));

  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    Quaternion p = rng.quaternion(), q = rng.quaternion();
    CHECK((p * q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-12));
    CHECK(qapprox((p * q).conj(), q.conj() * p.conj(), 1e-12));
    CHECK(p.norm_sq() == doctest::Approx((p * p.conj()).re()).epsilon(1e-12));
  }
}

TEST_CASE("inverse") {
  Quaternion a = Quaternion{1.0} + Quaternion::i();
  CHECK(qapprox(inverse(a), Quaternion{0.5, -0.5, 0.0, 0.0}, 1e-15));
  CHECK(qapprox(a * inverse(a), Quaternion{1.0}, 1e-15));
  CHECK(code_of([] { inverse(Quaternion{}); }) == Err::ZeroDivision);
}

TEST_CASE("unit imaginary directions and the exponential") {
  CHECK(code_of([] { (void)UnitImaginary{0.0, 0.0, 0.0}; }) == Err::DegenerateUnits);
  UnitImaginary u{2.0, 0.0, 0.0};
  CHECK(u.x == doctest::Approx(1.0));
  CHECK(u.q().norm() == doctest::Approx(1.0));

  CHECK(qapprox(exp_unit(std::numbers::pi / 2, UnitImaginary::j()), Quaternion::j(), 1e-15));
  CHECK(qapprox(exp_unit(std::numbers::pi, UnitImaginary::i()), Quaternion{-1.0}, 1e-12));
  CHECK(angle_between(UnitImaginary::i(), UnitImaginary::j()) ==
        doctest::Approx(std::numbers::pi / 2));
  CHECK(angle_between(UnitImaginary::k(), UnitImaginary::k()) == doctest::Approx(0.0));
}

TEST_CASE("dot-cross decomposition and slice coordinates") {
  Rng rng(12);
  for (int it = 0; it < 50; ++it) {
    UnitImaginary J = rng.unit_imaginary(), K = rng.unit_imaginary();
    auto [d, cross] = dot_cross_decompose(K, J);
    CHECK(qapprox(K.q() * J.q(), Quaternion{-d} + cross, 1e-12));
    CHECK(d == doctest::Approx(dot(K, J)).epsilon(1e-10));
  }

  Quaternion p{0.5, 0.0, 0.3, -0.4};
  SliceDecomposition s = slice_decompose(p);
  CHECK(s.x == doctest::Approx(0.5));
  CHECK(s.y == doctest::Approx(0.5));
  REQUIRE(s.axis.has_value());
  CHECK(qapprox(Quaternion{s.x} + s.axis->q() * s.y, p, 1e-12));

  SliceDecomposition real_case = slice_decompose(Quaternion{-2.0});
  CHECK(real_case.x == doctest::Approx(-2.0));
  CHECK(real_case.y == doctest::Approx(0.0));
  CHECK(!real_case.axis.has_value());
}

}  // TEST_SUITE
