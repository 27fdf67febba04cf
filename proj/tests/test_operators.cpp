#include <doctest.h>

#include "slicelab/operators.hpp"
#include "slicelab/random.hpp"
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

TEST_SUITE("operators") {

TEST_CASE("multiplier matrices are toeplitz in the symbol") {
  Rng rng(41);
  SliceLaurentSeries phi = random_series(rng, -2, 6);
  QuaternionMatrix m = multiplier_matrix(phi, Interval{-4, 4}, Interval{-6, 7});
  for (int i = -6; i <= 7; ++i)
    for (int j = -4; j <= 4; ++j) CHECK(qapprox(m.at(i, j), phi.coeff(i - j), 0.0));
}

TEST_CASE("apply agrees with the star product") {
  Rng rng(42);
  SliceLaurentSeries phi = random_series(rng, -2, 5);
  SliceLaurentSeries f = random_series(rng, -3, 6);
  Interval domain = f.support();
  Interval codomain{domain.lo + phi.n_min(), domain.hi + phi.n_max()};
  QuaternionMatrix m = multiplier_matrix(phi, domain, codomain);
  CHECK(coeff_max_distance(apply(m, f), star(phi, f)) < 1e-13);

  SliceLaurentSeries outside = random_series(rng, 10, 3);
  CHECK(code_of([&] { apply(m, outside); }) == Err::AmbientMismatch);
}

TEST_CASE("adjoint is the conjugate transpose with reversed symbol") {
  Rng rng(43);
  SliceLaurentSeries phi = random_series(rng, -2, 5);
  const Interval domain{-4, 4}, codomain{-8, 8};
  QuaternionMatrix m = multiplier_matrix(phi, domain, codomain);
  QuaternionMatrix ma = adjoint(m);
  QuaternionMatrix mrev = multiplier_matrix(tilde(conjugate(phi)), codomain, domain);
  for (int i = domain.lo; i <= domain.hi; ++i)
    for (int j = codomain.lo; j <= codomain.hi; ++j) {
      CHECK(qapprox(ma.at(i, j), m.at(j, i).conj(), 0.0));
      CHECK(qapprox(ma.at(i, j), mrev.at(i, j), 0.0));
    }

  SliceLaurentSeries f = random_series(rng, -4, 9);
  SliceLaurentSeries g = random_series(rng, -8, 17);
  Quaternion lhs = l2_inner(apply(m, f), g);
  Quaternion rhs = l2_inner(f, apply(ma, g));
  CHECK(qapprox(lhs, rhs, 1e-11));
}

TEST_CASE("matmul with identity and range checks") {
  Rng rng(44);
  SliceLaurentSeries phi = random_series(rng, -1, 3);
  QuaternionMatrix m = multiplier_matrix(phi, Interval{-2, 2}, Interval{-3, 3});
  QuaternionMatrix id_rows = identity(Interval{-3, 3});
  QuaternionMatrix prod = matmul(id_rows, m);
  for (int i = -3; i <= 3; ++i)
    for (int j = -2; j <= 2; ++j) CHECK(qapprox(prod.at(i, j), m.at(i, j), 0.0));

  QuaternionMatrix id_small = identity(Interval{-1, 1});
  CHECK(code_of([&] { matmul(m, id_small); }) == Err::AmbientMismatch);
}

TEST_CASE("operator norm by power iteration") {
  CHECK(operator_norm(identity(Interval{0, 10})) == doctest::Approx(1.0));
  Rng rng(45);
  QuaternionMatrix m = multiplier_matrix(SliceLaurentSeries::monomial(1, 2.0 * rng.unit_quaternion()),
                                         Interval{0, 8}, Interval{0, 9});
  CHECK(operator_norm(m) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("isometry and projection residuals") {
  Rng rng(46);
  const Interval window{0, 8};
  CHECK(isometry_residual(SliceLaurentSeries::monomial(2, rng.unit_quaternion()), window) < 1e-9);
  CHECK(isometry_residual(SliceLaurentSeries(0, {Quaternion{0.5}, Quaternion{0.5}}), window) >
        0.25);
  CHECK(isometry_residual(SliceLaurentSeries{}, window) == 1.0);

  CHECK(projection_residual(SliceLaurentSeries::constant(1.0), Interval{0, 6}) < 1e-12);
  CHECK(projection_residual(SliceLaurentSeries{}, Interval{0, 6}) == 0.0);
  CHECK(projection_residual(SliceLaurentSeries::monomial(1), Interval{0, 6}) >= 1.0);
}

}  // TEST_SUITE
