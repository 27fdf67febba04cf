#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "slicelab/boundary.hpp"
#include "slicelab/random.hpp"
#include "slicelab/series.hpp"
#include "test_helpers.hpp"

using namespace slicelab;
using namespace slicelab::testing;

TEST_SUITE("boundary") {

TEST_CASE("grid construction") {
  BoundaryGrid grid = make_grid(16, 8);
  CHECK(grid.t_nodes.size() == 16);
  CHECK(grid.sphere_nodes.size() == 8);
  CHECK(grid.total_weight() == doctest::Approx(1.0));
  CHECK(grid.t_nodes.front() == doctest::Approx(std::numbers::pi * 0.5 / 16));
  CHECK(grid.t_nodes.back() == doctest::Approx(std::numbers::pi * 15.5 / 16));

  double z_sum = 0.0;
  for (const UnitImaginary& I : sphere_lattice(64)) {
    CHECK(I.q().norm() == doctest::Approx(1.0));
    z_sum += I.z;
  }
  CHECK(std::abs(z_sum) < 1e-12);
}

TEST_CASE("quadrature integrates real-coefficient slice polynomials exactly") {
  BoundaryGrid grid = make_grid(16, 8);
  double one = integrate(grid, [](const Quaternion&, double, const UnitImaginary&) { return 1.0; });
  CHECK(one == doctest::Approx(1.0));

  SliceLaurentSeries f(0, {Quaternion{1.0}, Quaternion{0.5}, Quaternion{0.25}});
  double mass = integrate(grid, [&](const Quaternion& q, double, const UnitImaginary&) {
    return evaluate(f, q).norm_sq();
  });
  CHECK(mass == doctest::Approx(f.l2_norm_sq()).epsilon(1e-12));
}

TEST_CASE("slice inner product matches the coefficient pairing") {
  Rng rng(31);
  UnitImaginary I = rng.unit_imaginary();
  for (int n = -2; n <= 2; ++n)
    for (int m = -2; m <= 2; ++m) {
      Quaternion a = rng.quaternion(), b = rng.quaternion();
      Quaternion ip = slice_inner(SliceLaurentSeries::monomial(n, a),
                                  SliceLaurentSeries::monomial(m, b), I, 16);
      Quaternion expect = n == m ? b.conj() * a : Quaternion{};
      CHECK(qapprox(ip, expect, 1e-13));
    }

  SliceLaurentSeries f(-2, {rng.quaternion(), rng.quaternion(), rng.quaternion()});
  SliceLaurentSeries g(-1, {rng.quaternion(), rng.quaternion()});
  CHECK(qapprox(slice_inner(f, g, I, 32), l2_inner(f, g), 1e-12));
  CHECK(code_of([&] { slice_inner(f, g, I, 4); }) == Err::Usage);
}

TEST_CASE("two-point representation recovers off-slice values") {
  Rng rng(32);
  SliceLaurentSeries f(-3, {rng.quaternion(), rng.quaternion(), rng.quaternion(),
                            rng.quaternion(), rng.quaternion()});
  double t = 1.1;
  UnitImaginary J = rng.unit_imaginary();
  UnitImaginary K = rng.unit_imaginary();
  while ((J.q() - K.q()).norm() < 0.5) K = rng.unit_imaginary();
  UnitImaginary I = rng.unit_imaginary();
  Quaternion rec = representation(evaluate(f, exp_unit(t, J)), evaluate(f, exp_unit(t, K)), J, K, I);
  CHECK(qapprox(rec, evaluate(f, exp_unit(t, I)), 1e-12));
}

TEST_CASE("essential sup and unimodularity residual") {
  BoundaryGrid grid = make_grid(32, 16);
  Rng rng(33);
  Quaternion u = rng.unit_quaternion();
  CHECK(ess_sup_estimate(SliceLaurentSeries::monomial(3, 2.0 * u), grid) == doctest::Approx(2.0));
  CHECK(unimodularity_residual(SliceLaurentSeries::monomial(1, u), grid) < 1e-12);
  CHECK(unimodularity_residual(SliceLaurentSeries(0, {Quaternion{0.5}, Quaternion{0.5}}), grid) >
        0.1);
}

TEST_CASE("trace csv layout") {
  BoundaryGrid grid = make_grid(4, 2);
  grid.sphere_nodes = {UnitImaginary::j()};
  grid.sphere_weights = {1.0};
  SliceLaurentSeries f(0, {Quaternion{1.0}, Quaternion::i()});

  std::ostringstream os;
  write_trace_csv(os, f, grid);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "t,Ix,Iy,Iz,fw,fx,fy,fz,abs");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 4);

  grid.includes_reals = true;
  std::ostringstream os2;
  write_trace_csv(os2, f, grid);
  std::istringstream is2(os2.str());
  rows = 0;
  while (std::getline(is2, line)) ++rows;
  CHECK(rows == 1 + 4 + 2);
}

}  // TEST_SUITE
