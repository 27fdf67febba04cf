#include <doctest.h>

#include <filesystem>
#include <numbers>

#include <json.hpp>

#include "slicelab/idempotent.hpp"
#include "slicelab/io.hpp"
#include "slicelab/random.hpp"
#include "slicelab/series.hpp"
#include "test_helpers.hpp"

using namespace slicelab;
using namespace slicelab::testing;
using nlohmann::json;

TEST_SUITE("io") {

TEST_CASE("quaternion layout is [w, x, y, z]") {
  json j = quaternion_to_json(Quaternion{1.0, 2.0, 3.0, 4.0});
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  CHECK(j[0].get<double>() == 1.0);
  CHECK(j[3].get<double>() == 4.0);
  CHECK(qapprox(quaternion_from_json(j), Quaternion{1.0, 2.0, 3.0, 4.0}, 0.0));
}

TEST_CASE("series round trips bit-exactly through files") {
  Rng rng(71);
  std::vector<Quaternion> c;
  for (int k = 0; k < 9; ++k) c.push_back(rng.quaternion());
  SliceLaurentSeries f(-3, std::move(c));

  CHECK(coeff_max_distance(series_from_json(series_to_json(f)), f) == 0.0);

  auto path = (std::filesystem::temp_directory_path() / "slicelab_series_rt.json").string();
  save_series(path, f);
  SliceLaurentSeries g = load_series(path);
  std::filesystem::remove(path);
  CHECK(g.n_min() == f.n_min());
  CHECK(coeff_max_distance(g, f) == 0.0);
}

TEST_CASE("series parsing rejects malformed and oversized input") {
  CHECK(code_of([] { series_from_json(json::object()); }) == Err::Parse);
  CHECK(code_of([] {
          series_from_json(json{{"n_min", 0}, {"coeffs", json::array({json::array({1.0, 0.0})})}});
        }) == Err::Parse);
  json big{{"n_min", 1000}, {"coeffs", json::array({json::array({1.0, 0.0, 0.0, 0.0})})}};
  CHECK(code_of([&] { series_from_json(big); }) == Err::SupportOverflow);
  CHECK(code_of([] { load_series("/nonexistent/slicelab.json"); }) == Err::Parse);
}

TEST_CASE("idempotent specs round trip with tags and real points") {
  const double pi = std::numbers::pi;
  IdempotentSpec spec;
  spec.intervals = {{0.0, 1.0, SphereBehavior::zero()},
                    {1.0, 2.0, SphereBehavior::pair(UnitImaginary::i(), UnitImaginary::j())},
                    {2.0, pi, SphereBehavior::one()}};
  spec.real_plus = 0;
  spec.real_minus = 1;

  json j = spec_to_json(spec);
  CHECK(j["intervals"][0]["tag"] == "zero");
  CHECK(j["intervals"][1]["tag"] == "pair");
  CHECK(j["intervals"][2]["tag"] == "one");
  CHECK(j["real_points"]["-1"] == 1);

  IdempotentSpec back = spec_from_json(j);
  REQUIRE(back.intervals.size() == 3);
  CHECK(back.intervals[1].behavior.kind == SphereClass::Pair);
  CHECK(angle_between(back.intervals[1].behavior.J, UnitImaginary::i()) < 1e-15);
  CHECK(angle_between(back.intervals[1].behavior.K, UnitImaginary::j()) < 1e-15);
  CHECK(back.real_minus == 1);
  CHECK(back.intervals[2].t1 == doctest::Approx(pi));

  json bad = j;
  bad["intervals"][0]["tag"] = "half";
  CHECK(code_of([&] { spec_from_json(bad); }) == Err::Parse);
}

TEST_CASE("factorization report fields") {
  Factorization fac;
  fac.phi = SliceLaurentSeries::monomial(1);
  fac.g = SliceLaurentSeries::constant(1.0);
  fac.res_reconstruction = 1e-12;
  fac.res_unimodularity = 2e-12;
  fac.res_cyclicity = 3e-12;
  fac.depth = 32;

  json j = factorization_to_json(fac);
  CHECK(j.contains("phi"));
  CHECK(j.contains("g"));
  CHECK(j["residuals"]["reconstruction"].get<double>() == 1e-12);
  CHECK(j["residuals"]["unimodularity"].get<double>() == 2e-12);
  CHECK(j["residuals"]["cyclicity"].get<double>() == 3e-12);
  CHECK(j["depth"].get<int>() == 32);
  CHECK(j.contains("max_degree"));
}

}  // TEST_SUITE
