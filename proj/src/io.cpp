#include "slicelab/io.hpp"

#include <fstream>

#include "slicelab/config.hpp"
#include "slicelab/error.hpp"

namespace slicelab {

using nlohmann::json;

namespace {

double json_number(const json& j, const char* what) {
  if (!j.is_number()) fail(Err::Parse, std::string(what) + ": expected a number");
  return j.get<double>();
}

UnitImaginary unit_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) fail(Err::Parse, std::string(what) + ": expected [x, y, z]");
  return UnitImaginary{json_number(j[0], what), json_number(j[1], what), json_number(j[2], what)};
}

json unit_to_json(const UnitImaginary& u) { return json::array({u.x, u.y, u.z}); }

int real_point_from_json(const json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const json& v = j.at(key);
  if (!v.is_number_integer()) fail(Err::Parse, std::string("real_points[") + key + "]: expected 0 or 1");
  return v.get<int>();
}

}  // namespace

json quaternion_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    fail(Err::Parse, "quaternion: expected [w, x, y, z]");
  return {json_number(j[0], "quaternion"), json_number(j[1], "quaternion"),
          json_number(j[2], "quaternion"), json_number(j[3], "quaternion")};
}

json series_to_json(const SliceLaurentSeries& f) {
  json coeffs = json::array();
  for (const Quaternion& c : f.coeffs()) coeffs.push_back(quaternion_to_json(c));
  return json{{"n_min", f.is_zero() ? 0 : f.n_min()}, {"coeffs", std::move(coeffs)}};
}

SliceLaurentSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_min") || !j.contains("coeffs"))
    fail(Err::Parse, "series: expected {\"n_min\":…, \"coeffs\":[…]}");
  if (!j["n_min"].is_number_integer()) fail(Err::Parse, "series: n_min must be an integer");
  const json& coeffs = j["coeffs"];
  if (!coeffs.is_array()) fail(Err::Parse, "series: coeffs must be an array");
  std::vector<Quaternion> c;
  c.reserve(coeffs.size());
  for (const json& q : coeffs) c.push_back(quaternion_from_json(q));
  int n_min = j["n_min"].get<int>();
  int cap = config().max_degree;
  if (!c.empty() && (n_min < -cap || n_min + static_cast<int>(c.size()) - 1 > cap))
    fail(Err::SupportOverflow, "series: stored support exceeds max_degree");
  return SliceLaurentSeries(n_min, std::move(c));
}

json spec_to_json(const IdempotentSpec& spec) {
  json intervals = json::array();
  for (const IdempotentInterval& iv : spec.intervals) {
    json entry{{"t0", iv.t0}, {"t1", iv.t1}};
    switch (iv.behavior.kind) {
      case SphereClass::Zero: entry["tag"] = "zero"; break;
      case SphereClass::One: entry["tag"] = "one"; break;
      case SphereClass::Pair:
        entry["tag"] = "pair";
        entry["J"] = unit_to_json(iv.behavior.J);
        entry["K"] = unit_to_json(iv.behavior.K);
        break;
    }
    intervals.push_back(std::move(entry));
  }
  return json{{"intervals", std::move(intervals)},
              {"real_points", json{{"+1", spec.real_plus}, {"-1", spec.real_minus}}}};
}

IdempotentSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("intervals"))
    fail(Err::Parse, "idempotent spec: expected {\"intervals\":[…]}");
  IdempotentSpec spec;
  for (const json& entry : j.at("intervals")) {
    if (!entry.is_object() || !entry.contains("t0") || !entry.contains("t1") ||
        !entry.contains("tag"))
      fail(Err::Parse, "idempotent spec: interval needs t0, t1, tag");
    IdempotentInterval iv;
    iv.t0 = json_number(entry["t0"], "interval t0");
    iv.t1 = json_number(entry["t1"], "interval t1");
    const std::string tag = entry["tag"].get<std::string>();
    if (tag == "zero") {
      iv.behavior = SphereBehavior::zero();
    } else if (tag == "one") {
      iv.behavior = SphereBehavior::one();
    } else if (tag == "pair") {
      if (!entry.contains("J") || !entry.contains("K"))
        fail(Err::Parse, "idempotent spec: pair interval needs J and K");
      iv.behavior = SphereBehavior::pair(unit_from_json(entry["J"], "interval J"),
                                         unit_from_json(entry["K"], "interval K"));
    } else {
      fail(Err::Parse, "idempotent spec: unknown tag \"" + tag + "\"");
    }
    spec.intervals.push_back(std::move(iv));
  }
  if (j.contains("real_points")) {
    spec.real_plus = real_point_from_json(j["real_points"], "+1");
    spec.real_minus = real_point_from_json(j["real_points"], "-1");
  }
  spec.validate();
  return spec;
}

json factorization_to_json(const Factorization& fac) {
  return json{{"phi", series_to_json(fac.phi)},
              {"g", series_to_json(fac.g)},
              {"residuals",
               json{{"reconstruction", fac.res_reconstruction},
                    {"unimodularity", fac.res_unimodularity},
                    {"cyclicity", fac.res_cyclicity}}},
              {"depth", fac.depth},
              {"max_degree", config().max_degree}};
}

SliceLaurentSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Parse, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Err::Parse, path + ": " + e.what());
  }
  return series_from_json(j);
}

void save_series(const std::string& path, const SliceLaurentSeries& f) {
  save_json(path, series_to_json(f));
}

IdempotentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Parse, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Err::Parse, path + ": " + e.what());
  }
  return spec_from_json(j);
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(Err::Parse, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace slicelab
