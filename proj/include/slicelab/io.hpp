#pragma once

// JSON formats shared by the CLI and the test fixtures.
//
//   quaternion        [w, x, y, z]
//   series            {"n_min": int, "coeffs": [quaternion, ...]}
//   idempotent spec   {"intervals": [{"t0":.., "t1":.., "tag": "zero"|"one"|"pair",
//                      "J": [x,y,z], "K": [x,y,z]}], "real_points": {"+1": 0|1, "-1": 0|1}}
//
// Doubles are emitted in shortest round-trip form, so save/load is bit-exact
// and repeated runs are byte-identical.

#include <string>

#include <json.hpp>

#include "slicelab/idempotent.hpp"
#include "slicelab/series.hpp"
#include "slicelab/subspace.hpp"

namespace slicelab {

nlohmann::json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const SliceLaurentSeries& f);
SliceLaurentSeries series_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const IdempotentSpec& spec);
IdempotentSpec spec_from_json(const nlohmann::json& j);

nlohmann::json factorization_to_json(const Factorization& fac);

// File helpers; Err::Parse on unreadable files or malformed content.
SliceLaurentSeries load_series(const std::string& path);
void save_series(const std::string& path, const SliceLaurentSeries& f);
IdempotentSpec load_spec(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace slicelab
