#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "slicelab/error.hpp"
#include "slicelab/quaternion.hpp"

namespace slicelab::testing {

// Error code raised by fn, if any.
template <typename Fn>
std::optional<Err> code_of(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline bool qapprox(const Quaternion& a, const Quaternion& b, double eps = 1e-12) {
  return (a - b).norm() <= eps;
}

}  // namespace slicelab::testing
