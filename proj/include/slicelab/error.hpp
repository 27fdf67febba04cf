#pragma once

#include <stdexcept>
#include <string>

namespace slicelab {

// Failure modes surfaced to callers. The CLI maps a subset of these onto its
// documented exit codes; everything else is reported as a generic input error.
enum class Err {
  ZeroDivision,
  SupportOverflow,
  DegenerateUnits,
  ZeroValue,
  NotInvertible,
  Unclassifiable,
  AmbientMismatch,
  ZeroFunction,
  DoublyInvariant,
  FactorizationResidual,
  PointTooCloseToBoundary,
  Parse,
  Usage,
};

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const noexcept { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace slicelab
