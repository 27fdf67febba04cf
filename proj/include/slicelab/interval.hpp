#pragma once

#include <algorithm>

namespace slicelab {

// Closed integer index interval [lo, hi]; hi < lo means empty.
struct Interval {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  int length() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int n) const { return n >= lo && n <= hi; }
  bool contains(const Interval& o) const { return o.empty() || (lo <= o.lo && o.hi <= hi); }

  static Interval hull(const Interval& a, const Interval& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }
};

inline bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

}  // namespace slicelab
