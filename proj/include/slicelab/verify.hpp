#pragma once

// Numbered verification suites covering the computable content of the theory:
//
//    1  *-algebra identities (associativity, conjugation, tilde, Parseval)
//    2  pointwise / *-product compatibility through the sphere-conjugation map
//    3  representation-formula exactness
//    4  unimodularity lemma, both directions, plus the boundary modulus identity
//    5  multiplier adjoints and isometry residuals
//    6  idempotent examples: verification, classification, mirror-point checks
//    7  doubly invariant projector residuals
//    8  wandering-vector recovery of known inner factors
//    9  inner-outer factorization round trips
//   10  cyclicity residuals (outer vs inner generators, frozen regressions)
//   11  zero-set measure proxy under grid refinement
//
// Each suite returns per-check results; thresholds are pinned here, not
// configurable, so a pass means the same thing everywhere.

#include <iosfwd>
#include <string>
#include <vector>

namespace slicelab {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool upper = true;        // pass iff value < bound; otherwise value >= bound
  bool informative = false; // reported for context, excluded from pass/fail
  bool pass = true;
};

inline constexpr int kCriteriaCount = 11;

// Runs one numbered suite (1-based).  Usage error outside [1, kCriteriaCount].
std::vector<CheckResult> run_criterion(int index);

const char* criterion_title(int index);

// Named suites for the CLI: algebra, adjoint, isometry, idempotent, beurling,
// factorization, all.  Usage error for unknown names.
std::vector<int> suite_criteria(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);

// Fixed-width table, one row per check.
void print_results(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace slicelab
