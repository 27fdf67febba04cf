#pragma once

// Slice idempotents f * f = f.  On each boundary sphere e^{tS} such a
// function is constant 0, constant 1, or the affine unit-pair form
//
//     f(e^{tI}) = -((J - K)^{-1} K + I (J - K)^{-1}),
//
// which vanishes at I = J and equals 1 at I = K.  This module builds series
// representatives from per-sphere behavior, verifies idempotency, and
// classifies spheres of a given series back into that trichotomy.

#include <functional>
#include <optional>
#include <vector>

#include "slicelab/boundary.hpp"
#include "slicelab/quaternion.hpp"
#include "slicelab/series.hpp"

namespace slicelab {

enum class SphereClass { Zero, One, Pair };

struct SphereBehavior {
  SphereClass kind = SphereClass::Zero;
  UnitImaginary J;  // zero of f on the sphere (Pair only)
  UnitImaginary K;  // where f equals 1 (Pair only)

  static SphereBehavior zero() { return {}; }
  static SphereBehavior one() { return {SphereClass::One, {}, {}}; }
  static SphereBehavior pair(const UnitImaginary& J, const UnitImaginary& K);
};

// Value at direction I of the idempotent with the given per-sphere behavior.
Quaternion idempotent_value(const SphereBehavior& b, const UnitImaginary& I);

// True for Zero, One, and Pair with K = -J (within eps); exactly the spheres
// on which tilde(conjugate(f)) = f can hold.
bool self_tilde_conjugate(const SphereBehavior& b, double eps = 1e-8);

// Piecewise-constant behavior specification over t in (0, pi).
struct IdempotentInterval {
  double t0 = 0.0, t1 = 0.0;  // half-open [t0, t1)
  SphereBehavior behavior;
};

struct IdempotentSpec {
  std::vector<IdempotentInterval> intervals;  // must tile (0, pi) disjointly
  int real_plus = 0;   // declared value at q = +1, 0 or 1
  int real_minus = 0;  // declared value at q = -1

  void validate() const;  // Usage on gaps, overlaps, or malformed pairs
  SphereBehavior behavior_at(double t) const;
};

// Per-sphere behavior as a function of t; may vary continuously (J(t), K(t)).
using BehaviorFn = std::function<SphereBehavior(double)>;

// Least-degree series on support [-m, m] interpolating the behavior exactly
// at the offset angles (k + 1/2) pi / m, k = 0 .. 2m-1, of one full slice
// circle.  Those t-values are exactly the midpoint nodes of make_grid(m, *),
// and a series matched on the +-I0 circle matches on the whole sphere there.
// The +-m bins alias each other on the offset grid and are split evenly with
// the sign that keeps tilde(conjugate(f)) = f when the behavior allows it.
SliceLaurentSeries fit_idempotent(const BehaviorFn& behavior, int m,
                                  const UnitImaginary& I0 = UnitImaginary{1.0, 1.0, 1.0});
SliceLaurentSeries fit_idempotent(const IdempotentSpec& spec, int m,
                                  const UnitImaginary& I0 = UnitImaginary{1.0, 1.0, 1.0});

// Aliasing guard: max over the fit-node spheres and n_dirs off-slice
// directions of |f(e^{tI}) - idempotent_value(behavior(t), I)|.
double fit_residual(const SliceLaurentSeries& f, const BehaviorFn& behavior, int m, int n_dirs);

// max over grid nodes of |(f*f)(q) - f(q)| plus the coefficient residual
// ||star(f, f) - f||_2.  Approximately zero certifies idempotency at
// truncation scale.
double verify_idempotent(const SliceLaurentSeries& f, const BoundaryGrid& grid);

// Classifies the sphere e^{tS}: Zero / One when |f| resp. |f - 1| stays below
// tol sphere-wide, otherwise locates the zero direction J and the unit
// direction K (coarse lattice scan, then local refinement exploiting that
// f(e^{tI}) is affine in I) and validates the Pair reconstruction against
// samples.  Unclassifiable when the reconstruction misses by more than tol.
// tol <= 0 means config().tol.
SphereBehavior classify_sphere(const SliceLaurentSeries& f, double t, double tol = 0.0);

// Value class at the real boundary point q = sign (+1 or -1): 0 or 1 within
// tol, Unclassifiable otherwise.
int classify_real_point(const SliceLaurentSeries& f, int sign, double tol = 1e-2);

// Diagnostics at the mirror point e^{-tJ} of a Pair sphere: a = f(e^{-tJ})
// decomposes as a = x + y K_dec with K_dec orthogonal to J, and aJ + Ja = 2J.
// When the series is tilde-conjugation symmetric, additionally a = 1.
struct PairReport {
  double t = 0.0;
  SphereBehavior pair;                // classification of the sphere
  Quaternion a;                       // f(e^{-tJ})
  double x = 0.0, y = 0.0;            // a = x + y K_dec
  std::optional<UnitImaginary> k_dec;  // absent when y is (numerically) zero
  double res_x_one = 0.0;             // |x - 1|
  double res_orth = 0.0;              // |<K_dec, J>|
  double res_eq = 0.0;                // ||aJ + Ja - 2J||
  bool tilde_conj_symmetric = false;  // tilde(conjugate(f)) = f coefficientwise
  double res_a_one = 0.0;             // ||a - 1||, asserted only in the symmetric case
};

PairReport pair_report(const SliceLaurentSeries& f, double t, double tol = 0.0);

}  // namespace slicelab
