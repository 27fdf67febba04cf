#pragma once

// Sampling of the boundary of the quaternionic unit ball.  Points are
// q = e^{tI} with t in (0, pi) and I on the sphere S; the product measure
// (midpoint rule in t) x (Fibonacci lattice on S) is normalized to total
// weight 1, matching the normalization of the boundary measure.

#include <iosfwd>
#include <vector>

#include "slicelab/quaternion.hpp"
#include "slicelab/series.hpp"

namespace slicelab {

struct BoundaryGrid {
  std::vector<double> t_nodes;            // midpoints of (0, pi)
  std::vector<double> t_weights;          // each 1/n_t
  std::vector<UnitImaginary> sphere_nodes;  // Fibonacci lattice on S
  std::vector<double> sphere_weights;     // each 1/n_sphere
  bool includes_reals = false;            // optional zero-weight rows at q = +-1

  std::size_t node_count() const { return t_nodes.size() * sphere_nodes.size(); }
  double total_weight() const;
};

// Fibonacci lattice of n near-uniform nodes on S.
std::vector<UnitImaginary> sphere_lattice(int n);

BoundaryGrid make_grid(int n_t, int n_sphere);

// Weighted sum of fn(q, t, I) over the product nodes; fn returns double.
template <typename Fn>
double integrate(const BoundaryGrid& grid, Fn&& fn) {
  double acc = 0.0;
  for (std::size_t it = 0; it < grid.t_nodes.size(); ++it) {
    double t = grid.t_nodes[it], wt = grid.t_weights[it];
    for (std::size_t is = 0; is < grid.sphere_nodes.size(); ++is) {
      const UnitImaginary& I = grid.sphere_nodes[is];
      acc += wt * grid.sphere_weights[is] * fn(exp_unit(t, I), t, I);
    }
  }
  return acc;
}

// Representation formula: reconstructs f(x+yI) from the values on two other
// slices of the same sphere,
//   ((J-K)^{-1} J + I (J-K)^{-1}) valJ - ((J-K)^{-1} K + I (J-K)^{-1}) valK.
// DegenerateUnits when J and K nearly coincide.
Quaternion representation(const Quaternion& valJ, const Quaternion& valK, const UnitImaginary& J,
                          const UnitImaginary& K, const UnitImaginary& I);

// Single-slice inner product (1/2pi) Int conj(g(e^{I th})) f(e^{I th}) dth by
// the uniform rule with n_theta nodes; exact (coefficientwise Parseval) once
// n_theta exceeds twice the largest support index in play.
Quaternion slice_inner(const SliceLaurentSeries& f, const SliceLaurentSeries& g,
                       const UnitImaginary& I, int n_theta);

// Grid max of |f|; a lower bound for the essential sup, no extrapolation.
double ess_sup_estimate(const SliceLaurentSeries& f, const BoundaryGrid& grid);

// max over nodes of ||f(e^{tI})| - 1| combined with the coefficient residual
// ||tilde(f) * f^c - 1||; both vanish exactly for unimodular symbols.
double unimodularity_residual(const SliceLaurentSeries& f, const BoundaryGrid& grid);

// CSV trace of f over the grid: header "t,Ix,Iy,Iz,fw,fx,fy,fz,abs", one row
// per node, t-major then sphere order.  Deterministic byte-for-byte.
void write_trace_csv(std::ostream& os, const SliceLaurentSeries& f, const BoundaryGrid& grid);

}  // namespace slicelab
