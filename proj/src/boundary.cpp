#include "slicelab/boundary.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "slicelab/error.hpp"

namespace slicelab {

double BoundaryGrid::total_weight() const {
  double wt = 0.0, ws = 0.0;
  for (double w : t_weights) wt += w;
  for (double w : sphere_weights) ws += w;
  return wt * ws;
}

std::vector<UnitImaginary> sphere_lattice(int n) {
  if (n < 2) fail(Err::Usage, "sphere_lattice: need at least 2 nodes");
  // Fibonacci lattice: z descends through the midpoints of [-1, 1], azimuth
  // advances by the golden angle.
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<UnitImaginary> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double z = 1.0 - (2.0 * k + 1.0) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden_angle * k;
    nodes.push_back(UnitImaginary{r * std::cos(phi), r * std::sin(phi), z});
  }
  return nodes;
}

BoundaryGrid make_grid(int n_t, int n_sphere) {
  if (n_t < 2 || n_sphere < 2) fail(Err::Usage, "make_grid: need at least 2 nodes per factor");
  BoundaryGrid g;
  g.t_nodes.reserve(static_cast<std::size_t>(n_t));
  g.t_weights.assign(static_cast<std::size_t>(n_t), 1.0 / n_t);
  for (int i = 0; i < n_t; ++i)
    g.t_nodes.push_back((i + 0.5) * std::numbers::pi / n_t);

  g.sphere_nodes = sphere_lattice(n_sphere);
  g.sphere_weights.assign(static_cast<std::size_t>(n_sphere), 1.0 / n_sphere);
  return g;
}

Quaternion representation(const Quaternion& valJ, const Quaternion& valK, const UnitImaginary& J,
                          const UnitImaginary& K, const UnitImaginary& I) {
  Quaternion d = J.q() - K.q();
  if (d.norm() <= kZeroTol) fail(Err::DegenerateUnits, "representation: J and K coincide");
  Quaternion dinv = inverse(d);
  Quaternion Iq = I.q();
  return (dinv * J.q() + Iq * dinv) * valJ - (dinv * K.q() + Iq * dinv) * valK;
}

Quaternion slice_inner(const SliceLaurentSeries& f, const SliceLaurentSeries& g,
                       const UnitImaginary& I, int n_theta) {
  int reach = 0;
  for (const SliceLaurentSeries* s : {&f, &g}) {
    if (s->is_zero()) continue;
    reach = std::max({reach, std::abs(s->n_min()), std::abs(s->n_max())});
  }
  if (n_theta <= 2 * reach)
    fail(Err::Usage, "slice_inner: n_theta must exceed twice the largest support index");
  Quaternion acc{};
  for (int k = 0; k < n_theta; ++k) {
    double th = 2.0 * std::numbers::pi * k / n_theta;
    Quaternion p = exp_unit(th, I);
    acc += evaluate(g, p).conj() * evaluate(f, p);
  }
  return (1.0 / n_theta) * acc;
}

double ess_sup_estimate(const SliceLaurentSeries& f, const BoundaryGrid& grid) {
  double m = 0.0;
  for (double t : grid.t_nodes)
    for (const UnitImaginary& I : grid.sphere_nodes)
      m = std::max(m, evaluate(f, exp_unit(t, I)).norm());
  return m;
}

double unimodularity_residual(const SliceLaurentSeries& f, const BoundaryGrid& grid) {
  double node_res = 0.0;
  for (double t : grid.t_nodes)
    for (const UnitImaginary& I : grid.sphere_nodes)
      node_res = std::max(node_res, std::abs(evaluate(f, exp_unit(t, I)).norm() - 1.0));
  SliceLaurentSeries prod = star(tilde(f), conjugate(f));
  double coeff_res = coeff_distance(prod, SliceLaurentSeries::constant(1.0));
  return std::max(node_res, coeff_res);
}

namespace {

void put(std::string& line, double v, bool first = false) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  if (!first) line += ',';
  line += buf;
}

void put_row(std::ostream& os, const SliceLaurentSeries& f, const Quaternion& q, double t,
             double Ix, double Iy, double Iz) {
  Quaternion v = evaluate(f, q);
  std::string line;
  put(line, t, true);
  put(line, Ix);
  put(line, Iy);
  put(line, Iz);
  put(line, v.w);
  put(line, v.x);
  put(line, v.y);
  put(line, v.z);
  put(line, v.norm());
  line += '\n';
  os << line;
}

}  // namespace

void write_trace_csv(std::ostream& os, const SliceLaurentSeries& f, const BoundaryGrid& grid) {
  os << "t,Ix,Iy,Iz,fw,fx,fy,fz,abs\n";
  if (grid.includes_reals) put_row(os, f, Quaternion{1.0}, 0.0, 0.0, 0.0, 0.0);
  for (double t : grid.t_nodes)
    for (const UnitImaginary& I : grid.sphere_nodes)
      put_row(os, f, exp_unit(t, I), t, I.x, I.y, I.z);
  if (grid.includes_reals)
    put_row(os, f, Quaternion{-1.0}, std::numbers::pi, 0.0, 0.0, 0.0);
}

}  // namespace slicelab
