// slicelab: command-line front end for the slice L^2 toolkit.
//
// Exit codes: 0 success, 2 bad input or usage, 3 support overflow,
// 4 residual above tolerance, 5 doubly invariant subspace (no wandering
// vector), 6 verification suite failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicelab/boundary.hpp"
#include "slicelab/config.hpp"
#include "slicelab/error.hpp"
#include "slicelab/idempotent.hpp"
#include "slicelab/io.hpp"
#include "slicelab/quaternion.hpp"
#include "slicelab/series.hpp"
#include "slicelab/subspace.hpp"
#include "slicelab/verify.hpp"

namespace {

using namespace slicelab;

struct Options {
  std::string in_a, in_b, out_path, report_path, inner_path, outer_path, spec_path, suite;
  std::vector<std::string> gen_paths;
  std::vector<double> axis{1.0, 0.0, 0.0};
  std::vector<double> point;
  double t_val = 1.0;
  int inv_hi = 64;
  int fit_m = 0;
  int trace_nt = 0;
  bool with_reals = false;
};

Options opt;

void emit_series(const SliceLaurentSeries& f, const std::string& out) {
  if (out.empty())
    std::cout << series_to_json(f).dump(2) << '\n';
  else
    save_series(out, f);
}

void emit_json(const nlohmann::json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << '\n';
  else
    save_json(out, j);
}

UnitImaginary axis_from(const std::vector<double>& a) {
  return UnitImaginary{a.at(0), a.at(1), a.at(2)};
}

int effective_depth(const Interval& support) {
  const Config& cfg = config();
  return cfg.depth > 0 ? cfg.depth : auto_depth(cfg, support);
}

void print_behavior(double t, const SliceLaurentSeries& f) {
  char buf[256];
  try {
    SphereBehavior b = classify_sphere(f, t);
    switch (b.kind) {
      case SphereClass::Zero:
        std::snprintf(buf, sizeof(buf), "t=%.6f  zero", t);
        break;
      case SphereClass::One:
        std::snprintf(buf, sizeof(buf), "t=%.6f  one", t);
        break;
      case SphereClass::Pair:
        std::snprintf(buf, sizeof(buf),
                      "t=%.6f  pair  J=(%.6f,%.6f,%.6f)  K=(%.6f,%.6f,%.6f)", t, b.J.x, b.J.y,
                      b.J.z, b.K.x, b.K.y, b.K.z);
        break;
    }
  } catch (const Error& e) {
    std::snprintf(buf, sizeof(buf), "t=%.6f  unclassifiable (%s)", t, e.what());
  }
  std::cout << buf << '\n';
}

int cmd_idem_verify() {
  const Config& cfg = config();
  SliceLaurentSeries f = load_series(opt.in_a);
  BoundaryGrid grid = make_grid(cfg.grid_t, cfg.grid_sphere);

  double residual = verify_idempotent(f, grid);
  std::printf("residual %.17g  (tol %.17g)\n", residual, cfg.tol);

  std::size_t stride = std::max<std::size_t>(1, grid.t_nodes.size() / 16);
  for (std::size_t i = 0; i < grid.t_nodes.size(); i += stride) print_behavior(grid.t_nodes[i], f);
  for (int sign : {+1, -1}) {
    try {
      std::printf("q=%+d  value %d\n", sign, classify_real_point(f, sign));
    } catch (const Error& e) {
      std::printf("q=%+d  unclassifiable (%s)\n", sign, e.what());
    }
  }
  if (residual >= cfg.tol) {
    std::cerr << "error: idempotent residual exceeds tolerance\n";
    return 4;
  }
  return 0;
}

int cmd_factor() {
  const Config& cfg = config();
  SliceLaurentSeries f = load_series(opt.in_a);
  BoundaryGrid grid = make_grid(cfg.grid_t, cfg.grid_sphere);
  Factorization fac = inner_outer_factorize(f, effective_depth(f.support()), grid);
  emit_json(factorization_to_json(fac), opt.report_path);
  if (!opt.inner_path.empty()) save_series(opt.inner_path, fac.phi);
  if (!opt.outer_path.empty()) save_series(opt.outer_path, fac.g);
  if (!fac.passed(cfg.tol)) {
    std::cerr << "error: factorization residuals exceed tolerance\n";
    return 4;
  }
  return 0;
}

int cmd_verify() {
  std::vector<int> indices;
  if (!opt.suite.empty() && opt.suite.find_first_not_of("0123456789") == std::string::npos)
    indices.push_back(std::stoi(opt.suite));
  else
    indices = suite_criteria(opt.suite.empty() ? "all" : opt.suite);

  int passed = 0;
  for (int k : indices) {
    std::printf("[%d] %s\n", k, criterion_title(k));
    std::vector<CheckResult> results = run_criterion(k);
    print_results(std::cout, results);
    if (all_passed(results)) ++passed;
  }
  std::printf("criteria passed: %d/%zu\n", passed, indices.size());
  return passed == static_cast<int>(indices.size()) ? 0 : 6;
}

int run(const CLI::App& app) {
  const CLI::App* sub = app.get_subcommands().at(0);
  const std::string name = sub->get_name();
  const Config& cfg = config();

  if (name == "star") {
    emit_series(star(load_series(opt.in_a), load_series(opt.in_b)), opt.out_path);
  } else if (name == "conj") {
    emit_series(conjugate(load_series(opt.in_a)), opt.out_path);
  } else if (name == "sym") {
    emit_series(symmetrize(load_series(opt.in_a)), opt.out_path);
  } else if (name == "inv") {
    emit_series(star_inverse(load_series(opt.in_a), Interval{0, opt.inv_hi}), opt.out_path);
  } else if (name == "eval") {
    SliceLaurentSeries f = load_series(opt.in_a);
    Quaternion q = opt.point.size() == 4
                       ? Quaternion{opt.point[0], opt.point[1], opt.point[2], opt.point[3]}
                       : exp_unit(opt.t_val, axis_from(opt.axis));
    Quaternion v = evaluate(f, q);
    nlohmann::json j{{"point", quaternion_to_json(q)},
                     {"value", quaternion_to_json(v)},
                     {"abs", v.norm()}};
    std::cout << j.dump(2) << '\n';
  } else if (name == "idem-build") {
    IdempotentSpec spec = load_spec(opt.spec_path);
    int m = opt.fit_m > 0 ? opt.fit_m : cfg.grid_t;
    SliceLaurentSeries f = fit_idempotent(spec, m);
    std::printf("fit_residual %.17g\n",
                fit_residual(f, [&spec](double t) { return spec.behavior_at(t); }, m, 24));
    emit_series(f, opt.out_path);
  } else if (name == "idem-verify") {
    return cmd_idem_verify();
  } else if (name == "factor") {
    return cmd_factor();
  } else if (name == "wander") {
    std::vector<SliceLaurentSeries> gens;
    Interval hull;
    for (const std::string& p : opt.gen_paths) {
      gens.push_back(load_series(p));
      hull = Interval::hull(hull, gens.back().support());
    }
    emit_series(wandering_vector(gens, effective_depth(hull)), opt.out_path);
  } else if (name == "cyclic") {
    SliceLaurentSeries g = load_series(opt.in_a);
    int depth = effective_depth(g.support());
    double res = cyclicity_residual(g, depth);
    std::printf("residual %.17g\nverdict: %s %d\n", res, cyclicity_verdict(res), depth);
  } else if (name == "trace") {
    SliceLaurentSeries f = load_series(opt.in_a);
    BoundaryGrid grid = make_grid(opt.trace_nt > 0 ? opt.trace_nt : cfg.grid_t, 2);
    grid.sphere_nodes = {axis_from(opt.axis)};
    grid.sphere_weights = {1.0};
    grid.includes_reals = opt.with_reals;
    if (opt.out_path.empty()) {
      write_trace_csv(std::cout, f, grid);
    } else {
      std::ofstream os(opt.out_path);
      if (!os) fail(Err::Parse, "cannot open output file: " + opt.out_path);
      write_trace_csv(os, f, grid);
    }
  } else if (name == "verify") {
    return cmd_verify();
  }
  return 0;
}

void wire_subcommands(CLI::App& app) {
  auto* c_star = app.add_subcommand("star", "star-product of two series");
  c_star->add_option("a", opt.in_a, "left factor (series JSON)")->required();
  c_star->add_option("b", opt.in_b, "right factor (series JSON)")->required();
  c_star->add_option("-o,--output", opt.out_path, "output series JSON (stdout if omitted)");

  auto* c_conj = app.add_subcommand("conj", "coefficientwise conjugate");
  c_conj->add_option("input", opt.in_a)->required();
  c_conj->add_option("-o,--output", opt.out_path);

  auto* c_sym = app.add_subcommand("sym", "symmetrization f^c * f (real coefficients)");
  c_sym->add_option("input", opt.in_a)->required();
  c_sym->add_option("-o,--output", opt.out_path);

  auto* c_inv = app.add_subcommand("inv", "star-inverse on a truncated support window");
  c_inv->add_option("input", opt.in_a)->required();
  c_inv->add_option("--hi", opt.inv_hi, "highest output index")->capture_default_str();
  c_inv->add_option("-o,--output", opt.out_path);

  auto* c_eval = app.add_subcommand("eval", "evaluate a series at a boundary point");
  c_eval->add_option("input", opt.in_a)->required();
  c_eval->add_option("--t", opt.t_val, "angle t in (0, pi)")->capture_default_str();
  c_eval->add_option("--axis", opt.axis, "imaginary axis x y z")->expected(3);
  c_eval->add_option("--point", opt.point, "explicit quaternion w x y z (overrides --t/--axis)")
      ->expected(4);

  auto* c_build = app.add_subcommand("idem-build", "fit an idempotent from an interval spec");
  c_build->add_option("spec", opt.spec_path, "idempotent spec JSON")->required();
  c_build->add_option("-m,--modes", opt.fit_m, "fit modes (default: grid-t)");
  c_build->add_option("-o,--output", opt.out_path);

  auto* c_iverify = app.add_subcommand("idem-verify", "residual and classification report");
  c_iverify->add_option("input", opt.in_a)->required();

  auto* c_factor = app.add_subcommand("factor", "inner-outer factorization with residual report");
  c_factor->add_option("input", opt.in_a)->required();
  c_factor->add_option("-o,--report", opt.report_path, "report JSON (stdout if omitted)");
  c_factor->add_option("--inner", opt.inner_path, "write inner factor here");
  c_factor->add_option("--outer", opt.outer_path, "write outer factor here");

  auto* c_wander = app.add_subcommand("wander", "wandering vector of a shift-invariant span");
  c_wander->add_option("generators", opt.gen_paths, "generator series JSON files")->required();
  c_wander->add_option("-o,--output", opt.out_path);

  auto* c_cyclic = app.add_subcommand("cyclic", "cyclicity residual and verdict");
  c_cyclic->add_option("input", opt.in_a)->required();

  auto* c_trace = app.add_subcommand("trace", "CSV of boundary values along one slice");
  c_trace->add_option("input", opt.in_a)->required();
  c_trace->add_option("--axis", opt.axis, "imaginary axis x y z")->expected(3);
  c_trace->add_option("--nt", opt.trace_nt, "t samples (default: grid-t)");
  c_trace->add_flag("--with-reals", opt.with_reals, "include rows for q = +1 and q = -1");
  c_trace->add_option("-o,--output", opt.out_path, "CSV path (stdout if omitted)");

  auto* c_verify = app.add_subcommand("verify", "run numbered verification suites");
  c_verify->add_option("suite", opt.suite,
                       "algebra | adjoint | isometry | idempotent | beurling | factorization | "
                       "all | a criterion number 1-11");
}

}  // namespace

int main(int argc, char** argv) {
  Config& cfg = config();
  load_env(cfg);

  CLI::App app{"slicelab: star-products, idempotents, multiplier operators, and inner-outer "
               "factorization for quaternionic slice L^2 functions"};
  app.require_subcommand(1);
  app.add_option("--max-degree", cfg.max_degree, "support cap for series indices")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "residual tolerance")->capture_default_str();
  app.add_option("--grid-t", cfg.grid_t, "boundary nodes in t")->capture_default_str();
  app.add_option("--grid-sphere", cfg.grid_sphere, "direction nodes on the imaginary sphere")
      ->capture_default_str();
  app.add_option("--depth", cfg.depth, "shift-span depth (0 = auto)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();

  wire_subcommands(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
    return run(app);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Err::SupportOverflow: return 3;
      case Err::FactorizationResidual: return 4;
      case Err::DoublyInvariant: return 5;
      default: return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
