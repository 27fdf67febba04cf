#include "slicelab/config.hpp"

#include <cstdlib>
#include <string>

#include "slicelab/error.hpp"

namespace slicelab {

void Config::validate() const {
  if (max_degree < 1) fail(Err::Usage, "max_degree must be positive");
  if (!(tol > 0.0 && tol < 1e-2)) fail(Err::Usage, "tol must lie in (0, 1e-2)");
  if (grid_t < 2 || grid_sphere < 2) fail(Err::Usage, "grid sizes must be at least 2");
  if (depth < 0) fail(Err::Usage, "depth must be nonnegative");
}

Config& config() {
  static Config cfg;
  return cfg;
}

namespace {

bool env_int(const char* name, long long& out) {
  const char* v = std::getenv(name);
  if (!v || !*v) return false;
  try {
    out = std::stoll(v);
  } catch (const std::exception&) {
    fail(Err::Usage, std::string(name) + ": not an integer: " + v);
  }
  return true;
}

bool env_double(const char* name, double& out) {
  const char* v = std::getenv(name);
  if (!v || !*v) return false;
  try {
    out = std::stod(v);
  } catch (const std::exception&) {
    fail(Err::Usage, std::string(name) + ": not a number: " + v);
  }
  return true;
}

}  // namespace

void load_env(Config& cfg) {
  long long n;
  double d;
  if (env_int("SLICELAB_MAX_DEGREE", n)) cfg.max_degree = static_cast<int>(n);
  if (env_double("SLICELAB_TOL", d)) cfg.tol = d;
  if (env_int("SLICELAB_GRID_T", n)) cfg.grid_t = static_cast<int>(n);
  if (env_int("SLICELAB_GRID_SPHERE", n)) cfg.grid_sphere = static_cast<int>(n);
  if (env_int("SLICELAB_DEPTH", n)) cfg.depth = static_cast<int>(n);
  if (env_int("SLICELAB_SEED", n)) cfg.seed = static_cast<std::uint64_t>(n);
}

int auto_depth(const Config& cfg, const Interval& support) {
  int width = support.length();
  int depth = 4 * (width > 0 ? width : 1);
  int cap = cfg.max_degree - (support.empty() ? 0 : support.hi) - 1;
  if (depth > cap) depth = cap;
  if (depth < 1) depth = 1;
  return depth;
}

}  // namespace slicelab
