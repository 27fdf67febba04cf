#pragma once

#include <cstdint>

#include "slicelab/interval.hpp"

namespace slicelab {

// Runtime knobs shared by the library and the CLI.  Defaults are pinned here;
// the CLI overrides them from SLICELAB_* environment variables first and then
// from command-line flags (flags win).
struct Config {
  int max_degree = 256;     // per-side cap on series support indices
  double tol = 1e-8;        // default residual tolerance for verifications
  int grid_t = 128;         // boundary grid: nodes on t in (0, pi)
  int grid_sphere = 256;    // boundary grid: nodes on the sphere S
  int depth = 0;            // Krylov/shift-span depth; 0 means automatic
  std::uint64_t seed = 1;   // PRNG seed for randomized suites

  void validate() const;    // throws Err::Usage on nonsense values
};

// Mutable process-wide configuration (the series layer consults max_degree).
Config& config();

// Applies SLICELAB_MAX_DEGREE, SLICELAB_TOL, SLICELAB_GRID_T,
// SLICELAB_GRID_SPHERE, SLICELAB_DEPTH, SLICELAB_SEED if present.
void load_env(Config& cfg);

// Automatic span depth: four times the support width, capped so the shifted
// span stays inside [0, max_degree].
int auto_depth(const Config& cfg, const Interval& support);

}  // namespace slicelab
