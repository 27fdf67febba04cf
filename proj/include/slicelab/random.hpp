#pragma once

// Seedable randomness for property suites and fixtures.  All draws go through
// one PRNG so a single seed reproduces an entire run.

#include <cstdint>
#include <random>

#include "slicelab/quaternion.hpp"

namespace slicelab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  double gaussian() { return normal_(g_); }
  double uniform(double a, double b) { return a + (b - a) * real_(g_); }
  int uniform_int(int a, int b) { return std::uniform_int_distribution<int>(a, b)(g_); }

  Quaternion quaternion(double scale = 1.0) {
    return {scale * gaussian(), scale * gaussian(), scale * gaussian(), scale * gaussian()};
  }

  Quaternion unit_quaternion() {
    for (;;) {
      Quaternion q = quaternion();
      double n = q.norm();
      if (n > 1e-6) return (1.0 / n) * q;
    }
  }

  // Uniform on S: a normalized 3-vector of independent standard Gaussians.
  UnitImaginary unit_imaginary() {
    for (;;) {
      double x = gaussian(), y = gaussian(), z = gaussian();
      if (x * x + y * y + z * z > 1e-12) return {x, y, z};
    }
  }

 private:
  std::mt19937_64 g_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> real_{0.0, 1.0};
};

}  // namespace slicelab
