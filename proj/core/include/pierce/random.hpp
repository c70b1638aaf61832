#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pierce/kkm.hpp"

namespace pierce {

using Rng = std::mt19937_64;

// Portable uniform double in [0, 1); std::uniform_real_distribution is not
// reproducible across standard libraries.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform01(rng) * static_cast<double>(hi - lo + 1));
}

/// Uniform point of the simplex (flat Dirichlet).
inline SimplexPoint random_simplex_point(int n, Rng& rng) {
  std::vector<double> c(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (double& v : c) {
    v = -std::log(1.0 - uniform01(rng));
    sum += v;
  }
  for (double& v : c) v /= sum;
  return SimplexPoint::project(c);
}

}  // namespace pierce
