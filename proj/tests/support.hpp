#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "ebc/geometry.hpp"

namespace testing {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline ebc::TorusSpec square_torus(int band) { return {kTwoPi, kTwoPi, band, band}; }

/// Random real band-limited surface function, coefficients in [-1, 1]^2.
inline ebc::SurfaceFunction random_surface(const ebc::TorusSpec& torus, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ebc::SurfaceFunction g{ebc::ModeSet(torus)};
  for (int m = 0; m <= torus.m_max; ++m)
    for (int n = -torus.n_max; n <= torus.n_max; ++n) {
      if (m == 0 && n < 0) continue;
      g.set_real_pair(m, n, {u(rng), u(rng)});
    }
  return g;
}

inline double max_coeff_gap(const ebc::SurfaceFunction& a, const ebc::SurfaceFunction& b) {
  double w = 0.0;
  for (std::size_t q = 0; q < a.size(); ++q) w = std::max(w, std::abs(a[q] - b[q]));
  return w;
}

} // namespace testing
