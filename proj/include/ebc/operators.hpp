#pragma once

// Dirichlet-to-Neumann style boundary operators as Fourier multipliers.
//
// Every operator maps boundary data g to the flux w'(0) of the per-mode cell
// problem  w'' - lambda_eff w = 0  on (0, H),  w(0) = 1, capped either by
// w(H) = 0 (variant D) or w'(H) = 0 (variant N). The families differ only in
// which effective eigenvalue a mode (m, n) sees:
//   J       k1^2 + k2^2
//   K(c)    k1^2 + c k2^2
//   Lambda  k1^2                 (s2 enters only as a parameter)
//   D       k2^2, on the m = 0 sector only

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ebc/error.hpp"
#include "ebc/fit.hpp"
#include "ebc/geometry.hpp"
#include "ebc/scaling.hpp"

namespace ebc {

/// Per-mode symbol of the capped cell problem. Always <= 0.
///   D: -sqrt(l) coth(sqrt(l) H),  l = 0 -> -1/H
///   N: -sqrt(l) tanh(sqrt(l) H),  l = 0 -> 0
/// H = inf gives -sqrt(l) for both.
inline double dtn_symbol(Variant variant, double lambda_eff, double H) {
  if (!(lambda_eff >= 0.0)) throw ConfigError("effective eigenvalue must be nonnegative");
  if (!(H > 0.0)) throw ConfigError("cap height must lie in (0, inf]");
  const double root = std::sqrt(lambda_eff);
  if (std::isinf(H)) return -root;
  if (lambda_eff == 0.0) return variant == Variant::D ? -1.0 / H : 0.0;
  const double x = root * H;
  return variant == Variant::D ? -root / std::tanh(x) : -root * std::tanh(x);
}

enum class OperatorFamily { J, K, Lambda, D };

inline const char* family_name(OperatorFamily f) {
  switch (f) {
  case OperatorFamily::J: return "J";
  case OperatorFamily::K: return "K";
  case OperatorFamily::Lambda: return "Lambda";
  default: return "D";
  }
}

struct OperatorSpec {
  OperatorFamily family = OperatorFamily::J;
  Variant variant = Variant::D;
  double H = kInfinity;
  double c = 1.0;     // K only
  double gamma = 1.0; // overall multiplier

  void validate() const {
    if (!(H > 0.0) || std::isnan(H)) throw ConfigError("cap height must lie in (0, inf]");
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ConfigError("operator multiplier must be positive");
    if (family == OperatorFamily::K && !(c >= 0.0 && c <= 1.0))
      throw ConfigError("K operator needs c in [0,1]");
  }

  double lambda_eff(const ModeIndex& md) const {
    switch (family) {
    case OperatorFamily::J: return md.lambda();
    case OperatorFamily::K: return md.lambda_aniso(c);
    case OperatorFamily::Lambda: return md.k1 * md.k1;
    default: return md.k2 * md.k2;
    }
  }
  /// gamma times the cell-problem symbol for this mode.
  double symbol(const ModeIndex& md) const { return gamma * dtn_symbol(variant, lambda_eff(md), H); }
};

/// Flux op[g]. Family D rejects data with content on modes m != 0.
inline SurfaceFunction apply_operator(const OperatorSpec& spec, const SurfaceFunction& g) {
  spec.validate();
  if (spec.family == OperatorFamily::D) {
    const double tol = 1e-12 * std::max(1.0, g.l2_norm());
    for (std::size_t q = 0; q < g.size(); ++q)
      if (g.modes()[q].m != 0 && std::abs(g[q]) > tol)
        throw ConfigError("D operator acts on the m = 0 sector only; input has m != 0 content");
  }
  SurfaceFunction out{g.modes()};
  for (std::size_t q = 0; q < g.size(); ++q) {
    const auto& md = g.modes()[q];
    if (spec.family == OperatorFamily::D && md.m != 0) continue;
    out[q] = spec.symbol(md) * g[q];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite-difference cell-problem oracle

struct OracleFlux {
  double flux;       // Richardson-extrapolated from grids N and N/2
  double raw;        // second-order estimate on grid N
  double raw_coarse; // second-order estimate on grid N/2
};

namespace detail {

/// Solves w'' = lambda w on N uniform intervals of (0, H) with the cap at R = H,
/// w(0) = 1, and returns the one-sided second-order flux (-3w0 + 4w1 - w2)/(2d).
/// The discrete system is swept from the cap toward R = 0 in difference form
/// D_j = w_{j-1} - w_j, which is exact for the three-point stencil and keeps
/// w1 - w0 free of cancellation.
inline double fd_cell_flux(double lambda, double H, Variant variant, int intervals) {
  const double d = H / intervals;
  const double q = lambda * d * d;
  double w = variant == Variant::D ? 0.0 : 1.0; // w_N
  // D_N = w_{N-1} - w_N: D cap pins w_N = 0 and scales w_{N-1} = 1; the N cap
  // uses the mirrored ghost w_{N+1} = w_{N-1}.
  double diff = variant == Variant::D ? 1.0 : 0.5 * q * w;
  double d1 = 0.0, d2 = 0.0;
  for (int j = intervals; j >= 1; --j) {
    if (j < intervals) diff += q * w; // D_j = D_{j+1} + q w_j
    if (j == 2) d2 = diff;
    if (j == 1) d1 = diff;
    w += diff; // w_{j-1}
    if (std::abs(w) > 1e150) {
      w *= 1e-150;
      diff *= 1e-150;
      d1 *= 1e-150;
      d2 *= 1e-150;
    }
  }
  if (!(w > 0.0) || !std::isfinite(w)) throw SolverError("cell problem sweep degenerated");
  return (-3.0 * d1 + d2) / (2.0 * d * w);
}

} // namespace detail

/// Second-order FD solve of the cell problem, flux at R = 0.
inline OracleFlux cell_problem_oracle(double lambda_eff, double H, Variant variant, int grid_points) {
  if (!(lambda_eff >= 0.0)) throw ConfigError("effective eigenvalue must be nonnegative");
  if (!(H > 0.0) || std::isinf(H)) throw ConfigError("oracle needs a finite positive cap height");
  if (grid_points < 16) throw ConfigError("oracle grid needs at least 16 intervals");
  const int coarse = grid_points / 2;
  const double fine_flux = detail::fd_cell_flux(lambda_eff, H, variant, grid_points);
  const double coarse_flux = detail::fd_cell_flux(lambda_eff, H, variant, coarse);
  const double ratio = static_cast<double>(grid_points) / coarse;
  const double r2 = ratio * ratio;
  return {(r2 * fine_flux - coarse_flux) / (r2 - 1.0), fine_flux, coarse_flux};
}

// ---------------------------------------------------------------------------
// Asymptotic checks

struct SmallHReport {
  double h;
  double dirichlet_deviation; // max |J_D^h[g] + g/h|
  double neumann_deviation;   // max |J_N^h[g] - h Lap g|
  double dirichlet_bound;     // h ||g||_C2
  double neumann_leading;     // h^3 max|Lap^2 g| / 3, the leading term of the N deviation
  double c2_norm;
};

/// Thin-cap behaviour of J_D^h and J_N^h measured on an n1 x n2 surface grid.
inline SmallHReport small_h_report(const SurfaceFunction& g, double h, int n1, int n2) {
  if (!(h > 0.0) || std::isinf(h)) throw ConfigError("small_h_report needs finite h > 0");
  check_surface_grid(g.torus(), n1, n2);
  const OperatorSpec jd{OperatorFamily::J, Variant::D, h};
  const OperatorSpec jn{OperatorFamily::J, Variant::N, h};

  auto dev_d = apply_operator(jd, g);
  for (std::size_t q = 0; q < g.size(); ++q) dev_d[q] += g[q] / h;
  auto dev_n = apply_operator(jn, g);
  const auto lap = laplace_beltrami(g);
  for (std::size_t q = 0; q < g.size(); ++q) dev_n[q] -= h * lap[q];

  SmallHReport rep{};
  rep.h = h;
  rep.dirichlet_deviation = inverse_transform(dev_d, n1, n2).max_abs();
  rep.neumann_deviation = inverse_transform(dev_n, n1, n2).max_abs();
  rep.c2_norm = c2_norm(g, n1, n2);
  rep.dirichlet_bound = h * rep.c2_norm;
  rep.neumann_leading = h * h * h * inverse_transform(laplace_beltrami(lap), n1, n2).max_abs() / 3.0;
  return rep;
}

struct UniformConvergenceReport {
  std::vector<double> h;
  std::vector<double> deviation; // max |op^h[g] - op^H[g]| on the grid
  double slope;                  // log-log slope vs |H - h|; NaN for H = inf
};

/// How op^h[g] approaches op^H[g] along a sequence h -> H. `family`, `variant`
/// and `c` are taken from `base`; its H is replaced by each h in turn.
inline UniformConvergenceReport uniform_convergence_report(const SurfaceFunction& g, OperatorSpec base,
                                                           std::span<const double> hs, double H, int n1,
                                                           int n2) {
  check_surface_grid(g.torus(), n1, n2);
  base.H = H;
  const auto limit = apply_operator(base, g);
  UniformConvergenceReport rep{};
  std::vector<double> gaps;
  for (double h : hs) {
    OperatorSpec s = base;
    s.H = h;
    auto diff = apply_operator(s, g);
    for (std::size_t q = 0; q < g.size(); ++q) diff[q] -= limit[q];
    rep.h.push_back(h);
    rep.deviation.push_back(inverse_transform(diff, n1, n2).max_abs());
    gaps.push_back(std::abs(H - h));
  }
  rep.slope = std::isinf(H) ? std::numeric_limits<double>::quiet_NaN() : loglog_slope(gaps, rep.deviation);
  return rep;
}

} // namespace ebc
