#pragma once

// Two-domain problem: isotropic bulk (-L, 0) with conductivity k and an
// anisotropic coating (0, delta) with normal conductivity sigma and tangential
// conductivities mu1, mu2. Radial conservative finite volumes per Fourier mode;
// the interface node's control volume straddles both media, so continuity of
// u and of normal flux (k u_r = sigma u_r) hold by construction.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ebc/data.hpp"
#include "ebc/error.hpp"
#include "ebc/geometry.hpp"
#include "ebc/scaling.hpp"
#include "ebc/stepping.hpp"

namespace ebc {

struct FullProblemSpec {
  TorusSpec torus;
  RadialGrid grid = RadialGrid::two_domain(1.0, 0.1, 129, 17);
  double k = 1.0;
  double sigma = 1.0;
  double mu1 = 1.0;
  double mu2 = 1.0;
  OuterBc outer = OuterBc::Dirichlet;
  ModeData source;
  ModeData initial;
  double T = 1.0;
  double dt = 1.0 / 400.0;
  Scheme scheme = Scheme::ImplicitEuler;
  int stamp_stride = 1;
  int threads = 1;

  void validate() const {
    torus.validate();
    if (!grid.has_layer()) throw ConfigError("full problem needs a grid with a coating layer");
    for (double c : {k, sigma, mu1, mu2})
      if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("conductivities must be positive and finite");
    (void)make_time_grid(T, dt);
    if (stamp_stride < 1) throw ConfigError("stamp stride must be >= 1");
  }

  MarchSettings march_settings() const { return {T, dt, scheme, stamp_stride, threads}; }
};

namespace detail {

/// Adds the bulk rows [0, interface] of mode md: zero flux at r = -L,
/// conductance k/hb per cell, reaction k lambda times the control volume.
/// The interface node receives only its bulk half.
inline void add_bulk_rows(const ModeIndex& md, const RadialGrid& grid, double k, ModeSystem& sys) {
  const std::size_t ib = grid.interface_index();
  const double hb = grid.bulk_spacing();
  const double cb = k / hb;
  for (std::size_t i = 0; i < ib; ++i) {
    sys.flux.diag[i] += cb;
    sys.flux.diag[i + 1] += cb;
    sys.flux.upper[i] -= cb;
    sys.flux.lower[i + 1] -= cb;
  }
  const double tau = k * md.lambda();
  for (std::size_t i = 0; i <= ib; ++i) {
    const double vol = (i == 0 || i == ib) ? 0.5 * hb : hb;
    sys.mass[i] += vol;
    sys.reaction[i] += tau * vol;
  }
}

inline ModeSystem empty_system(std::size_t n) {
  ModeSystem s;
  s.flux = Tridiagonal(n);
  s.reaction.assign(n, 0.0);
  s.mass.assign(n, 0.0);
  return s;
}

} // namespace detail

/// Semi-discrete operator of one mode: M u' = -(flux + reaction) u + M f.
inline ModeSystem assemble_mode_system(const ModeIndex& md, const FullProblemSpec& spec) {
  const auto& grid = spec.grid;
  const std::size_t n = grid.size();
  const std::size_t ib = grid.interface_index();
  ModeSystem sys = detail::empty_system(n);
  detail::add_bulk_rows(md, grid, spec.k, sys);

  const double hl = grid.layer_spacing();
  const double cl = spec.sigma / hl;
  for (std::size_t i = ib; i + 1 < n; ++i) {
    sys.flux.diag[i] += cl;
    sys.flux.diag[i + 1] += cl;
    sys.flux.upper[i] -= cl;
    sys.flux.lower[i + 1] -= cl;
  }
  const double tau = spec.mu1 * md.k1 * md.k1 + spec.mu2 * md.k2 * md.k2;
  for (std::size_t i = ib; i < n; ++i) {
    const double vol = (i == ib || i == n - 1) ? 0.5 * hl : hl;
    sys.mass[i] += vol;
    sys.reaction[i] += tau * vol;
  }
  if (spec.outer == OuterBc::Dirichlet) sys.pinned = n - 1;
  return sys;
}

inline Trajectory solve_full(const FullProblemSpec& spec) {
  spec.validate();
  const auto layout = make_layout(spec.torus, spec.grid);
  return march(
      layout, [&](std::size_t q) { return assemble_mode_system(layout->modes[q], spec); }, spec.source,
      spec.initial, spec.march_settings());
}

// ---------------------------------------------------------------------------
// Diagnostics

struct EnergyReport {
  std::vector<double> time;
  std::vector<double> l2_sq;            // int_Omega u^2
  std::vector<double> dirichlet_energy; // int_Omega grad u . A grad u
  std::vector<double> total_heat;       // int_Omega u
  double lemma_lhs = 0.0; // max_t ||u||^2 + int_0^T E(u) dt
  double lemma_rhs = 0.0; // ||u0||^2 + int_0^T ||f||^2 dt

  bool l2_nonincreasing(double rel_tol = 1e-13) const {
    for (std::size_t j = 1; j < l2_sq.size(); ++j)
      if (l2_sq[j] > l2_sq[j - 1] * (1.0 + rel_tol)) return false;
    return true;
  }
  /// Largest |H_j - H_{j-1}| / max(|H_0|, tiny).
  double heat_drift() const {
    double worst = 0.0;
    const double scale = std::max(std::abs(total_heat.front()), 1e-300);
    for (std::size_t j = 1; j < total_heat.size(); ++j)
      worst = std::max(worst, std::abs(total_heat[j] - total_heat[j - 1]) / scale);
    return worst;
  }
};

/// Discrete energy quantities at every stamp. Time integrals use the
/// right-endpoint rule between consecutive stamps.
inline EnergyReport energy_report(const Trajectory& traj, const FullProblemSpec& spec) {
  const auto& layout = *traj.layout;
  const auto& modes = layout.modes;
  const auto w = layout.grid.weights();
  const std::size_t mean = modes.mean_index();
  const double root_area = std::sqrt(spec.torus.area());

  std::vector<ModeSystem> systems;
  systems.reserve(modes.size());
  for (const auto& md : modes) systems.push_back(assemble_mode_system(md, spec));

  auto source_norm_sq = [&](double t) {
    const auto f = spec.source.project(traj.layout, t);
    double s = 0.0;
    for (std::size_t q = 0; q < modes.size(); ++q)
      for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * std::norm(f.at(q, i));
    return s;
  };

  EnergyReport rep;
  double max_l2 = 0.0, energy_integral = 0.0, source_integral = 0.0;
  for (std::size_t j = 0; j < traj.stamps(); ++j) {
    const auto& u = traj.fields[j];
    double l2 = 0.0, e = 0.0, heat = 0.0;
    for (std::size_t q = 0; q < modes.size(); ++q) {
      const auto uq = u.mode(q);
      for (std::size_t i = 0; i < w.size(); ++i) l2 += w[i] * std::norm(uq[i]);
      e += systems[q].energy(uq);
    }
    for (std::size_t i = 0; i < w.size(); ++i) heat += w[i] * u.at(mean, i).real();
    heat *= root_area;
    for (double v : {l2, e, heat})
      if (!std::isfinite(v)) throw SolverError("non-finite energy at stamp " + std::to_string(j));
    rep.time.push_back(u.time());
    rep.l2_sq.push_back(l2);
    rep.dirichlet_energy.push_back(e);
    rep.total_heat.push_back(heat);
    max_l2 = std::max(max_l2, l2);
    if (j > 0) {
      const double span = u.time() - traj.fields[j - 1].time();
      energy_integral += span * e;
      source_integral += span * source_norm_sq(u.time());
    }
  }
  rep.lemma_lhs = max_l2 + energy_integral;
  rep.lemma_rhs = rep.l2_sq.front() + source_integral;
  return rep;
}

struct FluxJumpReport {
  double max_abs = 0.0; // max |F_bulk - F_layer|
  double max_rel = 0.0; // relative to the largest term of the interface balance
};

/// Mismatch between the bulk-side estimate of k u_r(0) and the coating-side
/// estimate of sigma u_r(0), each read off its half control volume. Needs
/// every step stored.
inline FluxJumpReport interface_flux_jump(const Trajectory& traj, const FullProblemSpec& spec) {
  if (!traj.dense()) throw ConfigError("interface flux check needs every step stored (stamp_stride = 1)");
  const auto& layout = *traj.layout;
  const auto& grid = layout.grid;
  const std::size_t ib = grid.interface_index();
  const double hb = grid.bulk_spacing(), hl = grid.layer_spacing();
  const double cb = spec.k / hb, cl = spec.sigma / hl;
  const double vb = 0.5 * hb, vl = 0.5 * hl;
  const double theta = theta_of(spec.scheme);
  const double dt = traj.dt;

  FluxJumpReport rep;
  std::vector<cplx> f_new(grid.size()), f_old(grid.size());
  for (std::size_t q = 0; q < layout.modes.size(); ++q) {
    const auto& md = layout.modes[q];
    if (!spec.source.touches(md) && !spec.initial.touches(md)) continue;
    const double tb = spec.k * md.lambda();
    const double tl = spec.mu1 * md.k1 * md.k1 + spec.mu2 * md.k2 * md.k2;
    for (std::size_t j = 1; j < traj.stamps(); ++j) {
      const auto& u0 = traj.fields[j - 1];
      const auto& u1 = traj.fields[j];
      auto mix = [&](std::size_t i) { return theta * u1.at(q, i) + (1.0 - theta) * u0.at(q, i); };
      spec.source.fill_mode(md, grid, u1.time(), f_new);
      spec.source.fill_mode(md, grid, u0.time(), f_old);
      const cplx f = theta * f_new[ib] + (1.0 - theta) * f_old[ib];
      const cplx ut = (u1.at(q, ib) - u0.at(q, ib)) / dt;
      const cplx ui = mix(ib);
      const cplx grad_b = cb * (ui - mix(ib - 1));
      const cplx grad_l = cl * (mix(ib + 1) - ui);
      const cplx fb = grad_b + vb * (ut + tb * ui - f);
      const cplx fl = grad_l - vl * (ut + tl * ui - f);
      const double jump = std::abs(fb - fl);
      const double scale = std::max({std::abs(grad_b), std::abs(grad_l), vb * std::abs(ut), vl * std::abs(ut),
                                     (vb * tb + vl * tl) * std::abs(ui), 1e-300});
      rep.max_abs = std::max(rep.max_abs, jump);
      rep.max_rel = std::max(rep.max_rel, jump / scale);
    }
  }
  return rep;
}

} // namespace ebc
