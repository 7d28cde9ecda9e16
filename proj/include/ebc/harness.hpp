#pragma once

// delta sweeps: full two-domain solves against the delta-independent
// effective solve, with errors measured on the shared bulk grid.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ebc/effective_solver.hpp"
#include "ebc/error.hpp"
#include "ebc/fit.hpp"
#include "ebc/full_solver.hpp"
#include "ebc/geometry.hpp"
#include "ebc/scaling.hpp"

namespace ebc {

struct ErrorMetric {
  std::vector<double> per_stamp;
  double sup = 0.0;
  double final = 0.0;
};

namespace detail {
inline void check_comparable(const Trajectory& full, const Trajectory& eff) {
  const auto& a = full.layout->modes.torus();
  const auto& b = eff.layout->modes.torus();
  if (a.l1 != b.l1 || a.l2 != b.l2 || a.m_max != b.m_max || a.n_max != b.n_max)
    throw ConfigError("trajectories live on different tori or mode sets");
  if (!full.layout->grid.same_bulk(eff.layout->grid))
    throw ConfigError("trajectories use different bulk radial grids");
  if (full.stamps() != eff.stamps()) throw ConfigError("trajectories have different stamp counts");
  for (std::size_t j = 0; j < full.stamps(); ++j)
    if (full.time(j) != eff.time(j)) throw ConfigError("trajectories have different time stamps");
}
} // namespace detail

/// L2(bulk) distance per stamp: Parseval over modes, trapezoid over bulk nodes.
inline ErrorMetric error_metric(const Trajectory& full, const Trajectory& eff) {
  detail::check_comparable(full, eff);
  const auto w = full.layout->grid.bulk_weights();
  const std::size_t nm = full.layout->modes.size();
  ErrorMetric out;
  for (std::size_t j = 0; j < full.stamps(); ++j) {
    const auto& u = full.fields[j];
    const auto& v = eff.fields[j];
    double s = 0.0;
    for (std::size_t q = 0; q < nm; ++q)
      for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * std::norm(u.at(q, i) - v.at(q, i));
    out.per_stamp.push_back(std::sqrt(s));
  }
  for (double e : out.per_stamp) out.sup = std::max(out.sup, e);
  out.final = out.per_stamp.back();
  return out;
}

/// The same distance computed in physical space: synthesize both fields on an
/// n1 x n2 surface grid at every bulk node and integrate the squared gap.
inline std::vector<double> error_metric_gridspace(const Trajectory& full, const Trajectory& eff, int n1, int n2) {
  detail::check_comparable(full, eff);
  const auto& modes = full.layout->modes;
  check_surface_grid(modes.torus(), n1, n2);
  const auto w = full.layout->grid.bulk_weights();
  std::vector<double> out;
  for (std::size_t j = 0; j < full.stamps(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      SurfaceFunction g{modes};
      for (std::size_t q = 0; q < modes.size(); ++q) g[q] = full.fields[j].at(q, i) - eff.fields[j].at(q, i);
      const auto samples = inverse_transform(g, n1, n2);
      double row = 0.0;
      for (double x : samples.values) row += x * x;
      s += w[i] * row * samples.cell_area();
    }
    out.push_back(std::sqrt(s));
  }
  return out;
}

struct ExperimentConfig {
  TorusSpec torus;
  double depth = 1.0;
  int n_bulk = 129;  // nodes
  int n_layer = 17;  // nodes
  OuterBc outer = OuterBc::Dirichlet;
  CoatingScaling scaling = CoatingScaling::type_one({1.0, 1.0}, {1.0, 0.0});
  double k = 1.0;
  ModeData source;
  ModeData initial;
  double T = 0.5;
  double dt = 0.5 / 400.0;
  Scheme scheme = Scheme::ImplicitEuler;
  std::vector<double> deltas;
  int threads = 1;

  void validate() const {
    torus.validate();
    scaling.validate();
    if (deltas.empty()) throw ConfigError("delta list must be nonempty");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      if (!(deltas[i] > 0.0) || !std::isfinite(deltas[i])) throw ConfigError("deltas must be positive");
      if (i > 0 && !(deltas[i] < deltas[i - 1])) throw ConfigError("deltas must be strictly decreasing");
    }
    if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("bulk conductivity must be positive and finite");
    if (n_layer < 2) throw ConfigError("layer needs at least 2 nodes");
  }

  EffectiveProblemSpec effective_spec(const EbcKind& ebc) const {
    EffectiveProblemSpec s;
    s.torus = torus;
    s.grid = RadialGrid::bulk_only(depth, n_bulk);
    s.k = k;
    s.ebc = ebc;
    s.source = source;
    s.initial = initial;
    s.T = T;
    s.dt = dt;
    s.scheme = scheme;
    s.threads = threads;
    return s;
  }

  FullProblemSpec full_spec(double delta) const {
    FullProblemSpec s;
    s.torus = torus;
    s.grid = RadialGrid::two_domain(depth, delta, n_bulk, n_layer);
    s.k = k;
    s.sigma = scaling.sigma(delta);
    s.mu1 = scaling.mu1(delta);
    s.mu2 = scaling.mu2(delta);
    s.outer = outer;
    s.source = source;
    s.initial = initial;
    s.T = T;
    s.dt = dt;
    s.scheme = scheme;
    s.threads = threads;
    return s;
  }
};

struct ConvergenceRow {
  double delta, sigma, mu1, mu2, h, error_sup, error_final;
};

struct ConvergenceReport {
  RegimeReport regime;
  std::vector<ConvergenceRow> rows;
  double slope = 0.0; // log sup-error vs log delta, information only
  bool monotone = true; // sup errors strictly decrease as delta decreases
  std::vector<std::string> flags;

  std::vector<double> sup_errors() const {
    std::vector<double> e;
    for (const auto& r : rows) e.push_back(r.error_sup);
    return e;
  }
};

inline ConvergenceReport run_convergence(const ExperimentConfig& cfg) {
  cfg.validate();
  ConvergenceReport rep;
  rep.regime = classify(cfg.outer, cfg.scaling);
  const Trajectory eff = solve_effective(cfg.effective_spec(rep.regime.chosen));

  std::vector<double> ds, es;
  for (double delta : cfg.deltas) {
    const auto spec = cfg.full_spec(delta);
    Trajectory full;
    try {
      full = solve_full(spec);
    } catch (const SolverError& e) {
      throw SolverError("full solve failed at delta = " + detail::fmt_num(delta) + ": " + e.what());
    }
    const auto err = error_metric(full, eff);
    rep.rows.push_back({delta, spec.sigma, spec.mu1, spec.mu2, delta * std::sqrt(spec.mu1 / spec.sigma), err.sup,
                        err.final});
    ds.push_back(delta);
    es.push_back(err.sup);
  }
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (!(rep.rows[i].error_sup < rep.rows[i - 1].error_sup)) {
      rep.monotone = false;
      rep.flags.push_back("error does not decrease from delta = " + detail::fmt_num(rep.rows[i - 1].delta) +
                          " to delta = " + detail::fmt_num(rep.rows[i].delta));
    }
  rep.slope = loglog_slope(ds, es);
  return rep;
}

} // namespace ebc
