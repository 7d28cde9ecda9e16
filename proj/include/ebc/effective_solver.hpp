#pragma once

// Effective model: the bulk alone, closed at r = 0 by an effective boundary
// condition. Every EbcKind reduces per mode to homogeneous Dirichlet,
// homogeneous Neumann or a Robin relation k v_r(0) = b v(0) with b <= 0.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ebc/data.hpp"
#include "ebc/error.hpp"
#include "ebc/full_solver.hpp"
#include "ebc/geometry.hpp"
#include "ebc/operators.hpp"
#include "ebc/scaling.hpp"
#include "ebc/stepping.hpp"

namespace ebc {

struct BoundaryClosure {
  enum class Kind { Dirichlet, Neumann, Robin };
  Kind kind = Kind::Neumann;
  double b = 0.0; // Robin only

  static BoundaryClosure dirichlet() { return {Kind::Dirichlet, 0.0}; }
  static BoundaryClosure neumann() { return {Kind::Neumann, 0.0}; }
  static BoundaryClosure robin(double b) {
    if (!(b <= 0.0) || !std::isfinite(b)) throw ConfigError("Robin closure coefficient must be finite and <= 0");
    return {Kind::Robin, b};
  }
  bool operator==(const BoundaryClosure&) const = default;
};

/// Per-mode closure of an EBC. Nonlocal conditions go through the operator
/// symbols in operators.hpp; nothing here restates a DtN formula.
inline BoundaryClosure closure_for(const EbcKind& ebc, const ModeIndex& md) {
  using C = BoundaryClosure;
  auto dtn = [&](OperatorFamily fam, Variant var, double gamma, double H, double c = 1.0) {
    return C::robin(OperatorSpec{fam, var, H, c, gamma}.symbol(md));
  };
  return std::visit(
      overloaded{
          [](const DirichletZero&) { return C::dirichlet(); },
          [](const NeumannZero&) { return C::neumann(); },
          [](const Robin& r) { return C::robin(-r.alpha); },
          [&](const DtnJ& d) { return dtn(OperatorFamily::J, d.variant, d.gamma, d.H); },
          [&](const DtnK& d) { return dtn(OperatorFamily::K, d.variant, d.gamma1, d.H, d.c); },
          [&](const DtnLambda& d) { return dtn(OperatorFamily::Lambda, d.variant, d.gamma1, d.H); },
          [&](const SurfaceDiffusion& s) { return C::robin(-s.beta * md.lambda_aniso(s.c)); },
          [&](const ConstantTrace& t) {
            if (!md.is_mean()) return C::dirichlet();
            if (const auto* r = std::get_if<RobinIntegral>(&t.rule)) return C::robin(-r->alpha);
            return C::neumann();
          },
          [&](const ConstantInS1& t) {
            if (md.m != 0) return C::dirichlet();
            return std::visit(
                overloaded{
                    [](const ZeroFlux&) { return C::neumann(); },
                    [](const RobinIntegral& r) { return C::robin(-r.alpha); },
                    [&](const DtnD& d) { return dtn(OperatorFamily::D, d.variant, d.gamma2, d.H); },
                    [&](const SurfaceDiffusionS2& s) { return C::robin(-s.beta2 * md.k2 * md.k2); },
                },
                t.rule);
          },
      },
      ebc);
}

struct EffectiveProblemSpec {
  TorusSpec torus;
  RadialGrid grid = RadialGrid::bulk_only(1.0, 129);
  double k = 1.0;
  EbcKind ebc = NeumannZero{};
  ModeData source;
  ModeData initial;
  double T = 1.0;
  double dt = 1.0 / 400.0;
  Scheme scheme = Scheme::ImplicitEuler;
  int stamp_stride = 1;
  int threads = 1;

  void validate() const {
    torus.validate();
    if (grid.has_layer()) throw ConfigError("effective problem lives on the bulk grid only");
    if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("bulk conductivity must be positive and finite");
    ebc::validate(ebc);
    (void)make_time_grid(T, dt);
    if (stamp_stride < 1) throw ConfigError("stamp stride must be >= 1");
  }

  MarchSettings march_settings() const { return {T, dt, scheme, stamp_stride, threads}; }
};

/// Bulk rows plus the closure at the interface node. A Robin closure enters
/// the half-cell balance of that node as -b, so k v_r(0) = b v(0) exactly.
inline ModeSystem assemble_effective_system(const ModeIndex& md, const EffectiveProblemSpec& spec) {
  ModeSystem sys = detail::empty_system(spec.grid.size());
  detail::add_bulk_rows(md, spec.grid, spec.k, sys);
  const std::size_t ib = spec.grid.interface_index();
  const auto cl = closure_for(spec.ebc, md);
  if (cl.kind == BoundaryClosure::Kind::Dirichlet) sys.pinned = ib;
  else if (cl.kind == BoundaryClosure::Kind::Robin) sys.reaction[ib] -= cl.b;
  return sys;
}

inline Trajectory solve_effective(const EffectiveProblemSpec& spec) {
  spec.validate();
  const auto layout = make_layout(spec.torus, spec.grid);
  return march(
      layout, [&](std::size_t q) { return assemble_effective_system(layout->modes[q], spec); }, spec.source,
      spec.initial, spec.march_settings());
}

struct TraceReport {
  std::vector<double> time;
  std::vector<SurfaceFunction> traces;
  double constraint_violation = 0.0; // largest constrained trace coefficient after t = 0
  double flux_residual = 0.0;        // max |k v_r(0) - b v(0)| over Robin modes and steps
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Surface traces at every stamp and the checks the closure implies:
/// pinned trace modes stay at zero after the initial state, and Robin modes
/// satisfy the discrete flux identity when every step is stored.
inline TraceReport trace_report(const Trajectory& traj, const EffectiveProblemSpec& spec,
                                double constraint_tol = 1e-10, double residual_tol = 1e-9) {
  TraceReport rep;
  const auto& layout = *traj.layout;
  const auto& modes = layout.modes;
  const auto& grid = layout.grid;
  const std::size_t ib = grid.interface_index();
  for (const auto& f : traj.fields) {
    rep.time.push_back(f.time());
    rep.traces.push_back(trace_of(f));
  }

  const bool constrained = std::holds_alternative<ConstantTrace>(spec.ebc) ||
                           std::holds_alternative<ConstantInS1>(spec.ebc) ||
                           std::holds_alternative<DirichletZero>(spec.ebc);
  for (std::size_t j = 0; j < traj.stamps(); ++j) {
    if (traj.steps[j] == 0) continue;
    for (std::size_t q = 0; q < modes.size(); ++q)
      if (closure_for(spec.ebc, modes[q]).kind == BoundaryClosure::Kind::Dirichlet)
        rep.constraint_violation = std::max(rep.constraint_violation, std::abs(rep.traces[j][q]));
  }
  if (constrained && rep.constraint_violation > constraint_tol)
    rep.violations.push_back("constrained trace modes reach " + std::to_string(rep.constraint_violation));

  if (traj.dense()) {
    const double hb = grid.bulk_spacing();
    const double cb = spec.k / hb, vb = 0.5 * hb;
    const double theta = theta_of(spec.scheme);
    std::vector<cplx> f_new(grid.size()), f_old(grid.size());
    for (std::size_t q = 0; q < modes.size(); ++q) {
      const auto& md = modes[q];
      const auto cl = closure_for(spec.ebc, md);
      if (cl.kind == BoundaryClosure::Kind::Dirichlet) continue;
      if (!spec.source.touches(md) && !spec.initial.touches(md)) continue;
      const double tb = spec.k * md.lambda();
      for (std::size_t j = 1; j < traj.stamps(); ++j) {
        const auto& u0 = traj.fields[j - 1];
        const auto& u1 = traj.fields[j];
        spec.source.fill_mode(md, grid, u1.time(), f_new);
        spec.source.fill_mode(md, grid, u0.time(), f_old);
        auto mix = [&](std::size_t i) { return theta * u1.at(q, i) + (1.0 - theta) * u0.at(q, i); };
        const cplx f = theta * f_new[ib] + (1.0 - theta) * f_old[ib];
        const cplx ut = (u1.at(q, ib) - u0.at(q, ib)) / traj.dt;
        const cplx flux = cb * (mix(ib) - mix(ib - 1)) + vb * (ut + tb * mix(ib) - f);
        rep.flux_residual = std::max(rep.flux_residual, std::abs(flux - cl.b * mix(ib)));
      }
    }
    if (rep.flux_residual > residual_tol)
      rep.violations.push_back("flux identity residual " + std::to_string(rep.flux_residual));
  }
  return rep;
}

} // namespace ebc
