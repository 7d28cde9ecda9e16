#pragma once

// Per-mode method-of-lines time stepping shared by the full and effective
// solvers. Each Fourier mode is an independent real tridiagonal system
//   M u' = -K u + M f
// advanced by the theta scheme (theta = 1 implicit Euler, 1/2 trapezoidal).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ebc/data.hpp"
#include "ebc/error.hpp"
#include "ebc/geometry.hpp"
#include "ebc/tridiag.hpp"

namespace ebc {

enum class Scheme { ImplicitEuler, Trapezoidal };

inline double theta_of(Scheme s) { return s == Scheme::ImplicitEuler ? 1.0 : 0.5; }

/// Semi-discrete operator for one mode: flux stencil, reaction (tangential)
/// diagonal and lumped mass. K = flux + diag(reaction).
struct ModeSystem {
  Tridiagonal flux;
  std::vector<double> reaction;
  std::vector<double> mass;
  std::optional<std::size_t> pinned; // homogeneous Dirichlet node

  std::size_t size() const { return mass.size(); }

  Tridiagonal stiffness() const {
    Tridiagonal k = flux;
    for (std::size_t i = 0; i < size(); ++i) k.diag[i] += reaction[i];
    return k;
  }

  /// M/dt + theta K with the pinned row replaced by the identity.
  /// dt = inf gives the stationary operator K.
  Tridiagonal step_matrix(double dt, double theta) const {
    Tridiagonal a = stiffness();
    for (std::size_t i = 0; i < size(); ++i) {
      a.lower[i] *= theta;
      a.upper[i] *= theta;
      a.diag[i] = theta * a.diag[i] + (std::isinf(dt) ? 0.0 : mass[i] / dt);
    }
    if (pinned) a.pin(*pinned);
    return a;
  }

  /// u^H K u for one coefficient vector.
  double energy(std::span<const cplx> u) const {
    const auto ku = stiffness().multiply(u);
    double e = 0.0;
    for (std::size_t i = 0; i < size(); ++i) e += (std::conj(u[i]) * ku[i]).real();
    return e;
  }
};

struct Trajectory {
  LayoutPtr layout;
  double dt = 0.0;
  int total_steps = 0;
  std::vector<int> steps; // step index of every stamp
  std::vector<SpectralField> fields;

  std::size_t stamps() const { return fields.size(); }
  double time(std::size_t i) const { return fields[i].time(); }
  const SpectralField& final() const { return fields.back(); }
  /// True when stamps are every step, which the residual diagnostics need.
  bool dense() const { return static_cast<int>(fields.size()) == total_steps + 1; }
};

struct TimeGrid {
  int steps;
  double dt;
};

/// Splits [0, T] into equal steps no longer than the requested dt.
inline TimeGrid make_time_grid(double T, double dt) {
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("time horizon T must be positive");
  if (!(dt > 0.0) || !(dt <= T)) throw ConfigError("time step must satisfy 0 < dt <= T");
  const int n = static_cast<int>(std::ceil(T / dt - 1e-9));
  return {n, T / n};
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Each index is
/// handled by exactly one worker, so results do not depend on the split.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct MarchSettings {
  double T = 1.0;
  double dt = 0.01;
  Scheme scheme = Scheme::ImplicitEuler;
  int stamp_stride = 1;
  int threads = 1;
};

/// Advances every mode from `initial` with load `source`. `system_for(q)`
/// assembles mode q's operator. Modes that neither datum touches stay zero.
inline Trajectory march(const LayoutPtr& layout, const std::function<ModeSystem(std::size_t)>& system_for,
                        const ModeData& source, const ModeData& initial, const MarchSettings& s) {
  const auto tg = make_time_grid(s.T, s.dt);
  if (s.stamp_stride < 1) throw ConfigError("stamp stride must be >= 1");
  const double theta = theta_of(s.scheme);
  const auto& modes = layout->modes;
  const auto& grid = layout->grid;
  source.check_band(modes);
  initial.check_band(modes);

  Trajectory traj;
  traj.layout = layout;
  traj.dt = tg.dt;
  traj.total_steps = tg.steps;
  for (int j = 0; j <= tg.steps; ++j)
    if (j % s.stamp_stride == 0 || j == tg.steps) {
      traj.steps.push_back(j);
      traj.fields.emplace_back(layout, j * tg.dt);
    }

  std::atomic<int> first_bad{std::numeric_limits<int>::max()};
  const std::size_t n = grid.size();

  parallel_for(modes.size(), s.threads, [&](std::size_t q) {
    const auto& md = modes[q];
    if (!source.touches(md) && !initial.touches(md)) return;
    const ModeSystem sys = system_for(q);
    const TridiagonalLU lu(sys.step_matrix(tg.dt, theta));
    const Tridiagonal k = sys.stiffness();

    std::vector<cplx> u(n), f_old(n), f_new(n), rhs(n);
    initial.fill_mode(md, grid, 0.0, u);
    source.fill_mode(md, grid, 0.0, f_old);
    std::size_t stamp = 0;
    auto record = [&](int j) {
      if (stamp < traj.steps.size() && traj.steps[stamp] == j) {
        std::copy(u.begin(), u.end(), traj.fields[stamp].mode(q).begin());
        ++stamp;
      }
    };
    record(0);
    for (int j = 1; j <= tg.steps; ++j) {
      source.fill_mode(md, grid, j * tg.dt, f_new);
      const auto ku = k.multiply<cplx>(u);
      for (std::size_t i = 0; i < n; ++i)
        rhs[i] = sys.mass[i] / tg.dt * u[i] - (1.0 - theta) * ku[i] +
                 sys.mass[i] * (theta * f_new[i] + (1.0 - theta) * f_old[i]);
      if (sys.pinned) rhs[*sys.pinned] = 0.0;
      lu.solve<cplx>(rhs);
      u.swap(rhs);
      f_old.swap(f_new);
      for (const auto& v : u)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          int cur = first_bad.load();
          while (j < cur && !first_bad.compare_exchange_weak(cur, j)) {}
          return;
        }
      record(j);
    }
  });

  if (first_bad.load() != std::numeric_limits<int>::max())
    throw SolverError("non-finite state at step " + std::to_string(first_bad.load()));
  return traj;
}

} // namespace ebc
