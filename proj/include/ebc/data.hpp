#pragma once

// Source and initial data as finite mode lists with closed-form radial
// profiles, so configs stay reproducible without code callbacks.

#include <algorithm>
#include <cmath>
#include <span>
#include <variant>
#include <vector>

#include "ebc/error.hpp"
#include "ebc/geometry.hpp"

namespace ebc {

struct ConstantProfile {
  double a = 1.0;
};
/// a + b r
struct LinearProfile {
  double a = 0.0;
  double b = 0.0;
};
/// amplitude exp(-((r - center)/width)^2)
struct GaussianProfile {
  double center = 0.0;
  double width = 1.0;
  double amplitude = 1.0;
};
using RadialProfile = std::variant<ConstantProfile, LinearProfile, GaussianProfile>;

struct UnitTime {};
/// exp(-rate t)
struct ExpTime {
  double rate = 0.0;
};
/// cos(omega t)
struct CosTime {
  double omega = 0.0;
};
using TimeFactor = std::variant<UnitTime, ExpTime, CosTime>;

inline double evaluate(const RadialProfile& p, double r) {
  return std::visit(
      [r](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstantProfile>) return v.a;
        else if constexpr (std::is_same_v<T, LinearProfile>) return v.a + v.b * r;
        else {
          const double z = (r - v.center) / v.width;
          return v.amplitude * std::exp(-z * z);
        }
      },
      p);
}

inline double evaluate(const TimeFactor& f, double t) {
  return std::visit(
      [t](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UnitTime>) return 1.0;
        else if constexpr (std::is_same_v<T, ExpTime>) return std::exp(-v.rate * t);
        else return std::cos(v.omega * t);
      },
      f);
}

/// One real-field term: amplitude * profile(r) * time(t) on mode (m, n), and
/// the conjugate on (-m, -n). For (0, 0) only Re(amplitude) is used.
struct ModeTerm {
  int m = 0;
  int n = 0;
  cplx amplitude{1.0, 0.0};
  RadialProfile profile = ConstantProfile{};
  TimeFactor time = UnitTime{};
};

class ModeData {
public:
  ModeData() = default;
  explicit ModeData(std::vector<ModeTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_) {
      if (const auto* g = std::get_if<GaussianProfile>(&t.profile); g && !(g->width > 0.0))
        throw ConfigError("gaussian profile width must be positive");
      if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag()))
        throw ConfigError("mode amplitude must be finite");
    }
  }

  const std::vector<ModeTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void check_band(const ModeSet& modes) const {
    for (const auto& t : terms_)
      if (!modes.contains(t.m, t.n)) (void)modes.index_of(t.m, t.n); // throws with the mode named
  }

  /// Coefficient of this term on mode md, before profile and time factors.
  static cplx weight(const ModeTerm& t, const ModeIndex& md) {
    if (md.m == 0 && md.n == 0) return (t.m == 0 && t.n == 0) ? cplx(t.amplitude.real(), 0.0) : cplx{};
    cplx w{};
    if (t.m == md.m && t.n == md.n) w += t.amplitude;
    if (t.m == -md.m && t.n == -md.n) w += std::conj(t.amplitude);
    return w;
  }

  bool touches(const ModeIndex& md) const {
    for (const auto& t : terms_)
      if (weight(t, md) != cplx{}) return true;
    return false;
  }

  /// Writes the mode-md coefficients at time t on every node of `grid` into out.
  void fill_mode(const ModeIndex& md, const RadialGrid& grid, double t, std::span<cplx> out) const {
    std::fill(out.begin(), out.end(), cplx{});
    for (const auto& term : terms_) {
      const cplx w = weight(term, md);
      if (w == cplx{}) continue;
      const cplx wt = w * evaluate(term.time, t);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += wt * evaluate(term.profile, grid.r(k));
    }
  }

  SpectralField project(const LayoutPtr& layout, double t) const {
    SpectralField f(layout, t);
    for (std::size_t q = 0; q < layout->modes.size(); ++q)
      fill_mode(layout->modes[q], layout->grid, t, f.mode(q));
    return f;
  }

private:
  std::vector<ModeTerm> terms_;
};

} // namespace ebc
