#pragma once

// Flattened geometry: a periodic bulk slab Gamma x (-L, 0) under a coating
// slab Gamma x (0, delta), with Gamma the flat torus [0,l1) x [0,l2).
// Tangential dependence is carried by the unit-norm Fourier modes
//   e_mn(s) = exp(i(k1 s1 + k2 s2)) / sqrt(l1 l2),
// so surface L2 norms are plain coefficient sums.

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ebc/error.hpp"

namespace ebc {

using cplx = std::complex<double>;

struct TorusSpec {
  double l1 = 2.0 * std::numbers::pi;
  double l2 = 2.0 * std::numbers::pi;
  int m_max = 0;
  int n_max = 0;

  void validate() const {
    if (!(l1 > 0.0) || !(l2 > 0.0) || !std::isfinite(l1) || !std::isfinite(l2))
      throw ConfigError("torus periods must be positive and finite");
    if (m_max < 0 || n_max < 0)
      throw ConfigError("torus mode bounds must be nonnegative");
  }
  double area() const { return l1 * l2; }
  bool operator==(const TorusSpec&) const = default;
};

struct ModeIndex {
  int m = 0;
  int n = 0;
  double k1 = 0.0;
  double k2 = 0.0;

  double lambda() const { return k1 * k1 + k2 * k2; }
  /// Eigenvalue of -(d^2/ds1^2 + c d^2/ds2^2); c in [0,1].
  double lambda_aniso(double c) const { return k1 * k1 + c * k2 * k2; }
  bool is_mean() const { return m == 0 && n == 0; }
};

/// The retained mode set {|m| <= m_max, |n| <= n_max}, ordered lexicographically
/// in (m, n). The ordering makes negation an index reversal.
class ModeSet {
public:
  ModeSet() = default;
  explicit ModeSet(const TorusSpec& spec) : spec_(spec) {
    spec.validate();
    const double two_pi = 2.0 * std::numbers::pi;
    modes_.reserve(static_cast<std::size_t>((2 * spec.m_max + 1) * (2 * spec.n_max + 1)));
    for (int m = -spec.m_max; m <= spec.m_max; ++m)
      for (int n = -spec.n_max; n <= spec.n_max; ++n)
        modes_.push_back({m, n, two_pi * m / spec.l1, two_pi * n / spec.l2});
  }

  const TorusSpec& torus() const { return spec_; }
  std::size_t size() const { return modes_.size(); }
  const ModeIndex& operator[](std::size_t i) const { return modes_[i]; }
  auto begin() const { return modes_.begin(); }
  auto end() const { return modes_.end(); }

  bool contains(int m, int n) const {
    return std::abs(m) <= spec_.m_max && std::abs(n) <= spec_.n_max;
  }
  std::size_t index_of(int m, int n) const {
    if (!contains(m, n))
      throw ConfigError("mode (" + std::to_string(m) + "," + std::to_string(n) +
                        ") outside the retained band");
    return static_cast<std::size_t>((m + spec_.m_max) * (2 * spec_.n_max + 1) + (n + spec_.n_max));
  }
  std::size_t negated(std::size_t i) const { return modes_.size() - 1 - i; }
  std::size_t mean_index() const { return index_of(0, 0); }

private:
  TorusSpec spec_;
  std::vector<ModeIndex> modes_;
};

inline ModeSet build_modes(const TorusSpec& spec) { return ModeSet(spec); }

/// Radial nodes: bulk on [-L, 0], optional coating on [0, delta]. Node r = 0 is
/// shared. Uniform spacing within each part.
class RadialGrid {
public:
  RadialGrid() = default;

  static RadialGrid two_domain(double depth, double delta, int n_bulk, int n_layer) {
    RadialGrid g(depth, n_bulk);
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("coating thickness must be positive");
    if (n_layer < 3) throw ConfigError("layer needs at least 3 nodes");
    g.delta_ = delta;
    g.n_layer_ = n_layer;
    return g;
  }
  static RadialGrid bulk_only(double depth, int n_bulk) { return RadialGrid(depth, n_bulk); }

  double depth() const { return depth_; }
  double delta() const { return delta_; }
  int n_bulk() const { return n_bulk_; }
  int n_layer() const { return n_layer_; }
  bool has_layer() const { return n_layer_ > 0; }

  std::size_t size() const {
    return static_cast<std::size_t>(n_bulk_ + (has_layer() ? n_layer_ - 1 : 0));
  }
  std::size_t interface_index() const { return static_cast<std::size_t>(n_bulk_ - 1); }
  double bulk_spacing() const { return depth_ / (n_bulk_ - 1); }
  double layer_spacing() const { return has_layer() ? delta_ / (n_layer_ - 1) : 0.0; }
  bool in_layer(std::size_t i) const { return i > interface_index(); }

  double r(std::size_t i) const {
    const auto ib = interface_index();
    if (i <= ib) return i == ib ? 0.0 : -depth_ + static_cast<double>(i) * bulk_spacing();
    return static_cast<double>(i - ib) * layer_spacing();
  }

  /// Trapezoid weights over all nodes (bulk + layer); these are also the
  /// lumped finite-volume control-volume sizes.
  std::vector<double> weights() const {
    std::vector<double> w(size(), 0.0);
    const double hb = bulk_spacing();
    const auto ib = interface_index();
    for (std::size_t i = 0; i <= ib; ++i) w[i] = hb;
    w.front() = 0.5 * hb;
    w[ib] = 0.5 * hb;
    if (has_layer()) {
      const double hl = layer_spacing();
      for (std::size_t i = ib + 1; i < size(); ++i) w[i] = hl;
      w[ib] += 0.5 * hl;
      w.back() = 0.5 * hl;
    }
    return w;
  }
  /// Trapezoid weights restricted to the bulk nodes [0, interface].
  std::vector<double> bulk_weights() const { return bulk_only(depth_, n_bulk_).weights(); }

  bool same_bulk(const RadialGrid& o) const { return depth_ == o.depth_ && n_bulk_ == o.n_bulk_; }
  bool operator==(const RadialGrid&) const = default;

private:
  RadialGrid(double depth, int n_bulk) : depth_(depth), n_bulk_(n_bulk) {
    if (!(depth > 0.0) || !std::isfinite(depth)) throw ConfigError("bulk depth must be positive");
    if (n_bulk < 3) throw ConfigError("bulk needs at least 3 nodes");
  }

  double depth_ = 1.0;
  double delta_ = 0.0;
  int n_bulk_ = 3;
  int n_layer_ = 0;
};

/// Shared, immutable description of what a field's coefficient array means.
struct FieldLayout {
  ModeSet modes;
  RadialGrid grid;
};
using LayoutPtr = std::shared_ptr<const FieldLayout>;

inline LayoutPtr make_layout(const TorusSpec& torus, const RadialGrid& grid) {
  return std::make_shared<const FieldLayout>(FieldLayout{ModeSet(torus), grid});
}

/// Per-mode coefficient vectors over the radial nodes at one time stamp.
/// Storage is mode-major: coeff(mode, node).
class SpectralField {
public:
  SpectralField() = default;
  SpectralField(LayoutPtr layout, double time)
      : layout_(std::move(layout)), time_(time),
        data_(layout_->modes.size() * layout_->grid.size(), cplx{}) {}

  const FieldLayout& layout() const { return *layout_; }
  const LayoutPtr& layout_ptr() const { return layout_; }
  double time() const { return time_; }
  std::size_t nodes() const { return layout_->grid.size(); }

  cplx& at(std::size_t mode, std::size_t node) { return data_[mode * nodes() + node]; }
  const cplx& at(std::size_t mode, std::size_t node) const { return data_[mode * nodes() + node]; }
  std::span<cplx> mode(std::size_t i) { return {data_.data() + i * nodes(), nodes()}; }
  std::span<const cplx> mode(std::size_t i) const { return {data_.data() + i * nodes(), nodes()}; }
  std::span<const cplx> raw() const { return data_; }

  /// Largest |c(-m,-n,r) - conj(c(m,n,r))| over all entries.
  double conjugate_asymmetry() const {
    double worst = 0.0;
    const auto& ms = layout_->modes;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto j = ms.negated(i);
      for (std::size_t k = 0; k < nodes(); ++k)
        worst = std::max(worst, std::abs(at(j, k) - std::conj(at(i, k))));
    }
    return worst;
  }

private:
  LayoutPtr layout_;
  double time_ = 0.0;
  std::vector<cplx> data_;
};

/// Coefficients of a function on Gamma alone.
class SurfaceFunction {
public:
  SurfaceFunction() = default;
  explicit SurfaceFunction(ModeSet modes) : modes_(std::move(modes)), c_(modes_.size(), cplx{}) {}

  const ModeSet& modes() const { return modes_; }
  const TorusSpec& torus() const { return modes_.torus(); }
  std::size_t size() const { return c_.size(); }
  cplx& operator[](std::size_t i) { return c_[i]; }
  const cplx& operator[](std::size_t i) const { return c_[i]; }
  cplx& at(int m, int n) { return c_[modes_.index_of(m, n)]; }
  const cplx& at(int m, int n) const { return c_[modes_.index_of(m, n)]; }
  std::span<const cplx> coefficients() const { return c_; }

  /// Sets mode (m,n) to a and (-m,-n) to conj(a), keeping the function real.
  void set_real_pair(int m, int n, cplx a) {
    if (m == 0 && n == 0) {
      at(0, 0) = a.real();
      return;
    }
    at(m, n) = a;
    at(-m, -n) = std::conj(a);
  }

  double conjugate_asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i)
      worst = std::max(worst, std::abs(c_[modes_.negated(i)] - std::conj(c_[i])));
    return worst;
  }

  /// Surface L2 norm; with unit-norm modes this is the coefficient 2-norm.
  double l2_norm() const {
    double s = 0.0;
    for (const auto& v : c_) s += std::norm(v);
    return std::sqrt(s);
  }

  /// <f, g> = integral over Gamma of f conj(g).
  friend cplx inner(const SurfaceFunction& f, const SurfaceFunction& g) {
    cplx s{};
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
    return s;
  }

private:
  ModeSet modes_;
  std::vector<cplx> c_;
};

/// Real samples on the uniform surface grid s1 = i l1/N1, s2 = j l2/N2,
/// stored row-major in i.
struct SurfaceSamples {
  TorusSpec torus;
  int n1 = 0;
  int n2 = 0;
  std::vector<double> values;

  double& operator()(int i, int j) { return values[static_cast<std::size_t>(i * n2 + j)]; }
  double operator()(int i, int j) const { return values[static_cast<std::size_t>(i * n2 + j)]; }
  double s1(int i) const { return torus.l1 * i / n1; }
  double s2(int j) const { return torus.l2 * j / n2; }
  double cell_area() const { return torus.area() / (static_cast<double>(n1) * n2); }

  double l2_norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s * cell_area());
  }
  double max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

inline void check_surface_grid(const TorusSpec& t, int n1, int n2) {
  if (n1 < 2 * t.m_max + 1 || n2 < 2 * t.n_max + 1)
    throw ConfigError("surface grid " + std::to_string(n1) + "x" + std::to_string(n2) +
                      " too coarse for band (" + std::to_string(t.m_max) + "," +
                      std::to_string(t.n_max) + ")");
}

/// Evaluates a surface function on an n1 x n2 grid.
inline SurfaceSamples inverse_transform(const SurfaceFunction& g, int n1, int n2) {
  const auto& t = g.torus();
  if (n1 < 1 || n2 < 1) throw ConfigError("surface grid must be nonempty");
  SurfaceSamples out{t, n1, n2, std::vector<double>(static_cast<std::size_t>(n1) * n2, 0.0)};
  const double norm = 1.0 / std::sqrt(t.area());
  const auto& ms = g.modes();
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      cplx s{};
      for (std::size_t q = 0; q < ms.size(); ++q) {
        if (g[q] == cplx{}) continue;
        const double phase = ms[q].k1 * out.s1(i) + ms[q].k2 * out.s2(j);
        s += g[q] * cplx(std::cos(phase), std::sin(phase));
      }
      out(i, j) = s.real() * norm;
    }
  }
  return out;
}

/// Discrete Fourier analysis onto the unit-norm modes of `torus`.
inline SurfaceFunction transform(const SurfaceSamples& x, const TorusSpec& torus) {
  check_surface_grid(torus, x.n1, x.n2);
  if (x.torus.l1 != torus.l1 || x.torus.l2 != torus.l2)
    throw ConfigError("sample grid and target torus have different periods");
  SurfaceFunction g{ModeSet(torus)};
  const auto& ms = g.modes();
  const double scale = std::sqrt(torus.area()) / (static_cast<double>(x.n1) * x.n2);
  for (std::size_t q = 0; q < ms.size(); ++q) {
    cplx s{};
    for (int i = 0; i < x.n1; ++i)
      for (int j = 0; j < x.n2; ++j) {
        const double phase = ms[q].k1 * x.s1(i) + ms[q].k2 * x.s2(j);
        s += x(i, j) * cplx(std::cos(phase), -std::sin(phase));
      }
    g[q] = s * scale;
  }
  return g;
}

/// Applies a real per-mode multiplier.
template <class Symbol>
SurfaceFunction apply_multiplier(const SurfaceFunction& g, Symbol&& symbol) {
  SurfaceFunction out{g.modes()};
  for (std::size_t q = 0; q < g.size(); ++q) out[q] = symbol(g.modes()[q]) * g[q];
  return out;
}

/// Spectral derivative d^a/ds1^a d^b/ds2^b.
inline SurfaceFunction derivative(const SurfaceFunction& g, int a, int b) {
  SurfaceFunction out{g.modes()};
  for (std::size_t q = 0; q < g.size(); ++q) {
    const auto& md = g.modes()[q];
    out[q] = std::pow(cplx(0.0, md.k1), a) * std::pow(cplx(0.0, md.k2), b) * g[q];
  }
  return out;
}

/// Surface Laplace-Beltrami (flat): symbol -lambda.
inline SurfaceFunction laplace_beltrami(const SurfaceFunction& g) {
  return apply_multiplier(g, [](const ModeIndex& md) { return -md.lambda(); });
}

/// max over the grid of |g| + |g_1| + |g_2| + |g_11| + |g_22| + |g_12|.
inline double c2_norm(const SurfaceFunction& g, int n1, int n2) {
  const int orders[6][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}};
  std::vector<double> acc(static_cast<std::size_t>(n1) * n2, 0.0);
  for (const auto& o : orders) {
    const auto s = inverse_transform(derivative(g, o[0], o[1]), n1, n2);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += std::abs(s.values[k]);
  }
  double m = 0.0;
  for (double v : acc) m = std::max(m, v);
  return m;
}

/// L2 norm over the bulk Gamma x (-L, 0): Parseval in modes, trapezoid in r.
inline double norm_L2_bulk(const SpectralField& u) {
  const auto& grid = u.layout().grid;
  const auto w = grid.bulk_weights();
  double s = 0.0;
  for (std::size_t q = 0; q < u.layout().modes.size(); ++q)
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * std::norm(u.at(q, k));
  return std::sqrt(s);
}

/// L2 norm over every node of the field's grid (bulk plus coating if present).
inline double norm_L2_domain(const SpectralField& u) {
  const auto w = u.layout().grid.weights();
  double s = 0.0;
  for (std::size_t q = 0; q < u.layout().modes.size(); ++q)
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * std::norm(u.at(q, k));
  return std::sqrt(s);
}

/// Surface trace (node r = 0) of a field.
inline SurfaceFunction trace_of(const SpectralField& u) {
  SurfaceFunction g{u.layout().modes};
  const auto ib = u.layout().grid.interface_index();
  for (std::size_t q = 0; q < g.size(); ++q) g[q] = u.at(q, ib);
  return g;
}

} // namespace ebc
