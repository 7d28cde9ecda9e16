#pragma once

// Power-law conductivity scalings and their classification into effective
// boundary conditions.

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ebc/error.hpp"

namespace ebc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// prefactor * delta^exponent. Closed under products, quotients and real powers.
struct Monomial {
  double prefactor = 1.0;
  double exponent = 0.0;

  double operator()(double delta) const { return prefactor * std::pow(delta, exponent); }

  friend Monomial operator*(Monomial a, Monomial b) {
    return {a.prefactor * b.prefactor, a.exponent + b.exponent};
  }
  friend Monomial operator/(Monomial a, Monomial b) {
    return {a.prefactor / b.prefactor, a.exponent - b.exponent};
  }
  friend Monomial pow(Monomial a, double p) { return {std::pow(a.prefactor, p), a.exponent * p}; }
  bool operator==(const Monomial&) const = default;
};

/// delta^p as a monomial.
inline Monomial delta_pow(double p) { return {1.0, p}; }

/// A conductivity law sigma(delta), mu_i(delta).
struct ScalingLaw : Monomial {
  ScalingLaw() = default;
  ScalingLaw(double prefactor_, double exponent_) : Monomial{prefactor_, exponent_} { validate(); }

  void validate() const {
    if (!(prefactor > 0.0) || !std::isfinite(prefactor) || !std::isfinite(exponent))
      throw ConfigError("scaling law needs a positive finite prefactor and a finite exponent");
  }
};

struct LimitValue {
  enum class Tag { Zero, Finite, Infinity };
  Tag tag = Tag::Zero;
  double value = 0.0; // meaningful only for Finite (> 0)

  static LimitValue zero() { return {Tag::Zero, 0.0}; }
  static LimitValue infinity() { return {Tag::Infinity, kInfinity}; }
  static LimitValue finite(double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("finite limit must be positive");
    return {Tag::Finite, v};
  }

  bool is_zero() const { return tag == Tag::Zero; }
  bool is_finite() const { return tag == Tag::Finite; }
  bool is_infinite() const { return tag == Tag::Infinity; }
  /// 0, the finite value, or +inf.
  double numeric() const { return tag == Tag::Zero ? 0.0 : value; }
  bool operator==(const LimitValue&) const = default;
};

/// Exponents closer than this to zero count as zero. Every exponent built from
/// dyadic rationals is exact, so this only absorbs user rounding like 0.333...
inline constexpr double kExponentTol = 1e-12;

/// Exact delta -> 0 limit of a monomial.
inline LimitValue limit_of(const Monomial& expr) {
  if (expr.exponent > kExponentTol) return LimitValue::zero();
  if (expr.exponent < -kExponentTol) return LimitValue::infinity();
  return LimitValue::finite(expr.prefactor);
}

enum class OuterBc { Dirichlet, Neumann };
enum class CoatingType { TypeI, TypeII };

struct CoatingScaling {
  ScalingLaw sigma;
  ScalingLaw mu1;
  ScalingLaw mu2;
  CoatingType type = CoatingType::TypeI;

  static CoatingScaling type_one(ScalingLaw sigma, ScalingLaw mu) {
    return {sigma, mu, mu, CoatingType::TypeI};
  }
  static CoatingScaling type_two(ScalingLaw sigma, ScalingLaw mu1, ScalingLaw mu2) {
    CoatingScaling s{sigma, mu1, mu2, CoatingType::TypeII};
    s.validate();
    return s;
  }

  void validate() const {
    sigma.validate();
    mu1.validate();
    mu2.validate();
    if (type == CoatingType::TypeI && !(mu1 == mu2))
      throw ConfigError("Type I coating needs identical tangential laws");
    if (type == CoatingType::TypeII) {
      const bool dominated = mu1.exponent < mu2.exponent - kExponentTol ||
                             (std::abs(mu1.exponent - mu2.exponent) <= kExponentTol &&
                              mu1.prefactor >= mu2.prefactor);
      if (!dominated) throw ConfigError("Type II coating needs mu1 >= mu2 as delta -> 0");
    }
  }
};

// ---------------------------------------------------------------------------
// Effective boundary conditions

/// Cap condition of a cell problem: Dirichlet-capped (D) or Neumann-capped (N).
enum class Variant { D, N };

struct DirichletZero {
  bool operator==(const DirichletZero&) const = default;
};
struct NeumannZero {
  bool operator==(const NeumannZero&) const = default;
};
/// k dv/dn = -alpha v
struct Robin {
  double alpha;
  bool operator==(const Robin&) const = default;
};
/// k dv/dn = gamma J^H[v]
struct DtnJ {
  Variant variant;
  double gamma;
  double H;
  bool operator==(const DtnJ&) const = default;
};
/// k dv/dn = gamma1 K^H[v], anisotropic ratio c in (0,1]
struct DtnK {
  Variant variant;
  double gamma1;
  double H;
  double c;
  bool operator==(const DtnK&) const = default;
};
/// k dv/dn = gamma1 Lambda^H[v]
struct DtnLambda {
  Variant variant;
  double gamma1;
  double H;
  bool operator==(const DtnLambda&) const = default;
};
/// k dv/dn = beta (d^2/ds1^2 + c d^2/ds2^2) v
struct SurfaceDiffusion {
  double beta;
  double c;
  bool operator==(const SurfaceDiffusion&) const = default;
};

struct ZeroFlux {
  bool operator==(const ZeroFlux&) const = default;
};
struct RobinIntegral {
  double alpha;
  bool operator==(const RobinIntegral&) const = default;
};
struct DtnD {
  Variant variant;
  double gamma2;
  double H;
  bool operator==(const DtnD&) const = default;
};
struct SurfaceDiffusionS2 {
  double beta2;
  bool operator==(const SurfaceDiffusionS2&) const = default;
};

/// grad_Gamma v = 0 plus an integral condition over Gamma.
struct ConstantTrace {
  std::variant<ZeroFlux, RobinIntegral> rule;
  bool operator==(const ConstantTrace&) const = default;
};
/// dv/dtau1 = 0 plus an integral condition over Gamma_1.
struct ConstantInS1 {
  std::variant<ZeroFlux, RobinIntegral, DtnD, SurfaceDiffusionS2> rule;
  bool operator==(const ConstantInS1&) const = default;
};

using EbcKind = std::variant<DirichletZero, NeumannZero, Robin, DtnJ, DtnK, DtnLambda,
                             SurfaceDiffusion, ConstantTrace, ConstantInS1>;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

inline const char* variant_name(Variant v) { return v == Variant::D ? "D" : "N"; }

namespace detail {
inline void require_positive(double x, const char* what) {
  if (!(x > 0.0) || std::isnan(x)) throw ConfigError(std::string(what) + " must be positive");
}
inline void require_height(double H) {
  if (!(H > 0.0) || std::isnan(H)) throw ConfigError("cap height H must lie in (0, inf]");
}
inline std::string fmt_num(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}
} // namespace detail

inline void validate(const EbcKind& e) {
  using detail::require_height;
  using detail::require_positive;
  std::visit(overloaded{
                 [](const DirichletZero&) {},
                 [](const NeumannZero&) {},
                 [](const Robin& r) { require_positive(r.alpha, "alpha"); },
                 [](const DtnJ& d) {
                   require_positive(d.gamma, "gamma");
                   require_height(d.H);
                 },
                 [](const DtnK& d) {
                   require_positive(d.gamma1, "gamma1");
                   require_height(d.H);
                   if (!(d.c > 0.0 && d.c <= 1.0)) throw ConfigError("K operator needs c in (0,1]");
                 },
                 [](const DtnLambda& d) {
                   require_positive(d.gamma1, "gamma1");
                   require_height(d.H);
                 },
                 [](const SurfaceDiffusion& s) {
                   require_positive(s.beta, "beta");
                   if (!(s.c >= 0.0 && s.c <= 1.0)) throw ConfigError("surface diffusion needs c in [0,1]");
                 },
                 [](const ConstantTrace& t) {
                   if (auto* r = std::get_if<RobinIntegral>(&t.rule)) require_positive(r->alpha, "alpha");
                 },
                 [](const ConstantInS1& t) {
                   std::visit(overloaded{
                                  [](const ZeroFlux&) {},
                                  [](const RobinIntegral& r) { require_positive(r.alpha, "alpha"); },
                                  [](const DtnD& d) {
                                    require_positive(d.gamma2, "gamma2");
                                    require_height(d.H);
                                  },
                                  [](const SurfaceDiffusionS2& s) { require_positive(s.beta2, "beta2"); },
                              },
                              t.rule);
                 },
             },
             e);
}

/// Human-readable boundary condition, e.g. "k dv/dn = 1 J_D^2[v]".
inline std::string describe(const EbcKind& e) {
  using detail::fmt_num;
  return std::visit(
      overloaded{
          [](const DirichletZero&) -> std::string { return "v = 0"; },
          [](const NeumannZero&) -> std::string { return "dv/dn = 0"; },
          [](const Robin& r) -> std::string { return "k dv/dn = -" + fmt_num(r.alpha) + " v"; },
          [](const DtnJ& d) -> std::string {
            return "k dv/dn = " + fmt_num(d.gamma) + " J_" + variant_name(d.variant) + "^" +
                   fmt_num(d.H) + "[v]";
          },
          [](const DtnK& d) -> std::string {
            return "k dv/dn = " + fmt_num(d.gamma1) + " K_" + variant_name(d.variant) + "^" +
                   fmt_num(d.H) + "[v] (c=" + fmt_num(d.c) + ")";
          },
          [](const DtnLambda& d) -> std::string {
            return "k dv/dn = " + fmt_num(d.gamma1) + " Lambda_" + variant_name(d.variant) + "^" +
                   fmt_num(d.H) + "[v]";
          },
          [](const SurfaceDiffusion& s) -> std::string {
            return "k dv/dn = " + fmt_num(s.beta) + " (v_s1s1 + " + fmt_num(s.c) + " v_s2s2)";
          },
          [](const ConstantTrace& t) -> std::string {
            if (auto* r = std::get_if<RobinIntegral>(&t.rule))
              return "grad_Gamma v = 0, int_Gamma (k dv/dn + " + fmt_num(r->alpha) + " v) = 0";
            return "grad_Gamma v = 0, int_Gamma dv/dn = 0";
          },
          [](const ConstantInS1& t) -> std::string {
            const std::string head = "dv/dtau1 = 0, ";
            return head + std::visit(overloaded{
                                         [](const ZeroFlux&) -> std::string { return "int_Gamma1 dv/dn = 0"; },
                                         [](const RobinIntegral& r) -> std::string {
                                           return "int_Gamma1 (k dv/dn + " + fmt_num(r.alpha) + " v) = 0";
                                         },
                                         [](const DtnD& d) -> std::string {
                                           return "int_Gamma1 (k dv/dn - " + fmt_num(d.gamma2) + " D_" +
                                                  variant_name(d.variant) + "^" + fmt_num(d.H) + "[v]) = 0";
                                         },
                                         [](const SurfaceDiffusionS2& s) -> std::string {
                                           return "int_Gamma1 (k dv/dn - " + fmt_num(s.beta2) + " v_s2s2) = 0";
                                         },
                                     },
                                     t.rule);
          },
      },
      e);
}

namespace detail {
inline bool close(double a, double b, double rel) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}
} // namespace detail

/// Same alternative, same discrete tags, parameters equal to relative `rel`.
inline bool approx_equal(const EbcKind& a, const EbcKind& b, double rel = 1e-12) {
  using detail::close;
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [](const DirichletZero&, const DirichletZero&) { return true; },
          [](const NeumannZero&, const NeumannZero&) { return true; },
          [rel](const Robin& x, const Robin& y) { return close(x.alpha, y.alpha, rel); },
          [rel](const DtnJ& x, const DtnJ& y) {
            return x.variant == y.variant && close(x.gamma, y.gamma, rel) && close(x.H, y.H, rel);
          },
          [rel](const DtnK& x, const DtnK& y) {
            return x.variant == y.variant && close(x.gamma1, y.gamma1, rel) && close(x.H, y.H, rel) &&
                   close(x.c, y.c, rel);
          },
          [rel](const DtnLambda& x, const DtnLambda& y) {
            return x.variant == y.variant && close(x.gamma1, y.gamma1, rel) && close(x.H, y.H, rel);
          },
          [rel](const SurfaceDiffusion& x, const SurfaceDiffusion& y) {
            return close(x.beta, y.beta, rel) && close(x.c, y.c, rel);
          },
          [rel](const ConstantTrace& x, const ConstantTrace& y) {
            if (x.rule.index() != y.rule.index()) return false;
            if (auto* rx = std::get_if<RobinIntegral>(&x.rule))
              return close(rx->alpha, std::get<RobinIntegral>(y.rule).alpha, rel);
            return true;
          },
          [rel](const ConstantInS1& x, const ConstantInS1& y) {
            if (x.rule.index() != y.rule.index()) return false;
            return std::visit(overloaded{
                                  [](const ZeroFlux&, const ZeroFlux&) { return true; },
                                  [rel](const RobinIntegral& p, const RobinIntegral& q) {
                                    return close(p.alpha, q.alpha, rel);
                                  },
                                  [rel](const DtnD& p, const DtnD& q) {
                                    return p.variant == q.variant && close(p.gamma2, q.gamma2, rel) &&
                                           close(p.H, q.H, rel);
                                  },
                                  [rel](const SurfaceDiffusionS2& p, const SurfaceDiffusionS2& q) {
                                    return close(p.beta2, q.beta2, rel);
                                  },
                                  [](const auto&, const auto&) { return false; },
                              },
                              x.rule, y.rule);
          },
          [](const auto&, const auto&) { return false; },
      },
      a, b);
}

// ---------------------------------------------------------------------------
// Classification

struct NamedLimit {
  std::string name;
  LimitValue value;
};

struct HypothesisFlag {
  std::string name;
  bool holds;
};

struct RegimeReport {
  OuterBc outer_bc = OuterBc::Dirichlet;
  CoatingType coating_type = CoatingType::TypeI;
  std::vector<NamedLimit> limits;
  std::vector<HypothesisFlag> hypotheses;
  EbcKind chosen = NeumannZero{};
  std::string table_cell;

  const LimitValue* limit(const std::string& name) const {
    for (const auto& l : limits)
      if (l.name == name) return &l.value;
    return nullptr;
  }
};

namespace detail {

inline std::string tag_text(const LimitValue& v, const char* finite_name) {
  switch (v.tag) {
  case LimitValue::Tag::Zero: return "-> 0";
  case LimitValue::Tag::Infinity: return "-> inf";
  default: return std::string("-> ") + finite_name;
  }
}

/// Limit of sqrt(sigma mu_i) / (sigma/delta) = delta sqrt(mu_i/sigma) (Dirichlet caps)
/// or (mu_i delta) / sqrt(sigma mu_i) (Neumann caps): the same monomial.
inline double cap_height(const ScalingLaw& sigma, const ScalingLaw& mu) {
  const auto h = limit_of(delta_pow(1.0) * pow(Monomial(mu) / Monomial(sigma), 0.5));
  return h.numeric();
}

inline double sqrt_limit(const LimitValue& v) { return std::sqrt(v.numeric()); }

} // namespace detail

/// Selects the effective boundary condition for a power-law coating.
/// Throws RegimeError when the c = 0 hypothesis fails.
inline RegimeReport classify(OuterBc outer, const CoatingScaling& sc) {
  sc.validate();
  const Monomial sigma = sc.sigma, mu1 = sc.mu1, mu2 = sc.mu2;
  const bool type_one = sc.type == CoatingType::TypeI;

  RegimeReport rep;
  rep.outer_bc = outer;
  rep.coating_type = sc.type;

  const LimitValue alpha = limit_of(sigma / delta_pow(1.0));
  const LimitValue sm1 = limit_of(sigma * mu1);
  const LimitValue sm2 = limit_of(sigma * mu2);
  const LimitValue b1 = limit_of(mu1 * delta_pow(1.0));
  const LimitValue b2 = limit_of(mu2 * delta_pow(1.0));
  const LimitValue c = limit_of(mu2 / mu1);
  const double g1 = detail::sqrt_limit(sm1);
  const double g2 = detail::sqrt_limit(sm2);
  const double h1 = detail::cap_height(sc.sigma, sc.mu1);
  const double h2 = detail::cap_height(sc.sigma, sc.mu2);

  auto sqrt_lv = [](const LimitValue& v) {
    return v.is_finite() ? LimitValue::finite(std::sqrt(v.value)) : v;
  };
  rep.limits.push_back({"alpha", alpha});
  if (type_one) {
    rep.limits.push_back({"gamma", sqrt_lv(sm1)});
    rep.limits.push_back({"beta", b1});
  } else {
    rep.limits.push_back({"gamma1", sqrt_lv(sm1)});
    rep.limits.push_back({"gamma2", sqrt_lv(sm2)});
    rep.limits.push_back({"beta1", b1});
    rep.limits.push_back({"beta2", b2});
    rep.limits.push_back({"c", c});
  }
  rep.limits.push_back({type_one ? "H" : "H1", limit_of(delta_pow(1.0) * pow(mu1 / sigma, 0.5))});
  if (!type_one) rep.limits.push_back({"H2", limit_of(delta_pow(1.0) * pow(mu2 / sigma, 0.5))});

  const bool degenerate = !type_one && c.is_zero();
  if (degenerate) {
    const bool ok = limit_of(delta_pow(2.0) * mu1 / mu2).is_zero();
    rep.hypotheses.push_back({"delta^2 mu1/mu2 -> 0", ok});
    if (!ok)
      throw RegimeError("c = lim mu2/mu1 = 0 requires lim delta^2 mu1/mu2 = 0, which fails");
  }

  const std::string table = type_one ? "Table 1" : (degenerate ? "Table 3" : "Table 2");
  const std::string bc = outer == OuterBc::Dirichlet ? "Dirichlet" : "Neumann";
  const std::string gname = type_one ? "gamma" : "gamma1";
  const std::string sname = type_one ? "sigma*mu" : "sigma*mu1";
  const std::string bname = type_one ? "mu*delta" : "mu1*delta";
  const double cval = type_one ? 1.0 : c.numeric();

  // Family of the nonlocal operator for the gamma row.
  auto dtn = [&](Variant v, double H) -> EbcKind {
    if (type_one) return DtnJ{v, g1, H};
    if (degenerate) return DtnLambda{v, g1, H};
    return DtnK{v, g1, H, cval};
  };

  std::string row, col;
  if (outer == OuterBc::Dirichlet) {
    col = "sigma/delta " + detail::tag_text(alpha, "alpha");
    if (alpha.is_infinite()) {
      rep.chosen = DirichletZero{};
      row = sname + " " + detail::tag_text(sm1, gname.c_str());
    } else if (sm1.is_zero()) {
      row = sname + " -> 0";
      rep.chosen = alpha.is_zero() ? EbcKind{NeumannZero{}} : EbcKind{Robin{alpha.value}};
    } else if (sm1.is_finite()) {
      row = "sqrt(" + sname + ") -> " + gname;
      rep.chosen = dtn(Variant::D, alpha.is_zero() ? kInfinity : h1);
    } else if (!degenerate) {
      row = sname + " -> inf";
      rep.chosen = alpha.is_zero() ? EbcKind{ConstantTrace{ZeroFlux{}}}
                                   : EbcKind{ConstantTrace{RobinIntegral{alpha.value}}};
    } else {
      // sigma*mu1 -> inf with c = 0: the sigma*mu2 sub-rows.
      row = "sigma*mu1 -> inf, sigma*mu2 " + detail::tag_text(sm2, "gamma2");
      if (sm2.is_zero()) {
        rep.chosen = alpha.is_zero() ? ConstantInS1{ZeroFlux{}} : ConstantInS1{RobinIntegral{alpha.value}};
      } else if (sm2.is_finite()) {
        rep.chosen = ConstantInS1{DtnD{Variant::D, g2, alpha.is_zero() ? kInfinity : h2}};
      } else {
        // Printed without the alpha term in the alpha column; kept as printed.
        rep.chosen = ConstantTrace{ZeroFlux{}};
      }
    }
  } else {
    col = bname + " " + detail::tag_text(b1, type_one ? "beta" : "beta1");
    if (sm1.is_zero()) {
      row = sname + " -> 0";
      rep.chosen = NeumannZero{};
    } else if (b1.is_zero()) {
      row = sname + " " + detail::tag_text(sm1, gname.c_str());
      rep.chosen = NeumannZero{};
    } else if (sm1.is_finite()) {
      row = "sqrt(" + sname + ") -> " + gname;
      rep.chosen = dtn(Variant::N, b1.is_finite() ? h1 : kInfinity);
    } else if (b1.is_finite()) {
      row = sname + " -> inf";
      rep.chosen = SurfaceDiffusion{b1.value, cval};
    } else if (!degenerate) {
      row = sname + " -> inf";
      rep.chosen = ConstantTrace{ZeroFlux{}};
    } else {
      // mu1*delta -> inf and sigma*mu1 -> inf with c = 0: sub-table over mu2.
      row = "sigma*mu1 -> inf, mu1*delta -> inf; sigma*mu2 " + detail::tag_text(sm2, "gamma2");
      col = "mu2*delta " + detail::tag_text(b2, "beta2");
      if (sm2.is_zero() || b2.is_zero()) {
        rep.chosen = ConstantInS1{ZeroFlux{}};
      } else if (sm2.is_finite()) {
        rep.chosen = ConstantInS1{DtnD{Variant::N, g2, b2.is_finite() ? h2 : kInfinity}};
      } else if (b2.is_finite()) {
        rep.chosen = ConstantInS1{SurfaceDiffusionS2{b2.value}};
      } else {
        rep.chosen = ConstantTrace{ZeroFlux{}};
      }
    }
  }
  rep.table_cell = table + " (" + bc + "): row [" + row + "], column [" + col + "]";
  validate(rep.chosen);
  return rep;
}

} // namespace ebc
