#pragma once

// JSON configs, JSON/CSV reports and atomic file output for the CLI.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebc/effective_solver.hpp"
#include "ebc/error.hpp"
#include "ebc/full_solver.hpp"
#include "ebc/harness.hpp"
#include "ebc/operators.hpp"
#include "ebc/scaling.hpp"

namespace ebc::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Formatting

inline std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {
inline void dump(const json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
  case json::value_t::object: {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(it.key()).dump() + ": ";
      dump(it.value(), indent, depth + 1, out);
    }
    out += "\n" + close_pad + "}";
    return;
  }
  case json::value_t::array: {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      dump(j[i], indent, depth + 1, out);
    }
    out += "\n" + close_pad + "]";
    return;
  }
  case json::value_t::number_float: {
    const double x = j.get<double>();
    out += std::isfinite(x) ? fmt(x) : json(fmt(x)).dump();
    return;
  }
  default: out += j.dump();
  }
}
} // namespace detail

/// Pretty JSON with every float printed to 17 significant digits.
inline std::string dump_json(const json& j) {
  std::string out;
  detail::dump(j, 2, 0, out);
  out += "\n";
  return out;
}

/// Writes through a sibling temp file and renames it over the target.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os << content;
    os.flush();
    if (!os) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file " + path.string());
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Field access with config errors

namespace detail {
inline const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return j.at(key);
}
inline double number(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return kInfinity;
  }
  throw ConfigError(std::string("field '") + what + "' must be a number");
}
inline double num(const json& j, const char* key) { return number(need(j, key), key); }
inline double num_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j.at(key), key) : fallback;
}
inline int integer(const json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_number_integer()) throw ConfigError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}
inline int int_or(const json& j, const char* key, int fallback) { return j.contains(key) ? integer(j, key) : fallback; }
inline std::string str(const json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}
inline json height(double H) { return std::isinf(H) ? json("inf") : json(H); }
} // namespace detail

// ---------------------------------------------------------------------------
// Enumerations

inline OuterBc parse_outer(const std::string& s) {
  if (s == "dirichlet") return OuterBc::Dirichlet;
  if (s == "neumann") return OuterBc::Neumann;
  throw ConfigError("outer_bc must be 'dirichlet' or 'neumann', got '" + s + "'");
}
inline const char* outer_name(OuterBc o) { return o == OuterBc::Dirichlet ? "dirichlet" : "neumann"; }

inline Variant parse_variant(const std::string& s) {
  if (s == "D") return Variant::D;
  if (s == "N") return Variant::N;
  throw ConfigError("variant must be 'D' or 'N', got '" + s + "'");
}

inline Scheme parse_scheme(const std::string& s) {
  if (s == "implicit_euler") return Scheme::ImplicitEuler;
  if (s == "trapezoidal") return Scheme::Trapezoidal;
  throw ConfigError("scheme must be 'implicit_euler' or 'trapezoidal', got '" + s + "'");
}

inline OperatorFamily parse_family(const std::string& s) {
  if (s == "J") return OperatorFamily::J;
  if (s == "K") return OperatorFamily::K;
  if (s == "Lambda") return OperatorFamily::Lambda;
  if (s == "D") return OperatorFamily::D;
  throw ConfigError("operator family must be J, K, Lambda or D, got '" + s + "'");
}

// ---------------------------------------------------------------------------
// Geometry and data

inline TorusSpec parse_torus(const json& j) {
  const auto& t = detail::need(j, "torus");
  TorusSpec s{detail::num(t, "l1"), detail::num(t, "l2"), detail::integer(t, "m_max"), detail::integer(t, "n_max")};
  s.validate();
  return s;
}

inline cplx parse_amplitude(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError("amplitude must be a number or [re, im]");
}

inline RadialProfile parse_profile(const json& j) {
  const auto type = detail::str(j, "type");
  if (type == "constant") return ConstantProfile{detail::num(j, "a")};
  if (type == "linear") return LinearProfile{detail::num(j, "a"), detail::num(j, "b")};
  if (type == "gaussian")
    return GaussianProfile{detail::num(j, "center"), detail::num(j, "width"), detail::num_or(j, "amplitude", 1.0)};
  throw ConfigError("profile type must be constant, linear or gaussian, got '" + type + "'");
}

inline TimeFactor parse_time(const json& j) {
  const auto type = detail::str(j, "type");
  if (type == "unit") return UnitTime{};
  if (type == "exp") return ExpTime{detail::num(j, "rate")};
  if (type == "cos") return CosTime{detail::num(j, "omega")};
  throw ConfigError("time factor type must be unit, exp or cos, got '" + type + "'");
}

/// A mode list; an absent key means zero data.
inline ModeData parse_mode_data(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw ConfigError(std::string("field '") + key + "' must be an array of mode terms");
  std::vector<ModeTerm> terms;
  for (const auto& t : arr) {
    ModeTerm m;
    m.m = detail::integer(t, "m");
    m.n = detail::integer(t, "n");
    m.amplitude = t.contains("amplitude") ? parse_amplitude(t.at("amplitude")) : cplx{1.0, 0.0};
    m.profile = parse_profile(detail::need(t, "profile"));
    if (t.contains("time")) m.time = parse_time(t.at("time"));
    terms.push_back(m);
  }
  return ModeData(std::move(terms));
}

/// Real surface data for the operators subcommand: each (m, n, amplitude)
/// also sets the conjugate coefficient on (-m, -n).
inline SurfaceFunction parse_surface_data(const json& j, const TorusSpec& torus) {
  SurfaceFunction g{ModeSet(torus)};
  for (const auto& t : detail::need(j, "data")) {
    const int m = detail::integer(t, "m"), n = detail::integer(t, "n");
    if (!g.modes().contains(m, n)) (void)g.modes().index_of(m, n);
    g.set_real_pair(m, n, parse_amplitude(detail::need(t, "amplitude")));
  }
  return g;
}

struct TimeSettings {
  double T;
  double dt;
  Scheme scheme;
  int stamp_stride;
  int threads;
};

inline TimeSettings parse_time_settings(const json& j) {
  TimeSettings s{};
  s.T = detail::num(j, "T");
  s.dt = detail::num_or(j, "dt", s.T / 400.0);
  s.scheme = j.contains("scheme") ? parse_scheme(detail::str(j, "scheme")) : Scheme::ImplicitEuler;
  s.stamp_stride = detail::int_or(j, "stamp_stride", 1);
  s.threads = detail::int_or(j, "threads", 1);
  (void)make_time_grid(s.T, s.dt);
  if (s.stamp_stride < 1) throw ConfigError("stamp_stride must be >= 1");
  if (s.threads < 1) throw ConfigError("threads must be >= 1");
  return s;
}

struct GridSettings {
  double depth;
  int bulk_intervals;
  int layer_intervals;
};

inline GridSettings parse_grid(const json& j) {
  GridSettings g{1.0, 128, 16};
  if (j.contains("grid")) {
    const auto& s = j.at("grid");
    g.depth = detail::num_or(s, "depth", g.depth);
    g.bulk_intervals = detail::int_or(s, "bulk_intervals", g.bulk_intervals);
    g.layer_intervals = detail::int_or(s, "layer_intervals", g.layer_intervals);
  }
  if (!(g.depth > 0.0) || !std::isfinite(g.depth)) throw ConfigError("grid depth must be positive");
  if (g.bulk_intervals < 2 || g.layer_intervals < 1) throw ConfigError("grid needs >= 2 bulk and >= 1 layer intervals");
  return g;
}

// ---------------------------------------------------------------------------
// Scaling laws and EBCs

inline ScalingLaw parse_law(const json& j, const char* key) {
  const auto& v = detail::need(j, key);
  return ScalingLaw(detail::num_or(v, "prefactor", 1.0), detail::num(v, "exponent"));
}

inline CoatingScaling parse_coating(const json& j) {
  const auto& c = detail::need(j, "coating");
  const auto type = detail::str(c, "type");
  if (type == "I") {
    auto s = CoatingScaling::type_one(parse_law(c, "sigma"), parse_law(c, "mu"));
    s.validate();
    return s;
  }
  if (type == "II") return CoatingScaling::type_two(parse_law(c, "sigma"), parse_law(c, "mu1"), parse_law(c, "mu2"));
  throw ConfigError("coating type must be 'I' or 'II', got '" + type + "'");
}

inline json law_json(const ScalingLaw& l) { return json{{"prefactor", l.prefactor}, {"exponent", l.exponent}}; }

inline json coating_json(const CoatingScaling& s) {
  json j;
  j["type"] = s.type == CoatingType::TypeI ? "I" : "II";
  j["sigma"] = law_json(s.sigma);
  if (s.type == CoatingType::TypeI) j["mu"] = law_json(s.mu1);
  else {
    j["mu1"] = law_json(s.mu1);
    j["mu2"] = law_json(s.mu2);
  }
  return j;
}

inline json ebc_json(const EbcKind& e) {
  using detail::height;
  return std::visit(
      overloaded{
          [](const DirichletZero&) { return json{{"kind", "DirichletZero"}}; },
          [](const NeumannZero&) { return json{{"kind", "NeumannZero"}}; },
          [](const Robin& r) { return json{{"kind", "Robin"}, {"alpha", r.alpha}}; },
          [](const DtnJ& d) {
            return json{{"kind", "DtnJ"}, {"variant", variant_name(d.variant)}, {"gamma", d.gamma}, {"H", height(d.H)}};
          },
          [](const DtnK& d) {
            return json{{"kind", "DtnK"}, {"variant", variant_name(d.variant)}, {"gamma1", d.gamma1},
                        {"H", height(d.H)}, {"c", d.c}};
          },
          [](const DtnLambda& d) {
            return json{{"kind", "DtnLambda"}, {"variant", variant_name(d.variant)}, {"gamma1", d.gamma1},
                        {"H", height(d.H)}};
          },
          [](const SurfaceDiffusion& s) { return json{{"kind", "SurfaceDiffusion"}, {"beta", s.beta}, {"c", s.c}}; },
          [](const ConstantTrace& t) {
            json rule = std::holds_alternative<RobinIntegral>(t.rule)
                            ? json{{"kind", "RobinIntegral"}, {"alpha", std::get<RobinIntegral>(t.rule).alpha}}
                            : json{{"kind", "ZeroFlux"}};
            return json{{"kind", "ConstantTrace"}, {"rule", rule}};
          },
          [](const ConstantInS1& t) {
            json rule = std::visit(
                overloaded{
                    [](const ZeroFlux&) { return json{{"kind", "ZeroFlux"}}; },
                    [](const RobinIntegral& r) { return json{{"kind", "RobinIntegral"}, {"alpha", r.alpha}}; },
                    [](const DtnD& d) {
                      return json{{"kind", "DtnD"}, {"variant", variant_name(d.variant)}, {"gamma2", d.gamma2},
                                  {"H", height(d.H)}};
                    },
                    [](const SurfaceDiffusionS2& s) { return json{{"kind", "SurfaceDiffusionS2"}, {"beta2", s.beta2}}; },
                },
                t.rule);
            return json{{"kind", "ConstantInS1"}, {"rule", rule}};
          },
      },
      e);
}

inline EbcKind parse_ebc(const json& j) {
  using detail::num;
  const auto kind = detail::str(j, "kind");
  auto var = [&] { return parse_variant(detail::str(j, "variant")); };
  EbcKind e;
  if (kind == "DirichletZero") e = DirichletZero{};
  else if (kind == "NeumannZero") e = NeumannZero{};
  else if (kind == "Robin") e = Robin{num(j, "alpha")};
  else if (kind == "DtnJ") e = DtnJ{var(), num(j, "gamma"), num(j, "H")};
  else if (kind == "DtnK") e = DtnK{var(), num(j, "gamma1"), num(j, "H"), num(j, "c")};
  else if (kind == "DtnLambda") e = DtnLambda{var(), num(j, "gamma1"), num(j, "H")};
  else if (kind == "SurfaceDiffusion") e = SurfaceDiffusion{num(j, "beta"), detail::num_or(j, "c", 1.0)};
  else if (kind == "ConstantTrace") {
    const auto& r = detail::need(j, "rule");
    const auto rk = detail::str(r, "kind");
    if (rk == "ZeroFlux") e = ConstantTrace{ZeroFlux{}};
    else if (rk == "RobinIntegral") e = ConstantTrace{RobinIntegral{num(r, "alpha")}};
    else throw ConfigError("ConstantTrace rule must be ZeroFlux or RobinIntegral, got '" + rk + "'");
  } else if (kind == "ConstantInS1") {
    const auto& r = detail::need(j, "rule");
    const auto rk = detail::str(r, "kind");
    if (rk == "ZeroFlux") e = ConstantInS1{ZeroFlux{}};
    else if (rk == "RobinIntegral") e = ConstantInS1{RobinIntegral{num(r, "alpha")}};
    else if (rk == "DtnD")
      e = ConstantInS1{DtnD{parse_variant(detail::str(r, "variant")), num(r, "gamma2"), num(r, "H")}};
    else if (rk == "SurfaceDiffusionS2") e = ConstantInS1{SurfaceDiffusionS2{num(r, "beta2")}};
    else throw ConfigError("unknown ConstantInS1 rule '" + rk + "'");
  } else
    throw ConfigError("unknown EBC kind '" + kind + "'");
  validate(e);
  return e;
}

inline json limit_json(const LimitValue& v) {
  if (v.is_zero()) return "zero";
  if (v.is_infinite()) return "infinity";
  return v.value;
}

inline json regime_json(const RegimeReport& r, const CoatingScaling& scaling) {
  json limits = json::object();
  for (const auto& l : r.limits) limits[l.name] = limit_json(l.value);
  json flags = json::array();
  for (const auto& h : r.hypotheses) flags.push_back(json{{"name", h.name}, {"holds", h.holds}});
  json params{{"outer_bc", outer_name(r.outer_bc)}, {"coating", coating_json(scaling)}};
  return json{{"limits", limits},
              {"hypothesis_flags", flags},
              {"ebc_kind", ebc_json(r.chosen)},
              {"ebc_text", describe(r.chosen)},
              {"parameters", params},
              {"table_cell", r.table_cell}};
}

// ---------------------------------------------------------------------------
// Problem specs

inline FullProblemSpec parse_full_spec(const json& j) {
  FullProblemSpec s;
  s.torus = parse_torus(j);
  const auto g = parse_grid(j);
  const double delta = detail::num(j, "delta");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("delta must be positive");
  s.grid = RadialGrid::two_domain(g.depth, delta, g.bulk_intervals + 1, g.layer_intervals + 1);
  s.k = detail::num_or(j, "k", 1.0);
  s.sigma = detail::num(j, "sigma");
  if (j.contains("mu")) s.mu1 = s.mu2 = detail::num(j, "mu");
  else {
    s.mu1 = detail::num(j, "mu1");
    s.mu2 = detail::num(j, "mu2");
  }
  s.outer = parse_outer(detail::str(j, "outer_bc"));
  s.source = parse_mode_data(j, "source");
  s.initial = parse_mode_data(j, "initial");
  const auto t = parse_time_settings(j);
  s.T = t.T;
  s.dt = t.dt;
  s.scheme = t.scheme;
  s.stamp_stride = t.stamp_stride;
  s.threads = t.threads;
  s.validate();
  s.source.check_band(ModeSet(s.torus));
  s.initial.check_band(ModeSet(s.torus));
  return s;
}

/// `ebc` inline, or `ebc_from` naming a classify output (relative paths are
/// resolved against the config's directory).
inline EffectiveProblemSpec parse_effective_spec(const json& j, const std::filesystem::path& base_dir) {
  EffectiveProblemSpec s;
  s.torus = parse_torus(j);
  const auto g = parse_grid(j);
  s.grid = RadialGrid::bulk_only(g.depth, g.bulk_intervals + 1);
  s.k = detail::num_or(j, "k", 1.0);
  if (j.contains("ebc")) s.ebc = parse_ebc(j.at("ebc"));
  else if (j.contains("ebc_from")) {
    std::filesystem::path p = detail::str(j, "ebc_from");
    if (p.is_relative()) p = base_dir / p;
    s.ebc = parse_ebc(detail::need(read_json_file(p), "ebc_kind"));
  } else
    throw ConfigError("effective problem needs 'ebc' or 'ebc_from'");
  s.source = parse_mode_data(j, "source");
  s.initial = parse_mode_data(j, "initial");
  const auto t = parse_time_settings(j);
  s.T = t.T;
  s.dt = t.dt;
  s.scheme = t.scheme;
  s.stamp_stride = t.stamp_stride;
  s.threads = t.threads;
  s.validate();
  s.source.check_band(ModeSet(s.torus));
  s.initial.check_band(ModeSet(s.torus));
  return s;
}

inline ExperimentConfig parse_experiment(const json& j) {
  ExperimentConfig c;
  c.torus = parse_torus(j);
  const auto g = parse_grid(j);
  c.depth = g.depth;
  c.n_bulk = g.bulk_intervals + 1;
  c.n_layer = g.layer_intervals + 1;
  c.outer = parse_outer(detail::str(j, "outer_bc"));
  c.scaling = parse_coating(j);
  c.k = detail::num_or(j, "k", 1.0);
  c.source = parse_mode_data(j, "source");
  c.initial = parse_mode_data(j, "initial");
  const auto t = parse_time_settings(j);
  c.T = t.T;
  c.dt = t.dt;
  c.scheme = t.scheme;
  c.threads = t.threads;
  const auto& d = detail::need(j, "deltas");
  if (!d.is_array()) throw ConfigError("deltas must be an array");
  for (const auto& x : d) c.deltas.push_back(detail::number(x, "deltas"));
  c.validate();
  c.source.check_band(ModeSet(c.torus));
  c.initial.check_band(ModeSet(c.torus));
  return c;
}

inline OperatorSpec parse_operator(const json& j) {
  const auto& o = detail::need(j, "operator");
  OperatorSpec s;
  s.family = parse_family(detail::str(o, "family"));
  s.variant = parse_variant(detail::str(o, "variant"));
  s.H = detail::num_or(o, "H", kInfinity);
  s.c = detail::num_or(o, "c", 1.0);
  s.gamma = detail::num_or(o, "gamma", 1.0);
  s.validate();
  return s;
}

// ---------------------------------------------------------------------------
// Tables

/// One row per stamp selected by `every`, mode and node; the final stamp is
/// always included.
inline std::string snapshot_csv(const Trajectory& traj, int every) {
  std::ostringstream os;
  os << "t,m,n,r,coeff_re,coeff_im\n";
  const auto& layout = *traj.layout;
  for (std::size_t j = 0; j < traj.stamps(); ++j) {
    if (static_cast<int>(j) % every != 0 && j + 1 != traj.stamps()) continue;
    const auto& f = traj.fields[j];
    for (std::size_t q = 0; q < layout.modes.size(); ++q)
      for (std::size_t i = 0; i < layout.grid.size(); ++i) {
        const auto& md = layout.modes[q];
        const cplx c = f.at(q, i);
        os << fmt(f.time()) << ',' << md.m << ',' << md.n << ',' << fmt(layout.grid.r(i)) << ',' << fmt(c.real())
           << ',' << fmt(c.imag()) << '\n';
      }
  }
  return os.str();
}

inline std::string energy_csv(const EnergyReport& r) {
  std::ostringstream os;
  os << "t,l2_sq,dirichlet_energy,total_heat\n";
  for (std::size_t j = 0; j < r.time.size(); ++j)
    os << fmt(r.time[j]) << ',' << fmt(r.l2_sq[j]) << ',' << fmt(r.dirichlet_energy[j]) << ','
       << fmt(r.total_heat[j]) << '\n';
  return os.str();
}

inline std::string trace_csv(const TraceReport& r) {
  std::ostringstream os;
  os << "t,m,n,trace_re,trace_im\n";
  for (std::size_t j = 0; j < r.time.size(); ++j)
    for (std::size_t q = 0; q < r.traces[j].size(); ++q) {
      const auto& md = r.traces[j].modes()[q];
      os << fmt(r.time[j]) << ',' << md.m << ',' << md.n << ',' << fmt(r.traces[j][q].real()) << ','
         << fmt(r.traces[j][q].imag()) << '\n';
    }
  return os.str();
}

inline std::string operators_csv(const OperatorSpec& spec, const SurfaceFunction& g) {
  const auto out = apply_operator(spec, g);
  std::ostringstream os;
  os << "m,n,lambda_eff,symbol,flux_re,flux_im\n";
  for (std::size_t q = 0; q < g.size(); ++q) {
    const auto& md = g.modes()[q];
    if (spec.family == OperatorFamily::D && md.m != 0) continue;
    os << md.m << ',' << md.n << ',' << fmt(spec.lambda_eff(md)) << ',' << fmt(spec.symbol(md)) << ','
       << fmt(out[q].real()) << ',' << fmt(out[q].imag()) << '\n';
  }
  return os.str();
}

inline std::string convergence_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "delta,sigma,mu1,mu2,h,error_sup_L2,error_final\n";
  for (const auto& row : r.rows)
    os << fmt(row.delta) << ',' << fmt(row.sigma) << ',' << fmt(row.mu1) << ',' << fmt(row.mu2) << ','
       << fmt(row.h) << ',' << fmt(row.error_sup) << ',' << fmt(row.error_final) << '\n';
  return os.str();
}

inline json convergence_json(const ConvergenceReport& r, const CoatingScaling& scaling) {
  json errors = json::array();
  for (const auto& row : r.rows)
    errors.push_back(json{{"delta", row.delta}, {"error_sup_L2", row.error_sup}, {"error_final", row.error_final}});
  return json{{"regime", regime_json(r.regime, scaling)},
              {"slope", r.slope},
              {"errors", errors},
              {"monotone", r.monotone},
              {"flags", r.flags}};
}

} // namespace ebc::io
