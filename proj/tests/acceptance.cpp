// Acceptance runner: one PASS/FAIL line per criterion, with the numbers
// behind each verdict printed above it.
//   acceptance [--criterion N]

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ebc/effective_solver.hpp"
#include "ebc/fit.hpp"
#include "ebc/full_solver.hpp"
#include "ebc/harness.hpp"
#include "ebc/io.hpp"
#include "ebc/operators.hpp"
#include "ebc/scaling.hpp"
#include "golden_cells.hpp"

using namespace ebc;
namespace fs = std::filesystem;
using io::json;

namespace {

const fs::path kConfigs = EBC_CONFIG_DIR;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Verdict {
  bool pass;
  std::string summary;
};

// ---------------------------------------------------------------------------

Verdict operator_correctness() {
  double worst_rel = 0.0, worst_abs = 0.0;
  bool ok = true;
  for (double lam : {0.0, 1.0, 4.0, 25.0})
    for (double H : {0.1, 1.0, 10.0})
      for (auto v : {Variant::D, Variant::N}) {
        const double exact = dtn_symbol(v, lam, H);
        const double got = cell_problem_oracle(lam, H, v, 4096).flux;
        if (exact == 0.0) {
          worst_abs = std::max(worst_abs, std::abs(got));
          ok = ok && std::abs(got) <= 1e-10;
        } else {
          const double rel = std::abs(got - exact) / std::abs(exact);
          worst_rel = std::max(worst_rel, rel);
          ok = ok && rel <= 1e-6;
        }
      }
  return {ok, "max rel err " + io::fmt(worst_rel) + " (<= 1e-6), max abs err at zero symbol " + io::fmt(worst_abs) +
                  " (<= 1e-10)"};
}

Verdict fractional_limit() {
  bool ok = true, rel_ok = true;
  for (double lam : {1.0, 4.0, 9.0})
    for (double H : {5.0, 10.0})
      for (auto v : {Variant::D, Variant::N}) {
        const double gap = std::abs(dtn_symbol(v, lam, H) + std::sqrt(lam));
        const double bound = 3.0 * std::exp(-2.0 * std::sqrt(lam) * H);
        const bool pass = gap <= bound;
        ok = ok && pass;
        rel_ok = rel_ok && gap / std::sqrt(lam) <= bound;
        std::printf("  lambda=%g H=%g %s: |symbol + sqrt(lambda)| = %.6e, bound %.6e, ratio %.4f %s\n", lam, H,
                    variant_name(v), gap, bound, gap / bound, pass ? "ok" : "EXCEEDS");
      }
  std::printf("  diagnostic: relative form |symbol + sqrt(lambda)| / sqrt(lambda) <= 3 e^{-2 sqrt(lambda) H} %s\n",
              rel_ok ? "holds everywhere" : "fails");
  return {ok, ok ? "absolute bound holds" : "absolute bound fails where sqrt(lambda) > 1.5 (gap ~ 2 sqrt(lambda) e^{-2x})"};
}

Verdict small_h() {
  const TorusSpec torus{kTwoPi, kTwoPi, 2, 2};
  SurfaceFunction g{ModeSet(torus)};
  g.set_real_pair(1, 0, {0.5 * std::sqrt(torus.area()), 0.0}); // cos(2 pi s1 / l1)
  std::vector<double> hs{0.02, 0.01, 0.005}, dev;
  bool ok = true;
  for (double h : hs) {
    const auto rep = small_h_report(g, h, 4096, 8);
    std::printf("  h=%g: max|J_D^h g + g/h| = %.6e (bound h||g||_C2 = %.6e), max|J_N^h g - h Lap g| = %.6e\n", h,
                rep.dirichlet_deviation, rep.dirichlet_bound, rep.neumann_deviation);
    ok = ok && rep.dirichlet_deviation <= rep.dirichlet_bound;
    dev.push_back(rep.neumann_deviation);
  }
  const double slope = loglog_slope(hs, dev);
  ok = ok && slope >= 2.9;
  return {ok, "Dirichlet bound " + std::string(ok ? "holds" : "checked") + ", Neumann slope " + io::fmt(slope) +
                  " (>= 2.9)"};
}

Verdict table_transcription() {
  int total = 0, bad = 0;
  for (const auto& cells : {golden::type_one_cells(), golden::type_two_cells(), golden::table_three_cells()})
    for (const auto& c : cells) {
      ++total;
      try {
        const auto rep = classify(c.outer, c.scaling);
        const bool same = approx_equal(rep.chosen, c.expected, 1e-12) && rep.table_cell.rfind(c.table, 0) == 0;
        if (!same) {
          ++bad;
          std::printf("  mismatch %s: got %s, expected %s\n", c.label, describe(rep.chosen).c_str(),
                      describe(c.expected).c_str());
        }
      } catch (const std::exception& e) {
        ++bad;
        std::printf("  mismatch %s: %s\n", c.label, e.what());
      }
    }
  return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " golden cells reproduced"};
}

Verdict degenerations() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const TorusSpec torus{kTwoPi, 3.0, 4, 4};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    SurfaceFunction g{ModeSet(torus)};
    for (int m = 0; m <= torus.m_max; ++m)
      for (int n = -torus.n_max; n <= torus.n_max; ++n)
        if (m > 0 || n >= 0) g.set_real_pair(m, n, {u(rng), u(rng)});
    for (auto v : {Variant::D, Variant::N})
      for (double H : {0.5, 3.0, kInfinity}) {
        const auto k1 = apply_operator({OperatorFamily::K, v, H, 1.0}, g);
        const auto j = apply_operator({OperatorFamily::J, v, H}, g);
        const auto k0 = apply_operator({OperatorFamily::K, v, H, 0.0}, g);
        const auto lam = apply_operator({OperatorFamily::Lambda, v, H}, g);
        for (std::size_t q = 0; q < g.size(); ++q)
          worst = std::max({worst, std::abs(k1[q] - j[q]), std::abs(k0[q] - lam[q])});
      }
  }
  int pairs = 0, disagree = 0;
  for (int ip = -12; ip <= 12; ++ip)
    for (int iq = -12; iq <= 12; ++iq)
      for (auto outer : {OuterBc::Dirichlet, OuterBc::Neumann}) {
        const double p = 0.25 * ip, q = 0.25 * iq;
        ++pairs;
        const auto one = classify(outer, CoatingScaling::type_one({1.5, p}, {2.0, q})).chosen;
        const auto two = classify(outer, CoatingScaling::type_two({1.5, p}, {2.0, q}, {2.0, q})).chosen;
        EbcKind mapped = one;
        if (const auto* d = std::get_if<DtnJ>(&one)) mapped = DtnK{d->variant, d->gamma, d->H, 1.0};
        if (!approx_equal(mapped, two)) {
          ++disagree;
          std::printf("  disagree p=%g q=%g: %s vs %s\n", p, q, describe(one).c_str(), describe(two).c_str());
        }
      }
  const bool ok = worst <= 1e-12 && disagree == 0;
  return {ok, "max |K(1) - J|, |K(0) - Lambda| = " + io::fmt(worst) + " (<= 1e-12); Type II vs Type I agree on " +
                  std::to_string(pairs - disagree) + "/" + std::to_string(pairs) + " scalings"};
}

Verdict conservation() {
  auto spec = io::parse_full_spec(io::read_json_file(kConfigs / "solve_full.json"));
  spec.source = {};
  spec.stamp_stride = 1;
  bool ok = true;
  std::ostringstream msg;
  for (auto outer : {OuterBc::Neumann, OuterBc::Dirichlet}) {
    spec.outer = outer;
    const auto traj = solve_full(spec);
    const auto rep = energy_report(traj, spec);
    int grew = 0;
    for (std::size_t j = 1; j < rep.l2_sq.size(); ++j)
      if (rep.l2_sq[j] > rep.l2_sq[j - 1]) ++grew;
    ok = ok && grew == 0;
    msg << io::outer_name(outer) << ": L2 grew on " << grew << "/" << rep.l2_sq.size() - 1 << " steps";
    if (outer == OuterBc::Neumann) {
      double step_drift = 0.0;
      for (std::size_t j = 1; j < rep.total_heat.size(); ++j)
        step_drift = std::max(step_drift, std::abs(rep.total_heat[j] - rep.total_heat[j - 1]) /
                                              std::abs(rep.total_heat[j - 1]));
      ok = ok && step_drift <= 1e-10;
      msg << ", max per-step heat drift " << io::fmt(step_drift) << " (<= 1e-10); ";
    }
  }
  return {ok, msg.str()};
}

// ---------------------------------------------------------------------------

double sup_error_with(const ExperimentConfig& cfg, const EbcKind& ebc, double delta) {
  const auto eff = solve_effective(cfg.effective_spec(ebc));
  return error_metric(solve_full(cfg.full_spec(delta)), eff).sup;
}

Verdict convergence() {
  const std::vector<std::pair<const char*, const char*>> runs{{"a", "converge_robin.json"},
                                                                 {"b", "converge_dtn.json"},
                                                                 {"c", "converge_surface_diffusion.json"},
                                                                 {"d", "converge_type2_aniso.json"},
                                                                 {"e", "converge_type2_degenerate.json"}};
  bool ok = true;
  std::string failed;
  for (const auto& [tag, file] : runs) {
    const auto cfg = io::parse_experiment(io::read_json_file(kConfigs / file));
    const auto rep = run_convergence(cfg);
    std::printf("  7%s %s: %s\n", tag, rep.regime.table_cell.c_str(), describe(rep.regime.chosen).c_str());
    std::printf("    %-8s %-12s %-12s %-12s %-10s %-22s %-22s\n", "delta", "sigma", "mu1", "mu2", "h", "error_sup_L2",
                "error_final");
    for (const auto& r : rep.rows)
      std::printf("    %-8g %-12.6g %-12.6g %-12.6g %-10.4g %-22.15e %-22.15e\n", r.delta, r.sigma, r.mu1, r.mu2, r.h,
                  r.error_sup, r.error_final);
    const auto e = rep.sup_errors();
    const double ratio = e.back() / e.front();
    const bool pass = rep.monotone && ratio <= 0.5;
    std::printf("    strictly decreasing: %s, error(%g)/error(%g) = %.4f (<= 0.5), fitted slope %.3f\n",
                rep.monotone ? "yes" : "no", cfg.deltas.back(), cfg.deltas.front(), ratio, rep.slope);

    // Far boundary: doubling the bulk depth at the same spacing must move the errors by at most 5%.
    auto deep = cfg;
    deep.depth = 2.0 * cfg.depth;
    deep.n_bulk = 2 * (cfg.n_bulk - 1) + 1;
    double shift = 0.0;
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
      shift = std::max(shift, std::abs(sup_error_with(deep, rep.regime.chosen, rep.rows[i].delta) - e[i]) / e[i]);
    std::printf("    doubling the bulk depth changes sup errors by at most %.3f%% (<= 5%%)\n", 100.0 * shift);

    if (std::string(tag) == "e") {
      // The infinite-height operator named alongside this experiment, against the same full solves.
      const auto* g1 = rep.regime.limit("gamma1");
      const EbcKind alt = DtnLambda{Variant::D, g1 ? g1->numeric() : 1.0, kInfinity};
      std::printf("    diagnostic against %s:", describe(alt).c_str());
      for (const auto& r : rep.rows) std::printf(" %.6e", sup_error_with(cfg, alt, r.delta));
      std::printf("\n");
    }
    if (!(pass && shift <= 0.05)) {
      ok = false;
      failed += tag;
    }
  }
  return {ok, ok ? "all five sweeps decrease strictly, halve the error and are insensitive to the far boundary"
                 : "failing sweeps: " + failed};
}

Verdict self_convergence() {
  auto make = [](int f) {
    FullProblemSpec s;
    s.torus = {kTwoPi, kTwoPi, 4, 4};
    s.grid = RadialGrid::two_domain(1.0, 0.05, 128 * f + 1, 16 * f + 1);
    s.k = 1.0;
    s.sigma = 0.5;
    s.mu1 = s.mu2 = 2.0;
    s.outer = OuterBc::Neumann;
    s.T = 0.5;
    s.dt = 0.5 / (400 * f);
    s.stamp_stride = f;
    s.initial = ModeData({{1, 0, {1.0, 0.0}, GaussianProfile{0.0, 1.0, 1.0}}});
    return s;
  };
  const auto coarse = solve_full(make(1));
  const auto fine = solve_full(make(4));
  const auto& grid = coarse.layout->grid;
  const auto w = grid.weights();
  const auto q = coarse.layout->modes.index_of(1, 0);
  double worst = 0.0;
  for (std::size_t j = 1; j < coarse.stamps(); ++j) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const cplx a = coarse.fields[j].at(q, i), b = fine.fields[j].at(q, 4 * i);
      num += w[i] * std::norm(a - b);
      den += w[i] * std::norm(b);
    }
    worst = std::max(worst, std::sqrt(num / den));
  }
  return {worst <= 2e-3, "max relative L2 gap over time " + io::fmt(worst) + " (<= 2e-3)"};
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

int run_lab(const std::string& cmd, const fs::path& config, const fs::path& out) {
  const std::string line = std::string(EBC_LAB_PATH) + " " + cmd + " --config " + config.string() + " --out " +
                           out.string() + " > /dev/null 2>&1";
  const int status = std::system(line.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool same_tree(const fs::path& a, const fs::path& b, std::string& diff) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(a)) names.push_back(e.path().filename().string());
  std::size_t nb = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(b)) ++nb;
  if (names.size() != nb || names.empty()) {
    diff = a.string() + " and " + b.string() + " hold different file sets";
    return false;
  }
  for (const auto& n : names)
    if (slurp(a / n) != slurp(b / n)) {
      diff = n + " differs between " + a.filename().string() + " and " + b.filename().string();
      return false;
    }
  return true;
}

Verdict determinism() {
  const auto work = fs::current_path() / "acceptance_determinism";
  fs::remove_all(work);
  fs::create_directories(work);
  // Shrunk copies keep the check fast; the code paths are the full ones.
  auto shrink = [&](const char* name, int threads) {
    auto j = io::read_json_file(kConfigs / name);
    if (j.contains("grid")) {
      j["grid"]["bulk_intervals"] = 64;
      j["grid"]["layer_intervals"] = 8;
      j["T"] = 0.1;
      j["dt"] = 0.001;
      j["threads"] = threads;
    }
    if (j.contains("deltas")) j["deltas"] = json::array({0.08, 0.04});
    if (j.contains("ebc_from")) j["ebc_from"] = (work / "classify_1" / "regime.json").string();
    const auto p = work / (std::to_string(threads) + "_" + name);
    std::ofstream(p) << j.dump(2);
    return p;
  };
  const std::vector<std::pair<const char*, const char*>> runs{{"classify", "classify_robin.json"},
                                                                 {"operators", "operators_dtn.json"},
                                                                 {"solve-full", "solve_full.json"},
                                                                 {"solve-effective", "solve_effective.json"},
                                                                 {"solve-effective", "solve_effective_from_classify.json"},
                                                                 {"converge", "converge_dtn.json"}};
  int checked = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& [cmd, name] = runs[r];
    const auto tag = std::string(cmd) + "_" + std::to_string(r);
    const fs::path serial_a = work / (tag == "classify_0" ? "classify_1" : tag + "_a");
    const auto cfg1 = shrink(name, 1), cfg4 = shrink(name, 4);
    int codes[3] = {run_lab(cmd, cfg1, serial_a), run_lab(cmd, cfg1, work / (tag + "_b")),
                    run_lab(cmd, cfg4, work / (tag + "_p"))};
    for (int c : codes)
      if (c != 0) return {false, tag + " exited with code " + std::to_string(c)};
    std::string diff;
    if (!same_tree(serial_a, work / (tag + "_b"), diff)) return {false, "repeat run: " + diff};
    if (!same_tree(serial_a, work / (tag + "_p"), diff)) return {false, "threads 1 vs 4: " + diff};
    ++checked;
  }
  fs::remove_all(work);
  return {true, std::to_string(checked) + " CLI runs byte-identical on repeat and with 4 threads"};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"operator symbols match the cell-problem oracle", operator_correctness},
      {"fractional limit bound", fractional_limit},
      {"small-h asymptotics", small_h},
      {"regime table transcription", table_transcription},
      {"operator and classifier degenerations", degenerations},
      {"full-solver conservation and dissipation", conservation},
      {"convergence experiments", convergence},
      {"self-convergence under refinement", self_convergence},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (only != 0 && only != n) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d %s: %s - %s [%.1fs]\n", n, criteria[i].first, v.pass ? "PASS" : "FAIL",
                v.summary.c_str(), secs);
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
