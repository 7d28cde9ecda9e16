// ebc_lab: command-line front end.
//   ebc_lab <classify|operators|solve-full|solve-effective|converge> --config FILE [--out DIR]
// Exit status: 0 ok, 2 config error, 3 unsupported regime, 4 solver failure.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ebc/effective_solver.hpp"
#include "ebc/full_solver.hpp"
#include "ebc/harness.hpp"
#include "ebc/io.hpp"
#include "ebc/operators.hpp"
#include "ebc/scaling.hpp"

namespace fs = std::filesystem;
using ebc::io::json;

namespace {

int report_error(int code, const char* kind, const std::string& message) {
  const json err{{"error", json{{"code", code}, {"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
  return code;
}

int snapshot_every(const json& cfg, std::size_t stamps) {
  if (cfg.contains("snapshot_every")) {
    const auto& v = cfg.at("snapshot_every");
    if (!v.is_number_integer() || v.get<int>() < 1) throw ebc::ConfigError("snapshot_every must be a positive integer");
    return v.get<int>();
  }
  return std::max<int>(1, static_cast<int>(stamps / 10));
}

void run_classify(const json& cfg, const fs::path& out) {
  const auto outer = ebc::io::parse_outer(ebc::io::detail::str(cfg, "outer_bc"));
  const auto scaling = ebc::io::parse_coating(cfg);
  const auto report = ebc::classify(outer, scaling);
  ebc::io::write_atomic(out / "regime.json", ebc::io::dump_json(ebc::io::regime_json(report, scaling)));
}

void run_operators(const json& cfg, const fs::path& out) {
  const auto torus = ebc::io::parse_torus(cfg);
  const auto spec = ebc::io::parse_operator(cfg);
  const auto g = ebc::io::parse_surface_data(cfg, torus);
  ebc::io::write_atomic(out / "operators.csv", ebc::io::operators_csv(spec, g));
}

void run_solve_full(const json& cfg, const fs::path& out) {
  const auto spec = ebc::io::parse_full_spec(cfg);
  const auto traj = ebc::solve_full(spec);
  const auto energy = ebc::energy_report(traj, spec);
  ebc::io::write_atomic(out / "snapshots.csv", ebc::io::snapshot_csv(traj, snapshot_every(cfg, traj.stamps())));
  ebc::io::write_atomic(out / "energy.csv", ebc::io::energy_csv(energy));
  json summary{{"stamps", traj.stamps()},
               {"dt", traj.dt},
               {"l2_nonincreasing", energy.l2_nonincreasing()},
               {"heat_drift", energy.heat_drift()},
               {"lemma_lhs", energy.lemma_lhs},
               {"lemma_rhs", energy.lemma_rhs}};
  if (traj.dense()) {
    const auto jump = ebc::interface_flux_jump(traj, spec);
    summary["interface_flux_jump_rel"] = jump.max_rel;
  }
  ebc::io::write_atomic(out / "summary.json", ebc::io::dump_json(summary));
}

void run_solve_effective(const json& cfg, const fs::path& out, const fs::path& config_dir) {
  const auto spec = ebc::io::parse_effective_spec(cfg, config_dir);
  const auto traj = ebc::solve_effective(spec);
  const auto trace = ebc::trace_report(traj, spec);
  ebc::io::write_atomic(out / "snapshots.csv", ebc::io::snapshot_csv(traj, snapshot_every(cfg, traj.stamps())));
  ebc::io::write_atomic(out / "trace.csv", ebc::io::trace_csv(trace));
  const json summary{{"ebc_kind", ebc::io::ebc_json(spec.ebc)},
                     {"ebc_text", ebc::describe(spec.ebc)},
                     {"stamps", traj.stamps()},
                     {"dt", traj.dt},
                     {"constraint_violation", trace.constraint_violation},
                     {"flux_residual", trace.flux_residual},
                     {"violations", trace.violations}};
  ebc::io::write_atomic(out / "summary.json", ebc::io::dump_json(summary));
  if (!trace.ok()) throw ebc::SolverError("trace invariants violated: " + trace.violations.front());
}

void run_converge(const json& cfg, const fs::path& out) {
  const auto exp = ebc::io::parse_experiment(cfg);
  const auto report = ebc::run_convergence(exp);
  ebc::io::write_atomic(out / "convergence.csv", ebc::io::convergence_csv(report));
  ebc::io::write_atomic(out / "summary.json", ebc::io::dump_json(ebc::io::convergence_json(report, exp.scaling)));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective boundary condition lab"};
  app.require_subcommand(1);
  std::string config, out = "./out";
  const char* names[] = {"classify", "operators", "solve-full", "solve-effective", "converge"};
  const char* help[] = {"classify a coating scaling law", "apply a boundary operator to surface data",
                        "solve the two-domain problem", "solve the bulk problem with an effective condition",
                        "run a delta sweep against the effective solution"};
  for (int i = 0; i < 5; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--config", config, "JSON config file")->required();
    sub->add_option("--out", out, "output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(2, "usage", e.what());
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const fs::path config_path = config;
    const json cfg = ebc::io::read_json_file(config_path);
    const fs::path out_dir = out;
    if (cmd == "classify") run_classify(cfg, out_dir);
    else if (cmd == "operators") run_operators(cfg, out_dir);
    else if (cmd == "solve-full") run_solve_full(cfg, out_dir);
    else if (cmd == "solve-effective") run_solve_effective(cfg, out_dir, config_path.parent_path());
    else run_converge(cfg, out_dir);
  } catch (const ebc::ConfigError& e) {
    return report_error(2, "config", e.what());
  } catch (const ebc::RegimeError& e) {
    return report_error(3, "regime", e.what());
  } catch (const ebc::SolverError& e) {
    return report_error(4, "solver", e.what());
  } catch (const json::exception& e) {
    return report_error(2, "config", e.what());
  } catch (const std::exception& e) {
    return report_error(4, "runtime", e.what());
  }
  return 0;
}
