// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front door. Subcommands:
//   oracle   exact (or floating) singular-point order analysis
//   solve    characteristic-coordinate evolution, artifacts to a directory
//   analyze  event detection, classification and cusp-exponent fits
//   compare  characteristic vs direct x-space solver deviation
//
// Exit codes: 0 ok, 1 usage, 2 truncation, 3 divergence, 4 comparison
// impossible.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "novlab/analysis.hpp"
#include "novlab/char_solver.hpp"
#include "novlab/config.hpp"
#include "novlab/errors.hpp"
#include "novlab/io.hpp"
#include "novlab/jet.hpp"
#include "novlab/kinematics.hpp"
#include "novlab/ref_solver.hpp"

namespace fs = std::filesystem;
using namespace novlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTruncation = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitComparisonImpossible = 4;

std::vector<std::string> split_list(const std::string& spec) {
  std::vector<std::string> tokens;
  std::string cur;
  for (const char c : spec) {
    if (c == ',') {
      tokens.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  tokens.push_back(cur);
  return tokens;
}

// "pi,1,0,2" -> angle with base pi and offset coefficients c1.. as listed.
template <class T>
Angle<T> parse_angle(const std::string& spec, int order,
                     T (*parse_coeff)(const std::string&)) {
  const auto tokens = split_list(spec);
  if (tokens.empty() || tokens[0].empty())
    throw std::invalid_argument("empty angle spec");
  AngleTag base;
  if (tokens[0] == "pi") {
    base = AngleTag::Pi;
  } else if (tokens[0] == "0") {
    base = AngleTag::Zero;
  } else {
    throw std::invalid_argument("angle base must be 'pi' or '0', got '" + tokens[0] + "'");
  }
  if (static_cast<int>(tokens.size()) - 1 > order)
    throw std::invalid_argument("angle spec longer than jet order");
  Jet<T> off(order);
  for (std::size_t i = 1; i < tokens.size(); ++i)
    off[static_cast<int>(i)] = parse_coeff(tokens[i]);
  return Angle<T>(base, std::move(off));
}

template <class T>
Jet<T> parse_jet(const std::string& spec, int order, T (*parse_coeff)(const std::string&)) {
  const auto tokens = split_list(spec);
  if (static_cast<int>(tokens.size()) > order + 1)
    throw std::invalid_argument("jet spec longer than order + 1");
  Jet<T> j(order);
  for (std::size_t i = 0; i < tokens.size(); ++i)
    j[static_cast<int>(i)] = parse_coeff(tokens[i]);
  return j;
}

Rational parse_rat_coeff(const std::string& s) { return parse_rational(s); }
double parse_double_coeff(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad numeric coefficient: " + s);
  return v;
}

struct OracleArgs {
  std::string model = "novikov";
  std::string v_spec;
  std::string q_spec = "1";
  std::string u_spec;
  std::string w_spec;
  std::string u0 = "0";
  int order = 12;
  bool exact = true;
  bool real = false;
  bool mixed = false;
  std::string out;
};

template <class T>
int run_oracle_typed(const OracleArgs& a, T (*parse_coeff)(const std::string&)) {
  const Model model = a.model == "ch" ? Model::CamassaHolm : Model::Novikov;
  SingularPointConfig<T> cfg(model, parse_angle<T>(a.v_spec, a.order, parse_coeff),
                             parse_jet<T>(a.q_spec, a.order, parse_coeff),
                             parse_coeff(a.u0));
  if (!a.u_spec.empty()) cfg.u = parse_jet<T>(a.u_spec, a.order, parse_coeff);
  if (!a.w_spec.empty()) cfg.w = parse_jet<T>(a.w_spec, a.order, parse_coeff);

  const double tol = std::is_same_v<T, Rational> ? 0.0 : 1e-12;
  const OrderReport<T> rep = orders(cfg, tol);
  std::string body = order_report_to_json(rep);

  if (a.mixed) {
    const MixedOrders<T> m = mixed_orders(cfg, tol);
    // Splice the mixed orders into the JSON object.
    std::string mixed = ",\n  \"mixed\": {\"dT_u_Y\": ";
    mixed += m.ord_du_y_dt ? std::to_string(*m.ord_du_y_dt) : "null";
    mixed += ", \"dT_x_Y\": ";
    mixed += m.ord_dx_y_dt ? std::to_string(*m.ord_dx_y_dt) : "null";
    mixed += "}";
    body.insert(body.rfind('\n'), mixed);
  }

  if (a.out.empty()) {
    std::cout << body << std::endl;
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output: " + a.out);
    out << body << '\n';
  }
  return kExitOk;
}

int run_oracle(const OracleArgs& a) {
  if (a.real) return run_oracle_typed<double>(a, parse_double_coeff);
  return run_oracle_typed<Rational>(a, parse_rat_coeff);
}

RunConfig load_config(const std::string& config_path) {
  if (config_path.empty()) return RunConfig{};
  return parse_config_file(config_path);
}

int run_solve(const std::string& config_path, const std::string& out_dir) {
  const RunConfig cfg = load_config(config_path);
  validate(cfg);
  fs::create_directories(out_dir);
  std::ofstream(fs::path(out_dir) / "config.toml") << echo_config(cfg);

  const auto profile = make_profile(cfg.u0);
  CharState state = init_from_u0(*profile, cfg.grid.half_width, cfg.grid.n);

  const auto write_artifacts = [&](const TrajectoryRecord& rec) {
    write_snapshots_csv((fs::path(out_dir) / "snapshots.csv").string(), rec.snapshots);
    write_energy_csv((fs::path(out_dir) / "energy.csv").string(), rec.energy);
    write_raw_events_jsonl((fs::path(out_dir) / "events_raw.jsonl").string(),
                           rec.events_raw);
  };

  TrajectoryRecord rec;
  try {
    rec = run(std::move(state), cfg.time.dt, cfg.time.t_end, run_options(cfg));
  } catch (const RunDivergedError& e) {
    write_artifacts(e.partial());
    write_snapshots_csv((fs::path(out_dir) / "last_good_state.csv").string(),
                        {e.partial().snapshots.back()});
    std::cerr << "solve: " << e.what() << "; last good state at t = "
              << e.partial().snapshots.back().t << " written to " << out_dir << '\n';
    return kExitDivergence;
  }

  write_artifacts(rec);
  std::cout << "steps = " << rec.stats.steps
            << ", snapshots = " << rec.snapshots.size()
            << ", raw_events = " << rec.events_raw.size()
            << ", stop = " << rec.stats.stop_reason << '\n';
  return kExitOk;
}

int run_analyze(const std::string& snapshots_path, const std::string& out_dir,
                const std::string& config_path) {
  const RunConfig cfg = load_config(config_path);
  fs::create_directories(out_dir);

  TrajectoryRecord rec;
  rec.snapshots = read_snapshots_csv(snapshots_path);
  const AnalysisReport report = analyze_run(rec, fit_config(cfg));

  std::vector<SingularEvent> events;
  for (const EventAnalysis& ea : report.events) events.push_back(ea.event);
  write_events_jsonl((fs::path(out_dir) / "events.jsonl").string(), events);
  write_analysis_report((fs::path(out_dir) / "report.json").string(), report);

  for (std::size_t k = 0; k < report.events.size(); ++k) {
    const EventAnalysis& ea = report.events[k];
    if (ea.points.empty()) continue;
    write_plot_csv((fs::path(out_dir) / ("plot_event_" + std::to_string(k) + ".csv")).string(),
                   ea);
  }
  std::cout << "events = " << report.events.size() << '\n';
  return kExitOk;
}

int run_compare(const std::string& config_path, const std::string& out_dir) {
  const RunConfig cfg = load_config(config_path);
  validate(cfg);
  fs::create_directories(out_dir);
  std::ofstream(fs::path(out_dir) / "config.toml") << echo_config(cfg);

  const auto profile = make_profile(cfg.u0);

  RunOptions char_opts;
  char_opts.snapshot_every = cfg.compare.snapshot_every;
  char_opts.snapshot_fine = cfg.compare.snapshot_every;
  char_opts.stop_after_first_event = false;
  char_opts.energy_every = 10;

  try {
    CharState cs = init_from_u0(*profile, cfg.grid.half_width, cfg.grid.n);
    const TrajectoryRecord rec =
        run(std::move(cs), cfg.time.dt, cfg.compare.t_end, char_opts);
    RefState rs = ref_init(*profile, cfg.grid.half_width, cfg.grid.n, cfg.compare.slope_cap);
    const std::vector<RefState> ref_snaps =
        ref_run(std::move(rs), cfg.time.dt, cfg.compare.t_end, cfg.compare.snapshot_every);

    write_ref_csv((fs::path(out_dir) / "ref_snapshots.csv").string(), ref_snaps);
    std::vector<std::pair<double, double>> series;
    const double dev = compare_solutions(rec, ref_snaps, &series);
    write_deviation_csv((fs::path(out_dir) / "deviation.csv").string(), series);
    std::cout << "max_rel_l2 = " << fmt_g17(dev) << '\n';
    return kExitOk;
  } catch (const ComparisonImpossibleError& e) {
    std::cerr << "compare: " << e.what() << '\n';
    return kExitComparisonImpossible;
  } catch (const BreakdownError& e) {
    std::cerr << "compare: " << e.what() << '\n';
    return kExitComparisonImpossible;
  } catch (const DivergenceError& e) {
    std::cerr << "compare: " << e.what() << '\n';
    return kExitDivergence;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic-coordinate laboratory for cubic peakon waves"};
  app.require_subcommand(1);

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "exact singular-point order analysis");
  oracle->add_option("--model", oracle_args.model, "novikov | ch")
      ->check(CLI::IsMember({"novikov", "ch"}));
  oracle->add_option("--v", oracle_args.v_spec, "angle jet: base,c1,c2,... (base pi or 0)")
      ->required();
  oracle->add_option("--q", oracle_args.q_spec, "q jet: c0,c1,...");
  oracle->add_option("--u", oracle_args.u_spec, "optional u jet");
  oracle->add_option("--w", oracle_args.w_spec, "optional nonlocal-field jet");
  oracle->add_option("--u0", oracle_args.u0, "u value at the point");
  oracle->add_option("--order", oracle_args.order, "truncation order K")
      ->check(CLI::Range(2, 64));
  oracle->add_flag("--exact", oracle_args.exact, "exact rational coefficients (default)");
  oracle->add_flag("--real", oracle_args.real, "double coefficients");
  oracle->add_flag("--mixed", oracle_args.mixed, "include d/dT orders of u_Y, x_Y");
  oracle->add_option("-o,--out", oracle_args.out, "output file (default stdout)");

  std::string config_path, out_dir = "out", snapshots_path;
  CLI::App* solve = app.add_subcommand("solve", "run the characteristic solver");
  solve->add_option("--config", config_path, "TOML config (defaults if omitted)");
  solve->add_option("--out", out_dir, "output directory");

  CLI::App* analyze = app.add_subcommand("analyze", "detect events and fit exponents");
  analyze->add_option("--snapshots", snapshots_path, "snapshots CSV")->required();
  analyze->add_option("--config", config_path, "TOML config (defaults if omitted)");
  analyze->add_option("--out", out_dir, "output directory");

  CLI::App* compare = app.add_subcommand("compare", "cross-validate the two solvers");
  compare->add_option("--config", config_path, "TOML config (defaults if omitted)");
  compare->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (solve->parsed()) return run_solve(config_path, out_dir);
    if (analyze->parsed()) return run_analyze(snapshots_path, out_dir, config_path);
    if (compare->parsed()) return run_compare(config_path, out_dir);
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTruncation;
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const ComparisonImpossibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComparisonImpossible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
