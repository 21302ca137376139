#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "logitfp/dynamics.hpp"
#include "logitfp/errors.hpp"
#include "logitfp/fixed_points.hpp"
#include "logitfp/game.hpp"
#include "logitfp/table.hpp"
#include "logitfp/verify.hpp"

namespace logitfp::cli {

namespace {

/// Bad user input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GameArgs {
  std::optional<double> dsp;
  std::optional<double> drt;
  std::string payoffs;

  void attach(CLI::App* cmd) {
    cmd->add_option("--dsp", dsp, "S - P");
    cmd->add_option("--drt", drt, "R - T");
    cmd->add_option("--payoffs", payoffs, "R,S,T,P (alternative to --dsp/--drt)");
  }

  GameDeltas resolve() const {
    if (!payoffs.empty()) {
      if (dsp || drt) throw UsageError("give either --payoffs or --dsp/--drt, not both");
      std::vector<double> v;
      std::stringstream ss(payoffs);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          v.push_back(std::stod(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw UsageError("--payoffs: cannot parse '" + item + "'");
        }
      }
      if (v.size() != 4) throw UsageError("--payoffs needs exactly four values R,S,T,P");
      for (double x : v) {
        if (!std::isfinite(x)) throw UsageError("--payoffs: values must be finite");
      }
      return deltas_from_payoffs({v[0], v[1], v[2], v[3]});
    }
    if (!dsp || !drt) throw UsageError("the game needs --dsp and --drt (or --payoffs)");
    if (!std::isfinite(*dsp) || !std::isfinite(*drt)) {
      throw UsageError("--dsp/--drt must be finite");
    }
    return {*dsp, *drt};
  }
};

struct OutputArgs {
  std::string format = "csv";
  std::string path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", path, "write data to FILE instead of stdout");
  }

  OutputFormat kind() const { return format == "json" ? OutputFormat::Json : OutputFormat::Csv; }
};

Rationality checked_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw UsageError("--beta must be finite and >= 0");
  }
  return Rationality(beta);
}

Cell real_or_null(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{};
}

Table classify_table(GameDeltas d) {
  Table t;
  t.columns = {"dsp", "drt", "quadrant", "x", "kind"};
  const std::string quadrant(to_string(classify(d)));
  const NashSet nash = nash_equilibria(d);
  if (nash.whole_interval) {
    t.add({d.delta_sp, d.delta_rt, quadrant, {}, std::string("continuum")});
  } else if (nash.equilibria.empty()) {
    t.add({d.delta_sp, d.delta_rt, quadrant, {}, std::string("none")});
  }
  for (const NashEquilibrium& ne : nash.equilibria) {
    t.add({d.delta_sp, d.delta_rt, quadrant, ne.x, std::string(to_string(ne.kind))});
  }
  return t;
}

Table fixed_points_table(GameDeltas d, Rationality beta, bool with_oracle) {
  const FixedPointSet exact = fixed_points_exact(d, beta);
  Table t;
  t.columns = {"x", "stability_value", "stability_class", "origin"};
  if (!with_oracle) {
    for (const FixedPoint& p : exact.points) {
      t.add({p.x, p.stability_value, std::string(to_string(p.stability)),
             std::string(to_string(p.origin))});
    }
    return t;
  }
  t.columns.push_back("oracle_x");
  t.columns.push_back("gap");
  const FixedPointSet brute = fixed_points_oracle(d, beta);
  const std::size_t n = std::max(exact.points.size(), brute.points.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Cell> row(6);
    if (i < exact.points.size()) {
      const FixedPoint& p = exact.points[i];
      row[0] = p.x;
      row[1] = p.stability_value;
      row[2] = std::string(to_string(p.stability));
      row[3] = std::string(to_string(p.origin));
    }
    if (i < brute.points.size()) row[4] = brute.points[i].x;
    if (i < exact.points.size() && i < brute.points.size()) {
      row[5] = std::fabs(exact.points[i].x - brute.points[i].x);
    }
    t.add(std::move(row));
  }
  return t;
}

Table sweep_table(GameDeltas d, double beta_min, double beta_max, int steps) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) {
    grid.push_back(i == steps ? beta_max
                              : beta_min + (beta_max - beta_min) * static_cast<double>(i) /
                                               static_cast<double>(steps));
  }

  Table t;
  t.columns = {"record",          "beta",           "count",     "branch_index", "x",
               "stability_value", "stability_class", "nash_kind", "error"};
  // Reference values for the diagram: the Nash equilibria with their
  // high-rationality stability.
  const NashSet nash = nash_equilibria(d);
  const std::vector<AsymptoticLimit> limits = asymptotic_limits(d);
  if (nash.whole_interval) {
    t.add({std::string("nash"), {}, {}, {}, {}, {}, std::string("stable"),
           std::string("continuum"), {}});
  }
  for (std::size_t i = 0; i < nash.equilibria.size(); ++i) {
    t.add({std::string("nash"), {}, {}, {}, nash.equilibria[i].x, {},
           std::string(to_string(limits[i].stability)),
           std::string(to_string(nash.equilibria[i].kind)), {}});
  }

  for (const SweepRecord& rec : sweep(d, grid)) {
    if (!rec.set) {
      t.add({std::string("error"), rec.beta, {}, {}, {}, {}, {}, {}, rec.error});
      continue;
    }
    const auto count = static_cast<std::int64_t>(rec.set->points.size());
    for (std::size_t i = 0; i < rec.set->points.size(); ++i) {
      const FixedPoint& p = rec.set->points[i];
      t.add({std::string("point"), rec.beta, count, static_cast<std::int64_t>(i), p.x,
             p.stability_value, std::string(to_string(p.stability)), {}, {}});
    }
  }
  return t;
}

Table bifurcation_table(GameDeltas d) {
  const BifurcationThreshold th = bifurcation_threshold(d);
  Table t;
  t.columns = {"dsp", "drt", "quadrant", "beta_r", "lower_bound", "mechanism", "cross_check"};
  t.add({d.delta_sp, d.delta_rt, std::string(to_string(classify(d))), real_or_null(th.beta_r),
         real_or_null(th.lower_bound), std::string(to_string(th.mechanism)),
         real_or_null(th.cross_check)});
  return t;
}

Table simulate_table(const Trajectory& traj) {
  Table t;
  t.columns = {"t", "x"};
  for (std::size_t i = 0; i < traj.times.size(); ++i) t.add({traj.times[i], traj.states[i]});
  return t;
}

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw UsageError(std::string("grid spec needs an array '") + key + "'");
  }
  std::vector<double> v;
  for (const auto& item : j[key]) {
    if (!item.is_number()) throw UsageError(std::string("grid spec '") + key + "' must hold numbers");
    v.push_back(item.get<double>());
  }
  return v;
}

GridSpec read_grid_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open grid spec '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("grid spec '" + path + "' is not valid JSON: " + e.what());
  }
  GridSpec g;
  g.dsp = number_array(j, "dsp");
  g.drt = number_array(j, "drt");
  g.beta = number_array(j, "beta");
  for (double b : g.beta) {
    if (!(b >= 0.0) || !std::isfinite(b)) throw UsageError("grid spec beta values must be >= 0");
  }
  return g;
}

template <class Writer>
void emit(const OutputArgs& o, std::ostream& out, Writer&& write) {
  if (o.path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.path);
  if (!file) throw UsageError("cannot open output file '" + o.path + "'");
  write(file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points of logit dynamics in two-strategy population games", "logitfp"};
  app.require_subcommand(1);

  GameArgs game;
  OutputArgs output;
  double beta = 0.0;

  auto* classify_cmd = app.add_subcommand("classify", "quadrant and Nash equilibria");
  game.attach(classify_cmd);
  output.attach(classify_cmd);

  bool with_oracle = false;
  auto* fp_cmd = app.add_subcommand("fixed-points", "fixed points with stability");
  game.attach(fp_cmd);
  output.attach(fp_cmd);
  fp_cmd->add_option("--beta", beta, "rationality level")->required();
  fp_cmd->add_flag("--oracle", with_oracle, "add the brute-force oracle columns");

  double beta_min = 0.0;
  double beta_max = 10.0;
  int steps = 200;
  auto* sweep_cmd = app.add_subcommand("sweep", "fixed points along a beta grid");
  game.attach(sweep_cmd);
  output.attach(sweep_cmd);
  sweep_cmd->add_option("--beta-min", beta_min)->capture_default_str();
  sweep_cmd->add_option("--beta-max", beta_max)->capture_default_str();
  sweep_cmd->add_option("--steps", steps, "number of beta intervals")->capture_default_str();

  auto* bif_cmd = app.add_subcommand("bifurcation", "pitchfork threshold beta_r");
  game.attach(bif_cmd);
  output.attach(bif_cmd);

  double x0 = 0.5;
  double t_end = 1e3;
  double dt = 1e-2;
  std::string protocol = "logit";
  auto* sim_cmd = app.add_subcommand("simulate", "RK4 trajectory of the mean dynamics");
  game.attach(sim_cmd);
  output.attach(sim_cmd);
  sim_cmd->add_option("--beta", beta, "rationality level (logit)");
  sim_cmd->add_option("--x0", x0)->capture_default_str();
  sim_cmd->add_option("--t-end", t_end)->capture_default_str();
  sim_cmd->add_option("--dt", dt)->capture_default_str();
  sim_cmd->add_option("--protocol", protocol)
      ->check(CLI::IsMember({"logit", "replicator"}))
      ->capture_default_str();

  std::string grid_spec;
  auto* verify_cmd = app.add_subcommand("verify", "exact vs brute-force parity report (JSON)");
  verify_cmd->add_option("--grid-spec", grid_spec, "JSON file with arrays dsp, drt, beta");
  verify_cmd->add_option("--out", output.path, "write the report to FILE");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*classify_cmd) {
      const Table t = classify_table(game.resolve());
      emit(output, out, [&](std::ostream& s) { write_table(s, t, output.kind()); });
    } else if (*fp_cmd) {
      const GameDeltas d = game.resolve();
      const Table t = fixed_points_table(d, checked_beta(beta), with_oracle);
      emit(output, out, [&](std::ostream& s) { write_table(s, t, output.kind()); });
    } else if (*sweep_cmd) {
      const GameDeltas d = game.resolve();
      if (steps < 1) throw UsageError("--steps must be at least 1");
      if (!(beta_min >= 0.0) || !(beta_max >= beta_min) || !std::isfinite(beta_max)) {
        throw UsageError("need 0 <= --beta-min <= --beta-max");
      }
      const Table t = sweep_table(d, beta_min, beta_max, steps);
      emit(output, out, [&](std::ostream& s) { write_table(s, t, output.kind()); });
    } else if (*bif_cmd) {
      const Table t = bifurcation_table(game.resolve());
      emit(output, out, [&](std::ostream& s) { write_table(s, t, output.kind()); });
    } else if (*sim_cmd) {
      const GameDeltas d = game.resolve();
      if (!(x0 >= 0.0 && x0 <= 1.0)) throw UsageError("--x0 must lie in [0,1]");
      if (!(dt > 0.0)) throw UsageError("--dt must be positive");
      if (!(t_end >= 0.0)) throw UsageError("--t-end must be >= 0");
      const Protocol p = protocol == "logit" ? Protocol::Logit : Protocol::Replicator;
      const Trajectory traj = integrate(d, checked_beta(beta), x0, t_end, dt, p);
      const Table t = simulate_table(traj);
      emit(output, out, [&](std::ostream& s) { write_table(s, t, output.kind()); });
    } else if (*verify_cmd) {
      const GridSpec g = grid_spec.empty() ? default_grid() : read_grid_spec(grid_spec);
      const VerificationReport report = verify_grid(g);
      emit(output, out, [&](std::ostream& s) { s << to_json(report); });
      if (report.failures != 0) {
        err << "verify: " << report.failures << " of " << report.points_checked
            << " points failed\n";
        return kExitInternal;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LargeBetaError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace logitfp::cli
