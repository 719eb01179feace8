// Copyright 2026 The Tetherpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tetherpower/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>

#include "tetherpower/circuit.hpp"
#include "tetherpower/config.hpp"
#include "tetherpower/csv.hpp"
#include "tetherpower/errors.hpp"
#include "tetherpower/planner.hpp"
#include "tetherpower/powertrain.hpp"

namespace tetherpower::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  int workers = 1;
  bool seedless = false;
};

struct Options {
  CommonOptions common;
  std::vector<double> thrusts;
  std::vector<double> lengths;
  std::vector<double> f_max;
  std::vector<double> setpoint;
  std::optional<double> total_length;
  int rays = 64;
  int resolution = 101;
  std::string kind;
  std::string mode;
  std::string curves_dir;
};

void add_common(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--config", c.config_path, "JSON run configuration")
      ->required();
  sub->add_option("--out", c.out_path, "output file (default: stdout)");
  sub->add_option("--workers", c.workers, "sweep worker threads (0 = all)")
      ->check(CLI::NonNegativeNumber);
  sub->add_flag("--seedless", c.seedless,
                "fully deterministic run (every run is; accepted for scripts)");
}

// Writes to --out when given, else to the primary stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::vector<double> segment_lengths(const Options& o, const RunConfig& cfg) {
  if (!o.lengths.empty()) {
    for (double l : o.lengths) {
      if (!(l >= 0.0)) throw UsageError("--lengths entries must be >= 0");
    }
    return o.lengths;
  }
  if (cfg.segment_lengths) return *cfg.segment_lengths;
  throw UsageError("segment lengths required (--lengths or segment_lengths_m)");
}

std::vector<double> resistances(const std::vector<double>& lengths,
                                const RunConfig& cfg) {
  std::vector<double> r;
  for (double l : lengths) r.push_back(cfg.tether.rho * l);
  return r;
}

ReachProblem reach_problem(const Options& o, const RunConfig& cfg) {
  ReachProblem prob;
  if (!o.setpoint.empty()) {
    if (o.setpoint.size() != 2) throw UsageError("--setpoint takes y,z");
    prob.end_setpoint = {o.setpoint[0], o.setpoint[1]};
  } else if (cfg.setpoint) {
    prob.end_setpoint = *cfg.setpoint;
  } else {
    throw UsageError("setpoint required (--setpoint or setpoint_m)");
  }
  prob.source_voltage = cfg.source_voltage;
  prob.tether = cfg.tether;
  prob.quad = cfg.quad;
  prob.gravity = cfg.gravity;
  return prob;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.workers = o.common.workers;
  return s;
}

void write_report(Sink& sink, const json& report) {
  sink.stream() << report.dump(2) << '\n';
}

int cmd_solve_circuit(const Options& o, const RunConfig& cfg, Sink& sink,
                      std::ostream& err) {
  const auto lengths = segment_lengths(o, cfg);
  if (o.thrusts.size() != lengths.size()) {
    throw UsageError("--thrusts needs one entry per segment length");
  }
  CircuitProblem prob;
  prob.source_voltage = cfg.source_voltage;
  prob.resistances = resistances(lengths, cfg);
  for (double f : o.thrusts) prob.powers.push_back(thrust_to_power(f, cfg.quad));

  json report = {{"command", "solve-circuit"},
                 {"source_voltage_v", prob.source_voltage},
                 {"segment_lengths_m", lengths},
                 {"resistances_ohm", prob.resistances},
                 {"thrusts_n", o.thrusts},
                 {"quad_powers_w", prob.powers}};
  auto sol = try_solve_circuit(prob);
  if (!sol) {
    report["error"] = "infeasible";
    report["message"] =
        "thrust combination exceeds the deliverable power of the tether";
    err << report.dump() << '\n';
    return kInfeasible;
  }
  report["feasible"] = true;
  report["currents_a"] = sol->currents;
  report["voltages_v"] = sol->voltages;
  report["source_current_a"] = sol->source_current;
  report["source_power_w"] = sol->source_power;
  write_report(sink, report);
  return kOk;
}

int cmd_boundary(const Options& o, const RunConfig& cfg, Sink& sink) {
  const auto r = resistances(segment_lengths(o, cfg), cfg);
  const auto points = trace_feasible_boundary(
      cfg.source_voltage, cfg.quad.c_p, r, o.rays, o.common.workers);
  write_boundary_csv(sink.stream(), points, r.size());
  return kOk;
}

int cmd_sweep(const Options& o, const RunConfig& cfg, Sink& sink,
              std::ostream& out) {
  json summary = {{"command", "sweep"}, {"kind", o.kind}};
  if (o.kind == "heatmap") {
    const auto r = resistances(segment_lengths(o, cfg), cfg);
    std::vector<double> f_max = o.f_max;
    if (f_max.empty()) {
      if (!(r.front() > 0.0)) {
        throw UsageError("--f-max required when the first segment is lossless");
      }
      const double edge = critical_thrust(cfg.source_voltage, cfg.quad.c_p,
                                          r.front());
      f_max = {1.25 * edge, 1.25 * edge};
    }
    const auto cells =
        sweep_thrust_heatmap(cfg.source_voltage, cfg.quad.c_p, r, f_max,
                             o.resolution, o.common.workers);
    write_heatmap_csv(sink.stream(), cells);
    std::size_t infeasible = 0;
    for (const auto& c : cells) infeasible += c.source_power ? 0 : 1;
    summary["cells"] = cells.size();
    summary["infeasible_cells"] = infeasible;
  } else if (o.kind == "length") {
    const auto curve = sweep_length_curve(reach_problem(o, cfg), search_options(o));
    write_length_csv(sink.stream(), curve);
    summary["rows"] = curve.size();
  } else if (o.kind == "intermediate") {
    const ReachProblem prob = reach_problem(o, cfg);
    const SearchOptions opts = search_options(o);
    const OneQuadResult one = optimize_one_quad(prob, opts);
    const double total = o.total_length.value_or(one.optimal_length);
    const auto grid = sweep_intermediate_grid(prob, total, opts);
    write_intermediate_csv(sink.stream(), grid);
    summary["total_length_m"] = total;
    summary["one_quad_min_power_w"] = one.min_power;
    summary["rows"] = grid.size();
  } else {
    throw UsageError("--kind must be heatmap, length or intermediate");
  }
  if (sink.to_file()) out << summary.dump() << '\n';
  return kOk;
}

json one_quad_json(const OneQuadResult& r) {
  return {{"optimal_length_m", r.optimal_length}, {"min_power_w", r.min_power}};
}

json two_quad_json(const TwoQuadResult& r) {
  return {{"total_length_m", r.total_length},
          {"optimal_fraction", r.optimal_fraction},
          {"optimal_intermediate_m",
           {r.optimal_intermediate.y, r.optimal_intermediate.z}},
          {"min_power_w", r.min_power}};
}

void write_curve(const std::string& dir, const std::string& name,
                 const std::function<void(std::ostream&)>& writer) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path.string() + "'");
  writer(f);
}

int cmd_optimize(const Options& o, const RunConfig& cfg, Sink& sink) {
  const ReachProblem prob = reach_problem(o, cfg);
  const SearchOptions opts = search_options(o);
  json report = {{"command", "optimize"},
                 {"mode", o.mode},
                 {"setpoint_m", {prob.end_setpoint.y, prob.end_setpoint.z}},
                 {"source_voltage_v", prob.source_voltage}};
  if (o.mode == "one") {
    const auto one = optimize_one_quad(prob, opts);
    report["one_quad"] = one_quad_json(one);
    write_curve(o.curves_dir, "one_quad_length.csv",
                [&](std::ostream& f) { write_length_csv(f, one.power_curve); });
  } else if (o.mode == "two") {
    double total = 0.0;
    if (o.total_length) {
      total = *o.total_length;
    } else {
      const auto one = optimize_one_quad(prob, opts);
      total = one.optimal_length;
      report["one_quad"] = one_quad_json(one);
    }
    const auto two = optimize_two_quad(prob, total, opts);
    report["two_quad"] = two_quad_json(two);
    write_curve(o.curves_dir, "two_quad_intermediate.csv", [&](std::ostream& f) {
      write_intermediate_csv(f, two.power_grid);
    });
  } else if (o.mode == "compare") {
    const auto cmp = compare_one_vs_two(prob, opts);
    report["one_quad"] = one_quad_json(cmp.one);
    report["two_quad"] = two_quad_json(cmp.two);
    report["saving"] = cmp.saving;
    write_curve(o.curves_dir, "one_quad_length.csv", [&](std::ostream& f) {
      write_length_csv(f, cmp.one.power_curve);
    });
    write_curve(o.curves_dir, "two_quad_intermediate.csv", [&](std::ostream& f) {
      write_intermediate_csv(f, cmp.two.power_grid);
    });
  } else {
    throw UsageError("--mode must be one, two or compare");
  }
  write_report(sink, report);
  return kOk;
}

void error_record(std::ostream& err, const std::string& kind,
                  const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Tethered multi-quadcopter power analysis", "tetherpower"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve-circuit",
                                   "supply power for given quadcopter thrusts");
  add_common(solve, o.common);
  solve->add_option("--thrusts", o.thrusts, "thrust per quadcopter, N")
      ->delimiter(',')
      ->required();
  solve->add_option("--lengths", o.lengths, "segment lengths, m")
      ->delimiter(',');

  auto* boundary =
      app.add_subcommand("boundary", "trace the feasible thrust boundary");
  add_common(boundary, o.common);
  boundary->add_option("--lengths", o.lengths, "segment lengths, m")
      ->delimiter(',');
  boundary->add_option("--rays", o.rays, "number of rays")
      ->check(CLI::Range(2, 1000000));

  auto* sweep = app.add_subcommand("sweep", "emit plot data");
  add_common(sweep, o.common);
  sweep->add_option("--kind", o.kind, "heatmap | length | intermediate")
      ->required();
  sweep->add_option("--lengths", o.lengths, "segment lengths, m (heatmap)")
      ->delimiter(',');
  sweep->add_option("--f-max", o.f_max, "thrust range per axis, N (heatmap)")
      ->delimiter(',');
  sweep->add_option("--resolution", o.resolution, "points per axis (heatmap)")
      ->check(CLI::Range(2, 100000));
  sweep->add_option("--setpoint", o.setpoint, "end setpoint y,z, m")
      ->delimiter(',');
  sweep->add_option("--length", o.total_length,
                    "total tether length, m (intermediate)");

  auto* optimize =
      app.add_subcommand("optimize", "optimize one or two quadcopter reach");
  add_common(optimize, o.common);
  optimize->add_option("--mode", o.mode, "one | two | compare")->required();
  optimize->add_option("--setpoint", o.setpoint, "end setpoint y,z, m")
      ->delimiter(',');
  optimize->add_option("--length", o.total_length,
                       "total tether length, m (mode two)");
  optimize->add_option("--curves-dir", o.curves_dir,
                       "directory for CSV curves");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("tetherpower");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    error_record(err, "usage", e.what());
    return kBadInput;
  }

  try {
    const RunConfig cfg = load_config(o.common.config_path);
    Sink sink(o.common.out_path, out);
    if (solve->parsed()) return cmd_solve_circuit(o, cfg, sink, err);
    if (boundary->parsed()) return cmd_boundary(o, cfg, sink);
    if (sweep->parsed()) return cmd_sweep(o, cfg, sink, out);
    return cmd_optimize(o, cfg, sink);
  } catch (const ConfigError& e) {
    error_record(err, "config", e.what());
    return kBadInput;
  } catch (const UsageError& e) {
    error_record(err, "usage", e.what());
    return kBadInput;
  } catch (const Infeasible& e) {
    error_record(err, e.kind(), e.what());
    return kInfeasible;
  } catch (const AllInfeasible& e) {
    error_record(err, e.kind(), e.what());
    return kInfeasible;
  } catch (const Error& e) {
    // Remaining library errors are contract violations by the inputs.
    error_record(err, e.kind(), e.what());
    return kBadInput;
  } catch (const std::exception& e) {
    error_record(err, "internal", e.what());
    return kInternalError;
  }
}

}  // namespace tetherpower::cli
