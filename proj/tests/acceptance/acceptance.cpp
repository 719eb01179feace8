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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tetherpower/circuit.hpp"
#include "tetherpower/cli.hpp"
#include "tetherpower/csv.hpp"
#include "tetherpower/geometry.hpp"
#include "tetherpower/planner.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tetherpower;

namespace {

constexpr double kRho = 0.0166;
constexpr double kLambda = 0.095;
constexpr double kCp = 4.5;

struct Setpoint {
  double y, z, volts;
  double length, one_power;
  double fraction, mid_y, mid_z, two_power;
};

constexpr Setpoint kTable[] = {
    {10, 5, 18, 12.87, 415.9, 0.55, 6.26, 1.03, 456.0},
    {20, 10, 36, 26.08, 851.4, 0.65, 14.34, 3.27, 736.3},
    {30, 15, 54, 39.13, 1459.6, 0.65, 21.21, 5.27, 1083.0},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

std::string config_path(double volts) {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("tetherpower_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  const auto path = dir / ("cfg_" + std::to_string(volts) + ".json");
  json j = {{"tether", {{"rho_ohm_per_m", kRho}, {"lambda_kg_per_m", kLambda}}},
            {"quadcopter", {{"mass_kg", 0.7}, {"c_p_w_per_n15", kCp}}},
            {"source", {{"voltage_v", volts}}}};
  std::ofstream(path) << j.dump();
  return path.string();
}

json run_json(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::run(args, out, err);
  if (*code != 0) {
    std::printf("    cli exit %d: %s", *code, err.str().c_str());
    return {};
  }
  return json::parse(out.str());
}

std::string run_text(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::run(args, out, err);
  return out.str();
}

std::string setpoint_arg(const Setpoint& s) {
  std::ostringstream os;
  os << s.y << ',' << s.z;
  return os.str();
}

int failures = 0;

void report(const char* id, bool ok, const std::string& detail, double secs) {
  std::printf("[%s] %s %s (%.3f s)\n", ok ? "PASS" : "FAIL", id, detail.c_str(),
              secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void ac1() {
  bool ok = true;
  std::string detail = "one quadcopter:";
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (const auto& s : kTable) {
    const auto t = Clock::now();
    int code = 0;
    const auto rep =
        run_json({"optimize", "--config", config_path(s.volts), "--mode", "one",
                  "--setpoint", setpoint_arg(s)},
                 &code);
    const double secs = seconds_since(t);
    worst = std::max(worst, secs);
    if (code != 0) {
      ok = false;
      continue;
    }
    const double len = rep["one_quad"]["optimal_length_m"];
    const double p = rep["one_quad"]["min_power_w"];
    const bool row = rel(p, s.one_power) <= 0.03 &&
                     std::abs(len - s.length) <= 0.3 && secs < 10.0;
    ok = ok && row;
    detail += fmt(" (%g,%g) l=%.3f m P=%.1f W [%+.2f%%]", s.y, s.z, len, p,
                  100.0 * (p - s.one_power) / s.one_power);
  }
  detail += fmt("; slowest %.2f s", worst);
  report("AC1", ok, detail, seconds_since(t0));
}

void ac2() {
  bool ok = true;
  std::string detail = "two quadcopters:";
  const auto t0 = Clock::now();
  for (const auto& s : kTable) {
    const auto t = Clock::now();
    int code = 0;
    const auto rep =
        run_json({"optimize", "--config", config_path(s.volts), "--mode", "two",
                  "--setpoint", setpoint_arg(s)},
                 &code);
    const double secs = seconds_since(t);
    if (code != 0) {
      ok = false;
      continue;
    }
    const auto& two = rep["two_quad"];
    const double p = two["min_power_w"];
    const double phi = two["optimal_fraction"];
    const double my = two["optimal_intermediate_m"][0];
    const double mz = two["optimal_intermediate_m"][1];
    const bool row = rel(p, s.two_power) <= 0.03 &&
                     std::abs(phi - s.fraction) <= 0.05 + 1e-12 &&
                     std::abs(my - s.mid_y) <= 0.5 &&
                     std::abs(mz - s.mid_z) <= 0.5 && secs < 60.0;
    ok = ok && row;
    detail += fmt(" (%g,%g) phi=%.3f mid=(%.2f,%.2f) P=%.1f W [%+.2f%%]", s.y,
                  s.z, phi, my, mz, p, 100.0 * (p - s.two_power) / s.two_power);
  }
  report("AC2", ok, detail, seconds_since(t0));
}

void ac3() {
  const auto t0 = Clock::now();
  bool ok = true;
  double savings[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    int code = 0;
    const auto rep = run_json({"optimize", "--config",
                               config_path(kTable[i].volts), "--mode", "compare",
                               "--setpoint", setpoint_arg(kTable[i])},
                              &code);
    if (code != 0) {
      ok = false;
      continue;
    }
    const double one = rep["one_quad"]["min_power_w"];
    const double two = rep["two_quad"]["min_power_w"];
    savings[i] = rep["saving"];
    if (i == 0) ok = ok && one < two;
    if (i > 0) ok = ok && two < one;
  }
  ok = ok && std::abs(savings[1] - 0.135) <= 0.03 &&
       std::abs(savings[2] - 0.26) <= 0.03;
  report("AC3", ok,
         fmt("savings %.2f%% / %.2f%% / %.2f%%", 100 * savings[0],
             100 * savings[1], 100 * savings[2]),
         seconds_since(t0));
}

void ac4() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> volts(5.0, 100.0);
  std::uniform_real_distribution<double> log_r(std::log(1e-3), std::log(5.0));
  std::uniform_real_distribution<double> cp(1.0, 10.0);
  std::uniform_real_distribution<double> frac(0.0, 0.999);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double v = volts(rng);
    const double r = std::exp(log_r(rng));
    const double c = cp(rng);
    const double f = frac(rng) * critical_thrust(v, c, r);
    CircuitProblem prob;
    prob.source_voltage = v;
    prob.resistances = {r};
    prob.powers = {c * f * std::sqrt(f)};
    const auto sol = try_solve_circuit(prob);
    if (!sol) {
      worst = INFINITY;
      continue;
    }
    const double want = closed_form_single(f, r, v, c);
    const double err = want == 0.0 ? std::abs(sol->source_power)
                                   : rel(sol->source_power, want);
    worst = std::max(worst, err);
  }
  const double secs = seconds_since(t0);
  report("AC4", worst <= 1e-9 && secs < 1.0,
         fmt("1000 single-quad solves vs closed form, max rel err %.2e", worst),
         secs);
}

void ac5() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> volts(5.0, 100.0);
  std::uniform_real_distribution<double> res(1e-3, 2.0);
  double worst1 = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double v = volts(rng), r = res(rng);
    const auto edge = trace_feasible_boundary(v, kCp, std::vector<double>{r}, 1);
    worst1 = std::max(worst1, rel(edge.at(0).at(0), critical_thrust(v, kCp, r)));
  }
  double worst2 = 0.0;
  const std::vector<std::vector<double>> pairs{
      {kRho * 6.1, kRho * 1.5}, {0.5, 0.5}, {0.01, 1.0}, {1.0, 0.01}};
  for (const auto& r : pairs) {
    const auto edge = trace_feasible_boundary(12.6, kCp, r, 64);
    const double want = critical_thrust(12.6, kCp, r[0]);
    worst2 = std::max(worst2, std::abs(edge.front()[0] - want));
    worst2 = std::max(worst2, std::abs(edge.front()[1]));
  }
  report("AC5", worst1 <= 1e-6 && worst2 <= 1e-5,
         fmt("N=1 max rel err %.2e; N=2 f2=0 ray max abs err %.2e N", worst1,
             worst2),
         seconds_since(t0));
}

double max_scaled_error(const std::vector<std::vector<double>>& base,
                        const std::vector<std::vector<double>>& scaled,
                        double k) {
  double worst = 0.0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double scale = k * std::hypot(base[i][0], base[i][1]);
    for (int d = 0; d < 2; ++d) {
      worst = std::max(worst, std::abs(scaled[i][d] - k * base[i][d]) / scale);
    }
  }
  return worst;
}

void ac6() {
  const auto t0 = Clock::now();
  const std::vector<double> r{kRho * 6.1, kRho * 1.5};
  const std::vector<double> half{r[0] / 2, r[1] / 2};
  const auto base = trace_feasible_boundary(12.6, kCp, r, 64);
  const auto volts = trace_feasible_boundary(25.2, kCp, r, 64);
  const auto rho = trace_feasible_boundary(12.6, kCp, half, 64);
  const double ev = max_scaled_error(base, volts, std::pow(2.0, 4.0 / 3.0));
  const double er = max_scaled_error(base, rho, std::pow(2.0, 2.0 / 3.0));
  report("AC6", ev <= 1e-3 && er <= 1e-3,
         fmt("2V_s max rel err %.2e; rho/2 max rel err %.2e", ev, er),
         seconds_since(t0));
}

void ac7() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_real_distribution<double> volts(5.0, 100.0);
  std::uniform_real_distribution<double> res(0.0, 0.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int solved = 0;
  double worst = 0.0;
  while (solved < 1000) {
    const int n = count(rng);
    CircuitProblem prob;
    prob.source_voltage = volts(rng);
    double r_total = 0.0;
    for (int j = 0; j < n; ++j) {
      prob.resistances.push_back(res(rng));
      r_total += prob.resistances.back();
    }
    // Total demand below the lumped-resistance limit V^2 / 4R.
    const double budget = prob.source_voltage * prob.source_voltage /
                          (4.0 * std::max(r_total, 1e-3));
    for (int j = 0; j < n; ++j) prob.powers.push_back(unit(rng) * budget / n);
    const auto sol = try_solve_circuit(prob);
    if (!sol) continue;
    ++solved;
    double loads = 0.0, losses = 0.0, downstream = sol->source_current;
    for (int j = 0; j < n; ++j) {
      loads += prob.powers[j];
      losses += downstream * downstream * prob.resistances[j];
      downstream -= sol->currents[j];
    }
    const double supplied = prob.source_voltage * sol->source_current;
    if (supplied > 0.0) {
      worst = std::max(worst, std::abs(supplied - loads - losses) / supplied);
    }
  }
  report("AC7", worst <= 1e-9,
         fmt("1000 solves, max rel energy imbalance %.2e", worst),
         seconds_since(t0));
}

// Composite Gauss-Legendre arc length of the fitted curve.
double quadrature_length(const CatenarySegment& seg) {
  static const double x[] = {0.0, 0.5384693101056831, 0.9061798459386640};
  static const double w[] = {0.5688888888888889, 0.4786286704993665,
                             0.2369268850561891};
  const int panels = 400;
  const double lo = seg.y_min(), hi = seg.y_max();
  const double h = (hi - lo) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    for (int k = 0; k < 3; ++k) {
      for (double sgn : {-1.0, 1.0}) {
        if (k == 0 && sgn > 0) continue;
        const double y = mid + sgn * x[k] * h / 2;
        const double s = std::sinh((y - seg.b) / seg.a);
        sum += w[k] * h / 2 * std::sqrt(1.0 + s * s);
      }
    }
  }
  return sum;
}

void ac8() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(8);
  // Lattice coordinates keep every translation exact in binary.
  std::uniform_int_distribution<int> coord(-40 * 1024, 40 * 1024);
  std::uniform_int_distribution<int> shift(-1000, 1000);
  std::uniform_real_distribution<double> slack(1.001, 2.5);
  auto lattice = [&] { return coord(rng) / 1024.0; };
  double worst_len = 0.0, worst_weight = 0.0;
  bool exact = true;
  int done = 0;
  while (done < 1000) {
    const PlanarPoint p0{lattice(), lattice()};
    const PlanarPoint p1{lattice(), lattice()};
    if (std::abs(p1.y - p0.y) < 0.5) continue;
    const double length = distance(p0, p1) * slack(rng);
    const auto seg = fit_catenary(p0, p1, length);
    ++done;
    worst_len = std::max(worst_len, rel(quadrature_length(seg), length));
    const auto f = end_forces(seg, kLambda, 9.81);
    const double weight = kLambda * 9.81 * length;
    worst_weight = std::max(
        worst_weight,
        std::abs(f.on_p0.fz + f.on_p1.fz + weight) / weight +
            std::abs(f.on_p0.fy + f.on_p1.fy) / weight);

    const double dy = shift(rng), dz = shift(rng);
    const auto moved =
        fit_catenary({p0.y + dy, p0.z + dz}, {p1.y + dy, p1.z + dz}, length);
    const auto g = end_forces(moved, kLambda, 9.81);
    exact = exact && moved.a == seg.a && g.on_p0.fy == f.on_p0.fy &&
            g.on_p0.fz == f.on_p0.fz && g.on_p1.fy == f.on_p1.fy &&
            g.on_p1.fz == f.on_p1.fz &&
            std::abs(moved.b - dy - seg.b) <= 1e-12 * (1.0 + std::abs(seg.b)) &&
            std::abs(moved.c - dz - seg.c) <= 1e-12 * (1.0 + std::abs(seg.c));
  }
  const double secs = seconds_since(t0);
  report("AC8",
         worst_len <= 1e-8 && worst_weight <= 1e-10 && exact && secs < 1.0,
         fmt("1000 segments: arc length rel err %.2e, force balance rel err "
             "%.2e, translation %s",
             worst_len, worst_weight, exact ? "exact" : "NOT exact"),
         secs);
}

void ac9() {
  const auto t0 = Clock::now();
  const int res = 101;
  int code = 0;
  const std::string cfg = config_path(12.6);
  const auto text = run_text({"sweep", "--config", cfg, "--kind", "heatmap",
                              "--lengths", "6.1,1.5", "--resolution",
                              std::to_string(res)},
                             &code);
  bool ok = code == 0;
  int infeasible = 0;
  bool downward_closed = true;
  bool monotone = true;
  if (ok) {
    std::istringstream in(text);
    const auto t = read_csv(in);
    ok = t.rows.size() == static_cast<std::size_t>(res * res);
    // Highest feasible f2 index in each f1 column.
    std::vector<int> top(res, -1);
    for (int i = 0; ok && i < res; ++i) {
      bool seen_infeasible = false;
      for (int j = 0; j < res; ++j) {
        const bool feasible = t.number(i * res + j, "ps_w").has_value();
        if (feasible) {
          if (seen_infeasible) downward_closed = false;
          top[i] = j;
        } else {
          seen_infeasible = true;
          ++infeasible;
        }
      }
    }
    for (int i = 1; i < res; ++i) monotone = monotone && top[i] <= top[i - 1];
  }
  // The traced boundary, ordered from the f1 axis to the f2 axis.
  const auto edge = run_text(
      {"boundary", "--config", cfg, "--lengths", "6.1,1.5", "--rays", "64"},
      &code);
  bool traced = code == 0;
  if (traced) {
    std::istringstream in(edge);
    const auto t = read_csv(in);
    for (std::size_t k = 1; k < t.rows.size(); ++k) {
      traced = traced && *t.number(k, "f1_n") <= *t.number(k - 1, "f1_n") &&
               *t.number(k, "f2_n") >= *t.number(k - 1, "f2_n");
    }
  }
  ok = ok && infeasible > 0 && downward_closed && monotone && traced;
  report("AC9", ok,
         fmt("%d of %d cells infeasible; column edge %s; traced boundary %s",
             infeasible, res * res,
             downward_closed && monotone ? "monotone decreasing" : "NOT monotone",
             traced ? "monotone decreasing" : "NOT monotone"),
         seconds_since(t0));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks{ac1, ac2, ac3, ac4, ac5,
                                                  ac6, ac7, ac8, ac9};
  for (const auto& check : checks) {
    try {
      check();
    } catch (const std::exception& e) {
      std::printf("[FAIL] unexpected exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, checks.size());
  return failures == 0 ? 0 : 1;
}
