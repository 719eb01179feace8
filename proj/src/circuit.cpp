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

#include "tetherpower/circuit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tetherpower/errors.hpp"
#include "tetherpower/parallel.hpp"

namespace tetherpower {

namespace {

constexpr int kMaxNewtonIterations = 100;
constexpr int kMaxLineSearchHalvings = 40;
constexpr int kHomotopySteps = 10;
constexpr int kPolishSteps = 2;
constexpr double kDiscriminantSlack = 1e-12;
constexpr int kMaxRayDoublings = 80;

// Per-quadcopter voltage drops D_j = sum_{k<=j} R_k S_k, S_k = sum_{l>=k} i_l.
void voltage_drops(std::span<const double> r, std::span<const double> i,
                   std::vector<double>& drops) {
  const std::size_t n = i.size();
  drops.assign(n, 0.0);
  double suffix = 0.0;
  std::vector<double> carried(n);
  for (std::size_t k = n; k-- > 0;) {
    suffix += i[k];
    carried[k] = suffix;
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += r[k] * carried[k];
    drops[k] = acc;
  }
}

double max_abs(const Eigen::VectorXd& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

class NewtonSystem {
 public:
  NewtonSystem(double vs, std::span<const double> r, std::span<const double> p)
      : vs_(vs), r_(r.begin(), r.end()), p_(p.begin(), p.end()) {}

  Eigen::VectorXd residual(const Eigen::VectorXd& i) {
    const std::size_t n = p_.size();
    voltage_drops(r_, std::span<const double>(i.data(), n), drops_);
    Eigen::VectorXd f(n);
    for (std::size_t j = 0; j < n; ++j) {
      f[j] = i[j] * (vs_ - drops_[j]) - p_[j];
    }
    return f;
  }

  // d F_j / d i_m = delta_jm (V_s - D_j) - i_j * sum_{k <= min(j, m)} R_k.
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& i) {
    const std::size_t n = p_.size();
    voltage_drops(r_, std::span<const double>(i.data(), n), drops_);
    std::vector<double> cumulative(n);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += r_[k];
      cumulative[k] = acc;
    }
    Eigen::MatrixXd jac(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        jac(j, m) = -i[j] * cumulative[std::min(j, m)];
      }
      jac(j, j) += vs_ - drops_[j];
    }
    return jac;
  }

  // Damped Newton from `i`. Returns true when the residual tolerance is met.
  bool solve(Eigen::VectorXd& i, double tol) {
    Eigen::VectorXd f = residual(i);
    double fnorm = max_abs(f);
    for (int iter = 0; iter < kMaxNewtonIterations && fnorm > tol; ++iter) {
      if (!step(i, f, fnorm)) return false;
    }
    if (!(fnorm <= tol)) return false;
    for (int k = 0; k < kPolishSteps && fnorm > 0.0; ++k) {
      Eigen::VectorXd trial = i;
      Eigen::VectorXd trial_f = f;
      double trial_norm = fnorm;
      if (!step(trial, trial_f, trial_norm)) break;
      i = trial;
      f = trial_f;
      fnorm = trial_norm;
    }
    return true;
  }

 private:
  // One Newton step with backtracking on the max-norm residual.
  bool step(Eigen::VectorXd& i, Eigen::VectorXd& f, double& fnorm) {
    const Eigen::MatrixXd jac = jacobian(i);
    const Eigen::VectorXd delta = jac.partialPivLu().solve(-f);
    if (!delta.allFinite()) return false;
    double alpha = 1.0;
    for (int k = 0; k < kMaxLineSearchHalvings; ++k, alpha *= 0.5) {
      Eigen::VectorXd trial = i + alpha * delta;
      Eigen::VectorXd trial_f = residual(trial);
      const double trial_norm = max_abs(trial_f);
      if (trial_f.allFinite() && trial_norm < fnorm) {
        i = std::move(trial);
        f = std::move(trial_f);
        fnorm = trial_norm;
        return true;
      }
    }
    return false;
  }

  double vs_;
  std::vector<double> r_;
  std::vector<double> p_;
  std::vector<double> drops_;
};

bool finite_all(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

void validate_boundary_inputs(double vs, double c_p,
                              std::span<const double> r) {
  if (!(vs > 0.0) || !std::isfinite(vs)) {
    throw InvalidProblem("source voltage must be positive");
  }
  if (!(c_p > 0.0) || !std::isfinite(c_p)) {
    throw InvalidProblem("power constant must be positive");
  }
  if (r.empty()) throw InvalidProblem("at least one segment is required");
  for (double x : r) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw InvalidProblem("resistances must be finite and nonnegative");
    }
  }
}

}  // namespace

void validate(const TetherSpec& tether) {
  if (!(tether.rho > 0.0) || !std::isfinite(tether.rho)) {
    throw InvalidProblem("tether resistance per length must be positive");
  }
  if (!(tether.lambda > 0.0) || !std::isfinite(tether.lambda)) {
    throw InvalidProblem("tether mass per length must be positive");
  }
}

void validate(const CircuitProblem& prob) {
  if (!(prob.source_voltage > 0.0) || !std::isfinite(prob.source_voltage)) {
    throw InvalidProblem("source voltage must be positive");
  }
  if (prob.powers.empty()) {
    throw InvalidProblem("circuit needs at least one quadcopter");
  }
  if (prob.powers.size() != prob.resistances.size()) {
    throw InvalidProblem("resistance and power lists differ in length (" +
                         std::to_string(prob.resistances.size()) + " vs " +
                         std::to_string(prob.powers.size()) + ")");
  }
  if (!finite_all(prob.powers) || !finite_all(prob.resistances)) {
    throw InvalidProblem("resistances and powers must be finite");
  }
  for (std::size_t j = 0; j < prob.powers.size(); ++j) {
    if (prob.resistances[j] < 0.0) {
      throw InvalidProblem("resistance R_" + std::to_string(j + 1) +
                           " is negative");
    }
    if (prob.powers[j] < 0.0) {
      throw InvalidProblem("power P_" + std::to_string(j + 1) +
                           " is negative");
    }
  }
}

std::vector<double> circuit_residuals(const CircuitProblem& prob,
                                      std::span<const double> currents) {
  std::vector<double> drops;
  voltage_drops(prob.resistances, currents, drops);
  std::vector<double> out(currents.size());
  for (std::size_t j = 0; j < currents.size(); ++j) {
    out[j] = prob.source_voltage * currents[j] - currents[j] * drops[j] -
             prob.powers[j];
  }
  return out;
}

std::optional<CircuitSolution> try_solve_circuit(const CircuitProblem& prob) {
  validate(prob);
  const std::size_t n = prob.powers.size();
  const double vs = prob.source_voltage;
  const double max_power =
      *std::max_element(prob.powers.begin(), prob.powers.end());
  const double tol = 1e-10 * std::max(1.0, max_power);

  // Start on the lossless solution i_j = P_j / V_s.
  Eigen::VectorXd lossless(n);
  for (std::size_t j = 0; j < n; ++j) lossless[j] = prob.powers[j] / vs;

  Eigen::VectorXd currents = lossless;
  NewtonSystem direct(vs, prob.resistances, prob.powers);
  bool ok = direct.solve(currents, tol);
  if (!ok) {
    // Continuation in resistance keeps the iterate on the branch connected
    // to the lossless solution.
    currents = lossless;
    std::vector<double> scaled(n);
    ok = true;
    for (int k = 1; k <= kHomotopySteps && ok; ++k) {
      const double t = static_cast<double>(k) / kHomotopySteps;
      for (std::size_t j = 0; j < n; ++j) scaled[j] = t * prob.resistances[j];
      NewtonSystem stage(vs, scaled, prob.powers);
      ok = stage.solve(currents, tol);
    }
  }
  if (!ok) return std::nullopt;

  CircuitSolution sol;
  sol.currents.assign(currents.data(), currents.data() + n);
  std::vector<double> drops;
  voltage_drops(prob.resistances, sol.currents, drops);
  sol.voltages.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sol.voltages[j] = vs - drops[j];
    if (!(sol.voltages[j] > 0.0) || !(sol.currents[j] >= 0.0)) {
      return std::nullopt;
    }
    sol.source_current += sol.currents[j];
  }
  sol.source_power = vs * sol.source_current;
  return sol;
}

CircuitSolution solve_circuit(const CircuitProblem& prob) {
  auto sol = try_solve_circuit(prob);
  if (!sol) {
    double total = 0.0;
    for (double p : prob.powers) total += p;
    throw Infeasible("demanded power " + std::to_string(total) +
                     " W cannot be delivered at " +
                     std::to_string(prob.source_voltage) + " V");
  }
  return *std::move(sol);
}

double closed_form_single(double thrust, double r1, double source_voltage,
                          double c_p) {
  if (!(r1 > 0.0) || !(source_voltage > 0.0) || !(c_p > 0.0) ||
      !(thrust >= 0.0) || !std::isfinite(thrust) || !std::isfinite(r1) ||
      !std::isfinite(source_voltage) || !std::isfinite(c_p)) {
    throw InvalidProblem("closed form needs thrust >= 0 and positive R, V_s, c_p");
  }
  const double load = c_p * thrust * std::sqrt(thrust);
  const double disc =
      1.0 - 4.0 * load * r1 / (source_voltage * source_voltage);
  if (disc < -kDiscriminantSlack) {
    throw Infeasible("no real supply power for thrust " +
                     std::to_string(thrust) + " N");
  }
  // (V^2 / 2R)(1 - sqrt(d)) rewritten as 2 P / (1 + sqrt(d)), exact as R -> 0.
  return 2.0 * load / (1.0 + std::sqrt(std::max(disc, 0.0)));
}

double critical_thrust(double source_voltage, double c_p, double r) {
  if (!(source_voltage > 0.0) || !(c_p > 0.0) || !(r > 0.0)) {
    throw InvalidProblem("critical thrust needs positive V_s, c_p, R");
  }
  const double q = source_voltage * source_voltage / (4.0 * c_p * r);
  return std::cbrt(q * q);
}

bool thrusts_feasible(double source_voltage, double c_p,
                      std::span<const double> resistances,
                      std::span<const double> thrusts) {
  CircuitProblem prob;
  prob.source_voltage = source_voltage;
  prob.resistances.assign(resistances.begin(), resistances.end());
  prob.powers.resize(thrusts.size());
  for (std::size_t j = 0; j < thrusts.size(); ++j) {
    if (!(thrusts[j] >= 0.0)) throw InvalidProblem("thrusts must be >= 0");
    prob.powers[j] = c_p * thrusts[j] * std::sqrt(thrusts[j]);
  }
  return try_solve_circuit(prob).has_value();
}

std::vector<std::vector<double>> boundary_ray_directions(int n_quads,
                                                         int n_rays) {
  if (n_quads < 1) throw InvalidProblem("need at least one quadcopter");
  if (n_rays < 1) throw InvalidProblem("need at least one ray");
  if (n_quads == 1) return {{1.0}};
  if (n_rays < 2) throw InvalidProblem("need at least two rays");

  const int parts = n_rays - 1;
  std::vector<std::vector<double>> dirs;
  std::vector<int> weights(n_quads, 0);
  // Enumerate compositions of `parts` into n_quads nonnegative integers,
  // first weight descending so the first ray lies on the f_1 axis.
  auto emit = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == n_quads - 1) {
      weights[idx] = remaining;
      double len = 0.0;
      for (int w : weights) len += static_cast<double>(w) * w;
      len = std::sqrt(len);
      std::vector<double> d(n_quads);
      for (int j = 0; j < n_quads; ++j) d[j] = weights[j] / len;
      dirs.push_back(std::move(d));
      return;
    }
    for (int w = remaining; w >= 0; --w) {
      weights[idx] = w;
      self(self, idx + 1, remaining - w);
    }
  };
  emit(emit, 0, parts);
  return dirs;
}

std::vector<double> boundary_along_ray(double source_voltage, double c_p,
                                       std::span<const double> resistances,
                                       std::span<const double> direction) {
  validate_boundary_inputs(source_voltage, c_p, resistances);
  if (direction.size() != resistances.size()) {
    throw InvalidProblem("ray direction and resistance list differ in length");
  }
  const std::size_t n = direction.size();
  std::vector<double> f(n);
  auto feasible_at = [&](double t) {
    for (std::size_t j = 0; j < n; ++j) f[j] = t * direction[j];
    return thrusts_feasible(source_voltage, c_p, resistances, f);
  };

  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (feasible_at(hi)) {
    if (++doublings > kMaxRayDoublings) {
      std::vector<double> unbounded(n);
      for (std::size_t j = 0; j < n; ++j) {
        unbounded[j] = direction[j] > 0.0
                           ? std::numeric_limits<double>::infinity()
                           : 0.0;
      }
      return unbounded;
    }
    lo = hi;
    hi *= 2.0;
  }
  const double tol = std::min(1e-6, 1e-9 * hi);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible_at(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  for (std::size_t j = 0; j < n; ++j) f[j] = lo * direction[j];
  return f;
}

std::vector<std::vector<double>> trace_feasible_boundary(
    double source_voltage, double c_p, std::span<const double> resistances,
    int n_rays, int workers) {
  validate_boundary_inputs(source_voltage, c_p, resistances);
  const auto dirs =
      boundary_ray_directions(static_cast<int>(resistances.size()), n_rays);
  std::vector<std::vector<double>> points(dirs.size());
  parallel_for(dirs.size(), workers, [&](std::size_t k) {
    points[k] = boundary_along_ray(source_voltage, c_p, resistances, dirs[k]);
  });
  return points;
}

}  // namespace tetherpower
