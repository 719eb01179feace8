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

#include "tetherpower/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tetherpower {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

const json& object_at(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("missing section '" + key + "'");
  const json& sec = obj.at(key);
  if (!sec.is_object()) throw ConfigError("'" + key + "' must be an object");
  return sec;
}

double number_at(const json& obj, const std::string& key,
                 const std::string& where) {
  if (!obj.contains(key)) {
    throw ConfigError("missing key '" + key + "' in " + where);
  }
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ConfigError("'" + where + "." + key + "' must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ConfigError("'" + where + "." + key + "' must be finite");
  }
  return x;
}

double positive_at(const json& obj, const std::string& key,
                   const std::string& where) {
  const double x = number_at(obj, key, where);
  if (!(x > 0.0)) {
    throw ConfigError("'" + where + "." + key + "' must be positive");
  }
  return x;
}

std::vector<double> numbers(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError("'" + key + "' must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) {
      throw ConfigError("'" + key + "' must contain only numbers");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(root,
                 {"tether", "quadcopter", "source", "gravity_m_per_s2",
                  "segment_lengths_m", "setpoint_m"},
                 "config");

  RunConfig cfg;
  const json& tether = object_at(root, "tether");
  reject_unknown(tether, {"rho_ohm_per_m", "lambda_kg_per_m"}, "tether");
  cfg.tether.rho = positive_at(tether, "rho_ohm_per_m", "tether");
  cfg.tether.lambda = positive_at(tether, "lambda_kg_per_m", "tether");

  const json& quad = object_at(root, "quadcopter");
  reject_unknown(quad, {"mass_kg", "c_p_w_per_n15", "overhead_w"},
                 "quadcopter");
  cfg.quad.mass = positive_at(quad, "mass_kg", "quadcopter");
  cfg.quad.c_p = positive_at(quad, "c_p_w_per_n15", "quadcopter");
  if (quad.contains("overhead_w")) {
    cfg.quad.overhead = number_at(quad, "overhead_w", "quadcopter");
    if (cfg.quad.overhead < 0.0) {
      throw ConfigError("'quadcopter.overhead_w' must be nonnegative");
    }
  }

  const json& source = object_at(root, "source");
  reject_unknown(source, {"voltage_v"}, "source");
  cfg.source_voltage = positive_at(source, "voltage_v", "source");

  if (root.contains("gravity_m_per_s2")) {
    cfg.gravity = positive_at(root, "gravity_m_per_s2", "config");
  }
  if (root.contains("segment_lengths_m")) {
    auto lengths = numbers(root.at("segment_lengths_m"), "segment_lengths_m");
    if (lengths.empty()) throw ConfigError("'segment_lengths_m' is empty");
    for (double l : lengths) {
      if (!(l > 0.0) || !std::isfinite(l)) {
        throw ConfigError("'segment_lengths_m' entries must be positive");
      }
    }
    cfg.segment_lengths = std::move(lengths);
  }
  if (root.contains("setpoint_m")) {
    auto sp = numbers(root.at("setpoint_m"), "setpoint_m");
    if (sp.size() != 2) throw ConfigError("'setpoint_m' needs [y, z]");
    cfg.setpoint = PlanarPoint{sp[0], sp[1]};
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

RunConfig reach_study_config(double source_voltage) {
  RunConfig cfg;
  cfg.tether = {0.0166, 0.095};
  cfg.quad = {0.7, 4.5, 0.0};
  cfg.source_voltage = source_voltage;
  return cfg;
}

}  // namespace tetherpower
