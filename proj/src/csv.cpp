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

#include "tetherpower/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace tetherpower {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no CSV column '" + name + "'");
}

std::optional<double> CsvTable::number(std::size_t row,
                                       const std::string& name) const {
  const std::string& field = rows.at(row).at(column(name));
  if (field.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("CSV field '" + field + "' is not a number");
  }
  return v;
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("CSV has no header");
  table.header = split(line);
  for (const auto& h : table.header) {
    if (h.empty()) throw std::runtime_error("CSV header has an empty name");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields.size() != table.header.size()) {
      throw std::runtime_error("CSV row has " + std::to_string(fields.size()) +
                               " fields, header has " +
                               std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  return table;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_boundary_csv(std::ostream& out,
                        const std::vector<std::vector<double>>& points,
                        std::size_t n_quads) {
  for (std::size_t j = 0; j < n_quads; ++j) {
    out << (j ? "," : "") << 'f' << (j + 1) << "_n";
  }
  out << '\n';
  for (const auto& p : points) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      out << (j ? "," : "") << format_number(p[j]);
    }
    out << '\n';
  }
}

void write_heatmap_csv(std::ostream& out,
                       const std::vector<HeatmapCell>& cells) {
  out << "f1_n,f2_n,ps_w,feasible\n";
  for (const auto& c : cells) {
    out << format_number(c.f1) << ',' << format_number(c.f2) << ','
        << optional_field(c.source_power) << ','
        << (c.source_power ? 1 : 0) << '\n';
  }
}

void write_length_csv(std::ostream& out,
                      const std::vector<CurveSample>& curve) {
  out << "length_m,ps_w,feasible\n";
  for (const auto& s : curve) {
    out << format_number(s.length) << ',' << optional_field(s.power) << ','
        << (s.power ? 1 : 0) << '\n';
  }
}

void write_intermediate_csv(std::ostream& out,
                            const std::vector<GridSample>& grid) {
  out << "y_m,z_m,ps_w,feasible,best_fraction\n";
  for (const auto& s : grid) {
    out << format_number(s.y) << ',' << format_number(s.z) << ','
        << optional_field(s.power) << ',' << (s.power ? 1 : 0) << ','
        << (s.power ? format_number(s.best_fraction) : std::string()) << '\n';
  }
}

}  // namespace tetherpower
