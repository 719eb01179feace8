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

// Plot-data CSV: comma separated, one header row, '.' decimal point.
// Infeasible samples leave their value fields empty and carry feasible=0.

#ifndef TETHERPOWER_CSV_HPP_
#define TETHERPOWER_CSV_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tetherpower/planner.hpp"

namespace tetherpower {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
  // Numeric value of a cell, nullopt for an empty field.
  std::optional<double> number(std::size_t row, const std::string& name) const;
};

// Throws std::runtime_error on ragged rows or unparseable headers.
CsvTable read_csv(std::istream& in);

std::string format_number(double v);

void write_boundary_csv(std::ostream& out,
                        const std::vector<std::vector<double>>& points,
                        std::size_t n_quads);
void write_heatmap_csv(std::ostream& out, const std::vector<HeatmapCell>& cells);
void write_length_csv(std::ostream& out, const std::vector<CurveSample>& curve);
void write_intermediate_csv(std::ostream& out,
                            const std::vector<GridSample>& grid);

}  // namespace tetherpower

#endif  // TETHERPOWER_CSV_HPP_
