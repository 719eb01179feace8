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

#ifndef TETHERPOWER_ERRORS_HPP_
#define TETHERPOWER_ERRORS_HPP_

#include <optional>
#include <stdexcept>
#include <string>

namespace tetherpower {

// Base of every error raised by the library. The kind string is stable and
// is what the command-line tool writes into its error records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed inputs: wrong list sizes, non-finite values, violated type
// invariants.
class InvalidProblem : public Error {
 public:
  explicit InvalidProblem(const std::string& message)
      : Error("invalid_problem", message) {}
};

// An error tied to one tether segment of a chain. The segment index is
// 1-based (segment i joins quadcopter i-1 and quadcopter i) and unset when
// the error comes from a stand-alone fit.
class SegmentError : public Error {
 public:
  SegmentError(std::string kind, const std::string& message,
               std::optional<int> segment)
      : Error(std::move(kind), message), segment_(segment) {}

  std::optional<int> segment() const noexcept { return segment_; }

 private:
  std::optional<int> segment_;
};

// Cable length does not exceed the straight-line distance of its span.
class TautTether : public SegmentError {
 public:
  explicit TautTether(const std::string& message,
                      std::optional<int> segment = std::nullopt)
      : SegmentError("taut_tether", message, segment) {}
};

// Span endpoints share (almost) the same horizontal coordinate.
class VerticalSpan : public SegmentError {
 public:
  explicit VerticalSpan(const std::string& message,
                        std::optional<int> segment = std::nullopt)
      : SegmentError("vertical_span", message, segment) {}
};

class NoConvergence : public SegmentError {
 public:
  explicit NoConvergence(const std::string& message,
                         std::optional<int> segment = std::nullopt)
      : SegmentError("no_convergence", message, segment) {}
};

class OutOfSpan : public Error {
 public:
  explicit OutOfSpan(const std::string& message)
      : Error("out_of_span", message) {}
};

class NegativeThrust : public Error {
 public:
  explicit NegativeThrust(const std::string& message)
      : Error("negative_thrust", message) {}
};

class InsufficientPower : public Error {
 public:
  explicit InsufficientPower(const std::string& message)
      : Error("insufficient_power", message) {}
};

// The demanded quadcopter powers exceed what the tethered network can
// deliver at the given source voltage and resistances.
class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& message)
      : Error("infeasible", message) {}
};

// Every sample of an optimization search was infeasible or geometrically
// impossible.
class AllInfeasible : public Error {
 public:
  explicit AllInfeasible(const std::string& message)
      : Error("all_infeasible", message) {}
};

}  // namespace tetherpower

#endif  // TETHERPOWER_ERRORS_HPP_
