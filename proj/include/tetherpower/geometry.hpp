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

// Catenary statics of a single uniform cable span in a vertical plane.
//
// All quantities are SI. The plane uses y for the horizontal coordinate and
// z for the vertical coordinate, positive up. A span hangs as
//
//   z(y) = a cosh((y - b) / a) + c
//
// where a = H / (lambda g) is the ratio of horizontal tension to cable
// weight per unit length.

#ifndef TETHERPOWER_GEOMETRY_HPP_
#define TETHERPOWER_GEOMETRY_HPP_

namespace tetherpower {

inline constexpr double kStandardGravity = 9.81;

struct PlanarPoint {
  double y = 0.0;
  double z = 0.0;
};

struct ForceVec {
  double fy = 0.0;
  double fz = 0.0;
};

inline ForceVec operator+(ForceVec a, ForceVec b) {
  return {a.fy + b.fy, a.fz + b.fz};
}
inline ForceVec operator-(ForceVec a, ForceVec b) {
  return {a.fy - b.fy, a.fz - b.fz};
}
inline ForceVec operator-(ForceVec a) { return {-a.fy, -a.fz}; }

double norm(ForceVec f);
double distance(PlanarPoint p, PlanarPoint q);

// Fitted shape of one cable span. p0 is the end nearer the power source.
struct CatenarySegment {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  PlanarPoint p0;
  PlanarPoint p1;
  double length = 0.0;

  double y_min() const { return p0.y < p1.y ? p0.y : p1.y; }
  double y_max() const { return p0.y < p1.y ? p1.y : p0.y; }
};

// Forces the cable exerts on its two supports.
struct SupportForces {
  ForceVec on_p0;
  ForceVec on_p1;
};

// Minimum horizontal extent of a span that is still fitted as a catenary.
inline constexpr double kMinHorizontalSpan = 1e-6;

// Fits the unique catenary of the given length through p0 and p1.
//
// Throws TautTether if length <= chord (with 1e-12 relative slack),
// VerticalSpan if |p1.y - p0.y| <= 1e-6 m, and NoConvergence if the root
// of the transcendental equation cannot be bracketed.
CatenarySegment fit_catenary(PlanarPoint p0, PlanarPoint p1, double length);

// Height of the curve at y. Throws OutOfSpan outside the horizontal extent.
double evaluate(const CatenarySegment& seg, double y);

// Slope dz/dy at y. Throws OutOfSpan outside the horizontal extent.
double slope(const CatenarySegment& seg, double y);

// Arc length between y0 <= y1, both inside the span.
double arc_length(const CatenarySegment& seg, double y0, double y1);

// Forces of the hanging cable on its supports. Each force points along the
// cable tangent into the span; the horizontal magnitude is lambda g a at
// both ends and the vertical components sum to -lambda g length.
//
// The result depends only on the endpoint offsets, the length, and a, so it
// is unchanged by translating the segment.
SupportForces end_forces(const CatenarySegment& seg, double lambda,
                         double g = kStandardGravity);

}  // namespace tetherpower

#endif  // TETHERPOWER_GEOMETRY_HPP_
