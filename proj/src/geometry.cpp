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

#include "tetherpower/geometry.hpp"

#include <cmath>
#include <string>

#include "tetherpower/errors.hpp"

namespace tetherpower {

namespace {

constexpr double kTautSlack = 1e-12;
constexpr int kMaxBracketDoublings = 64;
constexpr int kMaxBracketHalvings = 1100;
constexpr int kMaxBisections = 400;

// sinh(x)/x - 1 for x >= 0, without cancellation near zero.
double sinhc_minus_one(double x) {
  if (x < 0.5) {
    const double x2 = x * x;
    double term = x2 / 6.0;
    double sum = 0.0;
    for (int n = 1; n < 30 && term > 1e-18 * sum; ++n) {
      sum += term;
      term *= x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    }
    return sum;
  }
  return std::sinh(x) / x - 1.0;
}

// Intrinsic description of a span: ordered by horizontal coordinate and
// independent of where the span sits in the plane.
struct SpanOffsets {
  PlanarPoint left;
  double dy;  // > 0
  double dz;  // right.z - left.z
  bool p0_is_left;
};

SpanOffsets offsets(PlanarPoint p0, PlanarPoint p1) {
  const bool p0_left = p0.y <= p1.y;
  const PlanarPoint left = p0_left ? p0 : p1;
  const PlanarPoint right = p0_left ? p1 : p0;
  return {left, right.y - left.y, right.z - left.z, p0_left};
}

bool finite(PlanarPoint p) { return std::isfinite(p.y) && std::isfinite(p.z); }

// Solves sinh(x)/x - 1 = target for x > 0; the left side is strictly
// increasing, so the root is unique.
double solve_half_angle(double target) {
  double lo = 0.0;
  double hi = 1.0;
  if (sinhc_minus_one(hi) < target) {
    int n = 0;
    while (!(sinhc_minus_one(hi) >= target)) {
      if (++n > kMaxBracketDoublings) {
        throw NoConvergence("catenary root could not be bracketed (slack too large)");
      }
      lo = hi;
      hi *= 2.0;
    }
  } else {
    lo = 0.5;
    int n = 0;
    while (!(sinhc_minus_one(lo) < target)) {
      if (++n > kMaxBracketHalvings) {
        throw NoConvergence("catenary root could not be bracketed (slack too small)");
      }
      hi = lo;
      lo *= 0.5;
    }
  }
  for (int i = 0; i < kMaxBisections; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= 1e-15 * hi) break;
    if (sinhc_minus_one(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require_in_span(const CatenarySegment& seg, double y) {
  const double slack = 1e-12 * (seg.y_max() - seg.y_min());
  if (!(y >= seg.y_min() - slack && y <= seg.y_max() + slack)) {
    throw OutOfSpan("y = " + std::to_string(y) + " outside [" +
                    std::to_string(seg.y_min()) + ", " +
                    std::to_string(seg.y_max()) + "]");
  }
}

}  // namespace

double norm(ForceVec f) { return std::hypot(f.fy, f.fz); }

double distance(PlanarPoint p, PlanarPoint q) {
  return std::hypot(q.y - p.y, q.z - p.z);
}

CatenarySegment fit_catenary(PlanarPoint p0, PlanarPoint p1, double length) {
  if (!finite(p0) || !finite(p1) || !std::isfinite(length)) {
    throw InvalidProblem("catenary endpoints and length must be finite");
  }
  const SpanOffsets off = offsets(p0, p1);
  if (off.dy <= kMinHorizontalSpan) {
    throw VerticalSpan("horizontal span " + std::to_string(off.dy) +
                       " m is too small for a catenary fit");
  }
  const double chord = std::hypot(off.dy, off.dz);
  if (length <= chord * (1.0 + kTautSlack)) {
    throw TautTether("length " + std::to_string(length) +
                     " m does not exceed chord " + std::to_string(chord) + " m");
  }

  // 2a sinh(dy / 2a) = sqrt(l^2 - dz^2). With x = dy / 2a this becomes
  // sinh(x)/x - 1 = (s - dy)/dy, where the right side is formed from
  // (l - chord)(l + chord) to keep precision close to the taut limit.
  const double s = std::sqrt((length - off.dz) * (length + off.dz));
  const double excess = (length - chord) * (length + chord);
  const double target = excess / ((s + off.dy) * off.dy);
  const double x = solve_half_angle(target);

  CatenarySegment seg;
  seg.a = off.dy / (2.0 * x);
  const double m = std::atanh(off.dz / length);
  seg.b = off.left.y + 0.5 * off.dy - seg.a * m;
  seg.c = off.left.z - seg.a * std::cosh(m - x);
  seg.p0 = p0;
  seg.p1 = p1;
  seg.length = length;
  return seg;
}

double evaluate(const CatenarySegment& seg, double y) {
  require_in_span(seg, y);
  return seg.a * std::cosh((y - seg.b) / seg.a) + seg.c;
}

double slope(const CatenarySegment& seg, double y) {
  require_in_span(seg, y);
  return std::sinh((y - seg.b) / seg.a);
}

double arc_length(const CatenarySegment& seg, double y0, double y1) {
  if (!(y0 <= y1)) {
    throw InvalidProblem("arc_length requires y0 <= y1");
  }
  require_in_span(seg, y0);
  require_in_span(seg, y1);
  // sinh(u1) - sinh(u0) = 2 cosh((u0 + u1)/2) sinh((u1 - u0)/2)
  const double centre = (0.5 * (y0 + y1) - seg.b) / seg.a;
  const double half = (y1 - y0) / (2.0 * seg.a);
  return 2.0 * seg.a * std::cosh(centre) * std::sinh(half);
}

SupportForces end_forces(const CatenarySegment& seg, double lambda, double g) {
  if (!(lambda > 0.0) || !(g > 0.0) || !std::isfinite(lambda) ||
      !std::isfinite(g)) {
    throw InvalidProblem("end_forces requires lambda > 0 and g > 0");
  }
  if (!(seg.a > 0.0) || !(seg.length > 0.0)) {
    throw InvalidProblem("end_forces requires a fitted segment");
  }
  const SpanOffsets off = offsets(seg.p0, seg.p1);
  const double x = off.dy / (2.0 * seg.a);
  const double m = std::atanh(off.dz / seg.length);
  const double horizontal = lambda * g * seg.a;

  // Tangent into the span at each end is (+-1, sinh(u)); tension is
  // horizontal * cosh(u), so the force is horizontal * (+-1, sinh(u)).
  const ForceVec on_left{horizontal, horizontal * std::sinh(m - x)};
  const ForceVec on_right{-horizontal, -horizontal * std::sinh(m + x)};
  if (off.p0_is_left) return {on_left, on_right};
  return {on_right, on_left};
}

}  // namespace tetherpower
