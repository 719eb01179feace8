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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tetherpower/errors.hpp"
#include "tetherpower/geometry.hpp"

using namespace tetherpower;

namespace {

// Composite Gauss-Legendre (5 point) arc length of the fitted curve, using
// only the curve formula; independent of the closed-form antiderivative.
double quadrature_length(const CatenarySegment& s, double y0, double y1) {
  static constexpr double kNodes[5] = {0.0, -0.5384693101056831,
                                       0.5384693101056831, -0.9061798459386640,
                                       0.9061798459386640};
  static constexpr double kWeights[5] = {0.5688888888888889, 0.4786286704993665,
                                         0.4786286704993665, 0.2369268850561891,
                                         0.2369268850561891};
  const int panels = 2000;
  const double h = (y1 - y0) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = y0 + (p + 0.5) * h;
    for (int k = 0; k < 5; ++k) {
      const double y = mid + 0.5 * h * kNodes[k];
      const double dz = std::sinh((y - s.b) / s.a);
      total += 0.5 * h * kWeights[k] * std::sqrt(1.0 + dz * dz);
    }
  }
  return total;
}

double rel(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

struct RandomSpan {
  PlanarPoint p0, p1;
  double length;
};

// Endpoints on a 1/1024 m lattice so that integer translations (and the
// subtractions inside the fit) are exact.
RandomSpan random_span(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-40 * 1024, 40 * 1024);
  std::uniform_real_distribution<double> slack(1.01, 3.0);
  for (;;) {
    RandomSpan s;
    s.p0 = {coord(rng) / 1024.0, coord(rng) / 1024.0};
    s.p1 = {coord(rng) / 1024.0, coord(rng) / 1024.0};
    if (std::abs(s.p1.y - s.p0.y) < 0.5) continue;
    s.length = distance(s.p0, s.p1) * slack(rng);
    return s;
  }
}

}  // namespace

TEST_CASE("symmetric span has its lowest point at midspan") {
  const auto seg = fit_catenary({0, 0}, {10, 0}, 11.0);
  CHECK(seg.b == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(seg.a == doctest::Approx(6.549639476368562).epsilon(1e-12));
  CHECK(std::abs(evaluate(seg, 0.0)) < 1e-9);
  CHECK(std::abs(evaluate(seg, 10.0)) < 1e-9);
  const double sag = evaluate(seg, 5.0);
  CHECK(sag < 0.0);
  CHECK(sag == doctest::Approx(-2.003007907360376).epsilon(1e-10));
  CHECK(sag == doctest::Approx(seg.a + seg.c).epsilon(1e-12));
}

TEST_CASE("asymmetric fit reproduces the requested length by quadrature") {
  const auto seg = fit_catenary({0, 0}, {10, 5}, 12.87);
  // Frozen from a 40-digit bisection of 2a sinh(dy/2a) = sqrt(l^2 - dz^2).
  CHECK(seg.a == doctest::Approx(4.860961883253715).epsilon(1e-11));
  CHECK(seg.b == doctest::Approx(3.006846998293363).epsilon(1e-11));
  CHECK(seg.c == doctest::Approx(-5.820968831001971).epsilon(1e-11));
  CHECK(rel(quadrature_length(seg, 0.0, 10.0), 12.87) < 1e-8);
  CHECK(std::abs(evaluate(seg, 0.0) - 0.0) < 1e-9);
  CHECK(std::abs(evaluate(seg, 10.0) - 5.0) < 1e-9);
}

TEST_CASE("fit rejects taut and vertical spans") {
  CHECK_THROWS_AS(fit_catenary({0, 0}, {10, 5}, 11.0), TautTether);
  CHECK_THROWS_AS(fit_catenary({0, 0}, {10, 0}, 10.0), TautTether);
  CHECK_THROWS_AS(fit_catenary({0, 0}, {5e-7, 5}, 7.0), VerticalSpan);
  CHECK_THROWS_AS(fit_catenary({0, 0}, {0, 5}, 7.0), VerticalSpan);
  CHECK_THROWS_AS(fit_catenary({0, 0}, {NAN, 5}, 7.0), InvalidProblem);
}

TEST_CASE("fit accepts either endpoint order") {
  const auto fwd = fit_catenary({0, 0}, {10, 5}, 12.87);
  const auto rev = fit_catenary({10, 5}, {0, 0}, 12.87);
  CHECK(fwd.a == rev.a);
  CHECK(fwd.b == rev.b);
  CHECK(fwd.c == rev.c);
  CHECK(rev.p0.y == 10.0);
}

TEST_CASE("evaluate and arc_length enforce the span") {
  const auto seg = fit_catenary({0, 0}, {10, 0}, 11.0);
  CHECK_THROWS_AS(evaluate(seg, -0.1), OutOfSpan);
  CHECK_THROWS_AS(evaluate(seg, 10.1), OutOfSpan);
  CHECK_THROWS_AS(arc_length(seg, 0.0, 10.5), OutOfSpan);
  CHECK_THROWS_AS(arc_length(seg, 6.0, 5.0), InvalidProblem);
}

TEST_CASE("arc_length closed form") {
  const auto seg = fit_catenary({0, 0}, {10, 0}, 11.0);
  CHECK(arc_length(seg, 3.0, 3.0) == 0.0);
  CHECK(rel(arc_length(seg, 0.0, 10.0), 11.0) < 1e-10);
  CHECK(std::abs(arc_length(seg, 0.0, 5.0) - 5.5) < 1e-10);
  CHECK(rel(arc_length(seg, 1.0, 7.5), quadrature_length(seg, 1.0, 7.5)) <
        1e-10);
}

TEST_CASE("symmetric end forces split the cable weight") {
  const double lambda = 0.095;
  const double g = 9.81;
  const auto seg = fit_catenary({0, 0}, {10, 0}, 11.0);
  const auto f = end_forces(seg, lambda, g);
  CHECK(f.on_p0.fz == doctest::Approx(-lambda * g * 5.5).epsilon(1e-12));
  CHECK(f.on_p1.fz == doctest::Approx(-lambda * g * 5.5).epsilon(1e-12));
  CHECK(f.on_p0.fy > 0.0);
  CHECK(f.on_p0.fy == -f.on_p1.fy);
  CHECK(f.on_p0.fy == doctest::Approx(lambda * g * seg.a).epsilon(1e-15));
}

TEST_CASE("asymmetric end forces match re-integrated cable statics") {
  const double lambda = 0.095;
  const double g = 9.81;
  const auto seg = fit_catenary({0, 0}, {10, 5}, 12.87);
  const auto f = end_forces(seg, lambda, g);
  const double horizontal = lambda * g * seg.a;
  CHECK(f.on_p0.fy == doctest::Approx(horizontal).epsilon(1e-14));
  CHECK(f.on_p1.fy == doctest::Approx(-horizontal).epsilon(1e-14));

  // Constant horizontal tension H with H z'' = lambda g sqrt(1 + z'^2):
  // check a = H / (lambda g) by central differences of the fitted curve.
  for (double y : {1.0, 4.0, 8.5}) {
    const double h = 1e-3;
    const double zpp =
        (evaluate(seg, y + h) - 2 * evaluate(seg, y) + evaluate(seg, y - h)) /
        (h * h);
    const double zp = (evaluate(seg, y + h) - evaluate(seg, y - h)) / (2 * h);
    const double implied_h = lambda * g * std::sqrt(1 + zp * zp) / zpp;
    CHECK(rel(implied_h, horizontal) < 1e-5);
  }
  // Vertical tension changes by the weight of the quadrature-integrated
  // cable between the ends.
  const double weight = lambda * g * quadrature_length(seg, 0.0, 10.0);
  CHECK(rel(-(f.on_p0.fz + f.on_p1.fz), weight) < 1e-9);
  // Each force is aligned with the tangent at its end.
  CHECK(f.on_p0.fz / f.on_p0.fy == doctest::Approx(slope(seg, 0.0)).epsilon(1e-10));
  CHECK(f.on_p1.fz / f.on_p1.fy == doctest::Approx(slope(seg, 10.0)).epsilon(1e-10));
}

TEST_CASE("end_forces rejects non-positive lambda and g") {
  const auto seg = fit_catenary({0, 0}, {10, 5}, 12.87);
  CHECK_THROWS_AS(end_forces(seg, 0.0, 9.81), InvalidProblem);
  CHECK_THROWS_AS(end_forces(seg, 0.1, -1.0), InvalidProblem);
}

TEST_CASE("near-taut spans approach the chord direction") {
  const PlanarPoint p0{0, 0};
  const PlanarPoint p1{10, 5};
  const double chord = distance(p0, p1);
  for (double excess : {1e-6, 1e-9, 1e-11}) {
    const auto seg = fit_catenary(p0, p1, chord * (1 + excess));
    CHECK(std::isfinite(seg.a));
    CHECK(rel(arc_length(seg, 0, 10), seg.length) < 1e-8);
    CHECK(std::abs(evaluate(seg, 10.0) - 5.0) < 1e-6);
    const auto f = end_forces(seg, 0.095, 9.81);
    const double chord_angle = std::atan2(5.0, 10.0);
    CHECK(std::abs(std::atan2(f.on_p0.fz, f.on_p0.fy) - chord_angle) < 1e-2);
    CHECK(std::abs(std::atan2(-f.on_p1.fz, -f.on_p1.fy) - chord_angle) < 1e-2);
  }
}

TEST_CASE("property: randomized segments satisfy the segment invariants") {
  std::mt19937_64 rng(0x7e7e7e);
  const double lambda = 0.095;
  const double g = 9.81;
  for (int n = 0; n < 1000; ++n) {
    const auto s = random_span(rng);
    const auto seg = fit_catenary(s.p0, s.p1, s.length);
    REQUIRE(seg.a > 0.0);
    CHECK(std::abs(evaluate(seg, s.p0.y) - s.p0.z) < 1e-9);
    CHECK(std::abs(evaluate(seg, s.p1.y) - s.p1.z) < 1e-9);
    CHECK(rel(arc_length(seg, seg.y_min(), seg.y_max()), s.length) < 1e-10);

    const auto f = end_forces(seg, lambda, g);
    CHECK(f.on_p0.fy + f.on_p1.fy == 0.0);
    CHECK(rel(-(f.on_p0.fz + f.on_p1.fz), lambda * g * s.length) < 1e-10);

    // Fit is repeatable bit for bit.
    const auto again = fit_catenary(s.p0, s.p1, s.length);
    CHECK(again.a == seg.a);
    CHECK(again.b == seg.b);
    CHECK(again.c == seg.c);

    // Integer translations leave a and the forces unchanged exactly and
    // shift b and c by the translation.
    const double dy = static_cast<double>(rng() % 200) - 100.0;
    const double dz = static_cast<double>(rng() % 200) - 100.0;
    const auto moved = fit_catenary({s.p0.y + dy, s.p0.z + dz},
                                    {s.p1.y + dy, s.p1.z + dz}, s.length);
    CHECK(moved.a == seg.a);
    const auto fm = end_forces(moved, lambda, g);
    CHECK(fm.on_p0.fy == f.on_p0.fy);
    CHECK(fm.on_p0.fz == f.on_p0.fz);
    CHECK(fm.on_p1.fy == f.on_p1.fy);
    CHECK(fm.on_p1.fz == f.on_p1.fz);
    CHECK(std::abs(moved.b - (seg.b + dy)) <= 1e-12 * (1 + std::abs(moved.b)));
    CHECK(std::abs(moved.c - (seg.c + dz)) <=
          1e-12 * (1 + std::abs(moved.c) + seg.a));
  }
}
