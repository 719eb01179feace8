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

#ifndef TETHERPOWER_SEARCH_HPP_
#define TETHERPOWER_SEARCH_HPP_

#include <cmath>
#include <functional>

namespace tetherpower {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

// Golden-section search on [lo, hi] until the bracket is narrower than tol.
// The objective may return +infinity for inadmissible points. Returns the
// best point evaluated, preferring the smaller x on ties.
inline ScalarMinimum golden_section_minimize(
    const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  ScalarMinimum best{lo, f(lo), 1};
  auto consider = [&best](double x, double v) {
    if (v < best.value || (v == best.value && x < best.x)) best = {x, v, best.evaluations};
  };
  {
    const double v = f(hi);
    ++best.evaluations;
    consider(hi, v);
  }
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  best.evaluations += 2;
  consider(c, fc);
  consider(d, fd);
  while (hi - lo > tol) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
      ++best.evaluations;
      consider(c, fc);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
      ++best.evaluations;
      consider(d, fd);
    }
  }
  return best;
}

}  // namespace tetherpower

#endif  // TETHERPOWER_SEARCH_HPP_
