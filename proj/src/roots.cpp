// Copyright 2026 The bdicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bdicke/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bdicke/error.hpp"

namespace bdicke {

namespace {

constexpr double kBracketTol = 1e-13;
constexpr double kMergeTol = 1e-10;
constexpr int kMaxRefineIterations = 200;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

double refine_root(const ScalarFunction& f, const ScalarFunction& df, double a, double b) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (sign_of(fa) == sign_of(fb)) throw InvalidArgument("refine_root: interval is not a bracket");

  double x = 0.5 * (a + b);
  double fx = f(x);
  double width_before = b - a;
  for (int it = 0; it < kMaxRefineIterations && fx != 0.0; ++it) {
    if (sign_of(fx) == sign_of(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    const double width = b - a;
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
    if (width <= std::max(kBracketTol, floor)) break;

    double next;
    const double slope = df ? df(x) : (fb - fa) / (b - a);
    next = (slope != 0.0 && std::isfinite(slope)) ? x - fx / slope : a + 0.5 * width;
    // Fall back to bisection when the step leaves the bracket or progress stalls.
    if (!(next > a && next < b) || width > 0.5 * width_before) {
      next = a + 0.5 * width;
    }
    width_before = width;
    x = next;
    fx = f(x);
  }
  // Best of the final candidates.
  double best = x;
  double fbest = std::abs(fx);
  if (std::abs(fa) < fbest) { best = a; fbest = std::abs(fa); }
  if (std::abs(fb) < fbest) { best = b; }
  return best;
}

std::vector<double> find_roots_1d(const ScalarFunction& f, const ScalarFunction& df, double lo,
                                  double hi, int grid_points) {
  if (grid_points < 101) throw InvalidArgument("find_roots_1d: grid_points must be >= 101");
  if (!(lo < hi)) throw InvalidArgument("find_roots_1d: requires lo < hi");

  std::vector<double> roots;
  const double step = (hi - lo) / (grid_points - 1);
  auto grid_x = [&](int i) { return i == grid_points - 1 ? hi : lo + i * step; };

  double x_prev = grid_x(0);
  double f_prev = f(x_prev);
  if (f_prev == 0.0) roots.push_back(x_prev);
  for (int i = 1; i < grid_points; ++i) {
    const double x = grid_x(i);
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && sign_of(fx) != sign_of(f_prev)) {
      roots.push_back(refine_root(f, df, x_prev, x));
    }
    x_prev = x;
    f_prev = fx;
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (merged.empty() || r - merged.back() > kMergeTol) merged.push_back(r);
  }
  return merged;
}

std::vector<double> find_roots_1d(const ScalarFunction& f, double lo, double hi, int grid_points) {
  return find_roots_1d(f, ScalarFunction{}, lo, hi, grid_points);
}

}  // namespace bdicke
