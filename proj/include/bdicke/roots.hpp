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

#ifndef BDICKE_ROOTS_HPP
#define BDICKE_ROOTS_HPP

#include <functional>
#include <vector>

namespace bdicke {

using ScalarFunction = std::function<double(double)>;

inline constexpr int kDefaultGridPoints = 4001;

/// All roots of a continuous f on [lo, hi] that show up as a sign change
/// (or an exact zero) on a uniform grid of `grid_points` samples.
///
/// Each bracket is refined by safeguarded Newton steps (secant slopes if no
/// derivative is supplied) with bisection fallback, until the bracket is
/// narrower than 1e-13. Roots come back ascending, merged within 1e-10.
/// Requires grid_points >= 101 and lo < hi.
std::vector<double> find_roots_1d(const ScalarFunction& f, double lo, double hi,
                                  int grid_points = kDefaultGridPoints);

std::vector<double> find_roots_1d(const ScalarFunction& f, const ScalarFunction& df, double lo,
                                  double hi, int grid_points = kDefaultGridPoints);

// Refines a single sign-change bracket f(a) f(b) < 0. `df` may be empty.
double refine_root(const ScalarFunction& f, const ScalarFunction& df, double a, double b);

}  // namespace bdicke

#endif  // BDICKE_ROOTS_HPP
