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

#include "bdicke/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bdicke/error.hpp"

namespace bdicke {

namespace {

void summarize(Ladder& l, const std::vector<double>& levels) {
  const auto& m = l.members;
  l.start = levels[m.front()];
  if (m.size() < 2) return;
  const double n = double(m.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double y = levels[m[k]];
    sx += double(k);
    sy += y;
    sxx += double(k) * double(k);
    sxy += double(k) * y;
  }
  l.spacing = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t k = 1; k < m.size(); ++k) {
    const double d = levels[m[k]] - levels[m[k - 1]];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  const double mean = (levels[m.back()] - levels[m.front()]) / (n - 1.0);
  l.spread = (hi - lo) / mean;
}

}  // namespace

LadderFit decompose_ladders(std::span<const double> gaps, double tolerance) {
  if (gaps.size() < 2) throw InvalidArgument("decompose_ladders: need at least two gaps");
  if (!(tolerance > 0.0 && tolerance < 0.5)) {
    throw InvalidArgument("decompose_ladders: tolerance must lie in (0, 0.5)");
  }
  std::vector<double> levels{0.0};
  levels.insert(levels.end(), gaps.begin(), gaps.end());
  if (!std::is_sorted(levels.begin(), levels.end()) || !(levels[1] > 0.0)) {
    throw InvalidArgument("decompose_ladders: gaps must be positive and ascending");
  }

  LadderFit fit;
  Ladder a;
  a.members = {0, 1};
  Ladder b;
  auto residual = [&](const Ladder& l, double v) {
    const auto& m = l.members;
    const double s = levels[m.back()] - levels[m[m.size() - 2]];
    return std::abs(v - (levels[m.back()] + s)) / s;
  };

  for (int i = 2; i < int(levels.size()); ++i) {
    const double v = levels[i];
    const double ra = residual(a, v);
    const double rb =
        b.members.size() < 2 ? std::numeric_limits<double>::infinity() : residual(b, v);
    if (std::min(ra, rb) <= tolerance) {
      (ra <= rb ? a : b).members.push_back(i);
    } else if (b.members.size() < 2) {
      b.members.push_back(i);
    } else {
      ++fit.unassigned;
    }
  }
  summarize(a, levels);
  fit.ladders.push_back(a);
  if (!b.members.empty()) {
    summarize(b, levels);
    fit.ladders.push_back(b);
    fit.offset = b.start - a.start;
  }
  return fit;
}

}  // namespace bdicke
