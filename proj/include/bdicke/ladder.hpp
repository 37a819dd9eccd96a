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

#ifndef BDICKE_LADDER_HPP
#define BDICKE_LADDER_HPP

#include <span>
#include <vector>

namespace bdicke {

struct Ladder {
  double start = 0.0;     // lowest member, measured from the ground level
  double spacing = 0.0;   // least-squares slope of member value vs index
  double spread = 0.0;    // (max - min consecutive spacing) / mean spacing
  std::vector<int> members;  // level indices, 0 = ground
};

struct LadderFit {
  std::vector<Ladder> ladders;  // one or two, ordered by start
  int unassigned = 0;           // levels that fit no ladder
  double offset = 0.0;          // start of the second ladder minus the first; 0 if only one
};

/// Splits the levels {0, gaps...} into at most two arithmetic progressions.
///
/// Levels are visited in ascending order; each joins the ladder whose next
/// predicted member (last member + local spacing) it matches within
/// `tolerance` times that spacing, preferring the closer prediction. The first
/// two levels that match nothing seed the second ladder.
LadderFit decompose_ladders(std::span<const double> gaps, double tolerance = 0.25);

}  // namespace bdicke

#endif  // BDICKE_LADDER_HPP
