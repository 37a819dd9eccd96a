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

#include <gtest/gtest.h>

#include <cmath>

#include "../oracles/sign_scan.hpp"
#include "bdicke/error.hpp"
#include "bdicke/meanfield.hpp"

using namespace bdicke;

namespace {

ModelParams unit(double kappa, double ep, int n = 1, double a0 = 0.0) {
  return ModelParams::from_rescaled(1, 1, kappa, ep, n, a0);
}

}  // namespace

TEST(EnergyFunctional, VacuumValue) {
  const auto p = ModelParams::make(1.3, 7.0, 0.4, 0.9, 4);
  EXPECT_DOUBLE_EQ(energy_functional(p, 0, 0), -0.5 * 4 * 7.0);
}

TEST(EnergyFunctional, HandValue) {
  const auto p = ModelParams::make(1, 1, 0, 1, 1);
  const double t = M_PI / 3;
  EXPECT_NEAR(energy_functional(p, -std::sin(t), t), -1.0, 1e-14);
}

TEST(EnergyFunctional, OptimalAlphaMinimizes) {
  for (double a0 : {0.0, 1.1}) {
    const auto p = ModelParams::make(1.2, 3.0, 0.5, 0.8, 3, a0);
    for (double t : {-1.0, -0.2, 0.4, 1.3}) {
      const double a = optimal_alpha(p, t);
      const double e = energy_functional(p, a, t);
      EXPECT_LT(e, energy_functional(p, a + 1e-3, t));
      EXPECT_LT(e, energy_functional(p, a - 1e-3, t));
    }
    if (a0 == 0.0) EXPECT_DOUBLE_EQ(optimal_alpha(p, 0.4), -p.lambda() / p.omega() * 3 * std::sin(0.4));
  }
}

TEST(SelfConsistency, ZeroAtOrigin) {
  for (double k : {0.3, 1.0, 4.0}) EXPECT_EQ(selfconsistency_lhs(unit(k, 0.2), 0.0), 0.0);
}

TEST(SelfConsistency, UnbiasedClosedFormRoot) {
  EXPECT_NEAR(selfconsistency_lhs(unit(2, 0), std::acos(0.25)), 0.0, 1e-14);
}

TEST(SelfConsistency, LargeA2IsMonotoneDecreasing) {
  for (double k : {0.5, 2.0, 10.0}) {
    const auto p = unit(k, 0, 1, 2.0);
    for (double t = -1.5; t <= 1.5; t += 0.05) {
      if (std::abs(t) < 1e-9) continue;
      EXPECT_LT(selfconsistency_lhs(p, t) * std::sin(t), 0.0);
      EXPECT_LT(selfconsistency_lhs_derivative(p, t), 0.0);
    }
  }
}

TEST(SelfConsistency, DerivativeMatchesFiniteDifference) {
  const auto p = unit(1.7, 0.1, 2, 0.3);
  for (double t : {-1.2, -0.3, 0.5, 1.1}) {
    const double h = 1e-6;
    const double fd = (selfconsistency_lhs(p, t + h) - selfconsistency_lhs(p, t - h)) / (2 * h);
    EXPECT_NEAR(selfconsistency_lhs_derivative(p, t), fd, 1e-7);
  }
}

TEST(SolveMeanField, NormalPhaseUnbiased) {
  const auto s = solve_mean_field(unit(0.5, 0));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].theta, 0.0);
  EXPECT_EQ(s[0].alpha, 0.0);
  EXPECT_EQ(s[0].branch, Branch::NegativeGround);
}

TEST(SolveMeanField, SuperradiantUnbiased) {
  const auto s = solve_mean_field(unit(2, 0));
  ASSERT_EQ(s.size(), 3u);
  const double t = std::acos(0.25);
  EXPECT_NEAR(s[0].theta, -t, 1e-12);
  EXPECT_NEAR(s[1].theta, 0.0, 1e-12);
  EXPECT_NEAR(s[2].theta, t, 1e-12);
  EXPECT_NEAR(s[0].theta, -1.3181160716528180, 1e-12);
  EXPECT_EQ(s[1].branch, Branch::Unstable);
  // Degenerate pair: the tie goes to the negative root.
  EXPECT_EQ(s[0].branch, Branch::NegativeGround);
  EXPECT_EQ(s[2].branch, Branch::PositiveStable);
}

TEST(SolveMeanField, BiasedThreeRootsAgainstFrozenRoots) {
  // Roots frozen from an independent Brent solve on a 2e5-point grid.
  const auto s = solve_mean_field(unit(2.0, 0.11));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s[0].theta, -1.3252278723019058, 1e-12);
  EXPECT_NEAR(s[1].theta, 0.03668312311594421, 1e-12);
  EXPECT_NEAR(s[2].theta, 1.3105454589494934, 1e-12);
  EXPECT_EQ(s[0].branch, Branch::NegativeGround);
  EXPECT_EQ(s[1].branch, Branch::Unstable);
  EXPECT_EQ(s[2].branch, Branch::PositiveStable);
  EXPECT_LT(s[0].energy, s[2].energy);
}

TEST(SolveMeanField, Kappa15MatchesSignScan) {
  const auto s = solve_mean_field(unit(1.5, 0.11));
  EXPECT_EQ(int(s.size()), oracle::sign_scan_roots(2.25, 0.11));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s[0].theta, -1.135469261115295, 1e-12);
  EXPECT_NEAR(s[1].theta, 0.08839184550031452, 1e-12);
  EXPECT_NEAR(s[2].theta, 1.0809240644915838, 1e-12);
}

TEST(SolveMeanField, InvariantsOnGrid) {
  for (double k = 0.0; k <= 4.0; k += 0.25) {
    for (double ep : {0.0, 0.05, 0.3}) {
      for (int n : {1, 5}) {
        const auto p = ModelParams::from_rescaled(1, 10, k, ep, n);
        const auto s = solve_mean_field(p);
        int ground = 0;
        for (const auto& x : s) {
          EXPECT_LT(x.residual, 1e-12);
          EXPECT_DOUBLE_EQ(x.alpha, -(p.lambda() / p.omega()) * n * std::sin(x.theta));
          EXPECT_NEAR(x.energy, energy_functional(p, x.alpha, x.theta), 1e-12 * std::abs(x.energy));
          if (x.branch == Branch::NegativeGround) ++ground;
        }
        ASSERT_EQ(ground, 1);
        const auto* g = find_branch(s, Branch::NegativeGround);
        EXPECT_LE(g->theta, 0.0);
        for (const auto& x : s) EXPECT_LE(g->energy, x.energy + 1e-12);
      }
    }
  }
}

TEST(SolveMeanField, NegativeBiasMirrors) {
  const auto pos = solve_mean_field(unit(2.0, 0.11));
  const auto neg = solve_mean_field(unit(2.0, -0.11));
  ASSERT_EQ(pos.size(), neg.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const auto& a = pos[i];
    const auto& b = neg[pos.size() - 1 - i];
    EXPECT_NEAR(a.theta, -b.theta, 1e-14);
    EXPECT_NEAR(a.energy, b.energy, 1e-12);
    EXPECT_EQ(a.branch == Branch::Unstable, b.branch == Branch::Unstable);
  }
  EXPECT_GT(ground_solution(unit(2.0, -0.11)).theta, 0.0);
}

TEST(SolveMeanField, A2TermSolvesModifiedEquation) {
  const auto p = unit(5, 0.1, 1, 1.1);
  const auto s = solve_mean_field(p);
  ASSERT_EQ(s.size(), 1u);
  const double k2 = 25.0 / (1.0 + 1.1 * 25.0);
  EXPECT_NEAR((k2 - 1 / std::cos(s[0].theta)) * std::sin(s[0].theta), 0.1, 1e-12);
}

TEST(ThreeRootThreshold, MatchesClosedForm) {
  // Tangency of the LHS maximum with eps' gives (1 + eps'^{2/3})^{3/4}.
  EXPECT_NEAR(three_root_threshold(unit(1, 0.11)), 1.1676610924773705, 1e-9);
  EXPECT_NEAR(three_root_threshold(unit(1, 0.5)), 1.4425564434262985, 1e-9);
}

TEST(ThreeRootThreshold, LimitAndMonotone) {
  EXPECT_NEAR(three_root_threshold(unit(1, 1e-9)), 1.0, 1e-5);
  double prev = 1.0;
  for (double ep : {0.01, 0.05, 0.11, 0.2, 0.5, 1.0}) {
    const double k = three_root_threshold(unit(1, ep));
    EXPECT_GT(k, prev);
    prev = k;
  }
}

TEST(ThreeRootThreshold, BracketsRootCount) {
  const double k = three_root_threshold(unit(1, 0.11));
  EXPECT_EQ(solve_mean_field(unit(k - 1e-6, 0.11)).size(), 1u);
  EXPECT_EQ(solve_mean_field(unit(k + 1e-6, 0.11)).size(), 3u);
}

TEST(ThreeRootThreshold, Errors) {
  EXPECT_THROW(three_root_threshold(unit(1, 0.0)), InvalidArgument);
  EXPECT_THROW(three_root_threshold(unit(1, -0.1)), InvalidArgument);
  EXPECT_THROW(three_root_threshold(unit(1, 0.1, 1, 1.0)), InvalidArgument);
}

TEST(Occupations, ProductState) {
  const auto p = ModelParams::from_rescaled(1, 30, 1.3, 0.1, 4);
  const auto g = ground_solution(p);
  const auto o = occupations(p, g);
  EXPECT_DOUBLE_EQ(o.photons, g.alpha * g.alpha);
  EXPECT_DOUBLE_EQ(o.jz, -4 * std::cos(g.theta));
  EXPECT_DOUBLE_EQ(o.jx, 4 * std::sin(g.theta));
}
