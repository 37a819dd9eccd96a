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

#include "bdicke/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bdicke/error.hpp"

namespace bdicke {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTangencyTol = 1e-12;
constexpr double kEnergyTieTol = 1e-12;

// Positive-theta extremum of the LHS, where cos^3 theta = 1/kappa_eff^2.
double lhs_extremum(double kappa_eff_sq) { return std::acos(std::cbrt(1.0 / kappa_eff_sq)); }

std::vector<MeanFieldSolution> solve_nonnegative_bias(const ModelParams& params,
                                                      int grid_points) {
  const double eps_prime = params.eps_prime();
  const double k2 = params.kappa_eff_sq();
  const double lo = -kHalfPi + kThetaMargin;
  const double hi = kHalfPi - kThetaMargin;

  auto f = [&](double t) { return selfconsistency_lhs(params, t) - eps_prime; };
  auto df = [&](double t) { return selfconsistency_lhs_derivative(params, t); };

  std::vector<double> cuts{lo};
  double tangent_theta = std::nan("");
  if (k2 > 1.0) {
    const double tc = lhs_extremum(k2);
    if (tc > 0.0 && tc < hi) {
      cuts.push_back(-tc);
      cuts.push_back(tc);
      for (double t : {-tc, tc}) {
        if (std::abs(f(t)) <= kTangencyTol) tangent_theta = t;
      }
    }
  }
  cuts.push_back(hi);

  // Grid points shared between the monotone pieces in proportion to length.
  std::vector<double> thetas;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a = cuts[s];
    const double b = cuts[s + 1];
    if (!(b > a)) continue;
    const int pts = std::max(101, int(std::ceil(grid_points * (b - a) / (hi - lo))));
    for (double r : find_roots_1d(f, df, a, b, pts)) thetas.push_back(r);
  }
  std::sort(thetas.begin(), thetas.end());

  // A double root at the tangency is reported once, as the unstable point.
  if (!std::isnan(tangent_theta)) {
    std::erase_if(thetas, [&](double t) { return std::abs(t - tangent_theta) < 1e-6; });
    thetas.push_back(tangent_theta);
    std::sort(thetas.begin(), thetas.end());
  }
  thetas.erase(std::unique(thetas.begin(), thetas.end(),
                           [](double a, double b) { return std::abs(a - b) <= 1e-10; }),
               thetas.end());

  std::vector<MeanFieldSolution> sols;
  for (double t : thetas) {
    MeanFieldSolution s;
    s.theta = t;
    s.alpha = optimal_alpha(params, t);
    s.energy = energy_functional(params, s.alpha, t);
    s.residual = std::abs(f(t));
    s.lhs_slope = df(t);
    const bool tangent = !std::isnan(tangent_theta) && t == tangent_theta;
    bool decreasing = s.lhs_slope < 0.0;
    if (std::abs(s.lhs_slope) <= 1e-12) {
      // Degenerate slope (kappa_eff = 1 at zero bias): use the crossing direction.
      constexpr double h = 1e-4;
      decreasing = f(t - h) > 0.0 && f(t + h) < 0.0;
    }
    s.branch = (decreasing && !tangent) ? Branch::PositiveStable : Branch::Unstable;
    sols.push_back(s);
  }

  MeanFieldSolution* ground = nullptr;
  for (auto& s : sols) {
    if (s.branch == Branch::Unstable) continue;
    const double tie = kEnergyTieTol * std::max(1.0, std::abs(s.energy));
    if (!ground || s.energy < ground->energy - tie) ground = &s;
  }
  if (!ground) {
    throw NumericalError("solve_mean_field: no stable root found (kappa=" +
                         std::to_string(params.kappa()) +
                         ", eps'=" + std::to_string(eps_prime) + ")");
  }
  ground->branch = Branch::NegativeGround;
  return sols;
}

}  // namespace

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::NegativeGround: return "negative_ground";
    case Branch::PositiveStable: return "positive_stable";
    case Branch::Unstable: return "unstable";
  }
  return "unknown";
}

double energy_functional(const ModelParams& params, double alpha, double theta) {
  const double n = params.n_atoms();
  const double s = std::sin(theta);
  return params.omega() * alpha * alpha + 0.5 * n * params.epsilon() * s -
         0.5 * n * params.Omega() * std::cos(theta) + 2.0 * alpha * params.lambda() * n * s +
         4.0 * params.kappa0() * alpha * alpha;
}

double selfconsistency_lhs(const ModelParams& params, double theta) {
  return (params.kappa_eff_sq() - 1.0 / std::cos(theta)) * std::sin(theta);
}

double selfconsistency_lhs_derivative(const ModelParams& params, double theta) {
  const double c = std::cos(theta);
  return params.kappa_eff_sq() * c - 1.0 / (c * c);
}

double optimal_alpha(const ModelParams& params, double theta) {
  return -params.lambda() * params.n_atoms() * std::sin(theta) /
         (params.omega() + 4.0 * params.kappa0());
}

std::vector<MeanFieldSolution> solve_mean_field(const ModelParams& params, int grid_points) {
  if (params.epsilon() >= 0.0) return solve_nonnegative_bias(params, grid_points);

  // LHS is odd in theta: roots for -eps' are the negated roots for +eps'.
  const ModelParams mirrored = params.with_epsilon(-params.epsilon());
  std::vector<MeanFieldSolution> sols = solve_nonnegative_bias(mirrored, grid_points);
  for (auto& s : sols) {
    s.theta = -s.theta;
    s.alpha = -s.alpha;
    s.energy = energy_functional(params, s.alpha, s.theta);
    s.residual = std::abs(selfconsistency_lhs(params, s.theta) - params.eps_prime());
  }
  std::reverse(sols.begin(), sols.end());
  return sols;
}

MeanFieldSolution ground_solution(const ModelParams& params) {
  const auto sols = solve_mean_field(params);
  return *find_branch(sols, Branch::NegativeGround);
}

const MeanFieldSolution* find_branch(const std::vector<MeanFieldSolution>& sols, Branch branch) {
  for (const auto& s : sols)
    if (s.branch == branch) return &s;
  return nullptr;
}

namespace {

// max over theta in (0, pi/2) of the LHS. Unimodal there: it rises to the
// extremum when kappa_eff > 1 and is decreasing otherwise.
double positive_lhs_maximum(const ModelParams& params) {
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0;
  double b = kHalfPi - kThetaMargin;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = selfconsistency_lhs(params, c);
  double fd = selfconsistency_lhs(params, d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = selfconsistency_lhs(params, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = selfconsistency_lhs(params, d);
    }
  }
  return std::max({selfconsistency_lhs(params, 0.5 * (a + b)), fc, fd, 0.0});
}

}  // namespace

double three_root_threshold(const ModelParams& params) {
  const double eps_prime = params.eps_prime();
  if (!(eps_prime > 0.0)) {
    throw InvalidArgument("three_root_threshold: requires eps' > 0");
  }
  if (params.alpha0() >= 1.0) {
    throw InvalidArgument("three_root_threshold: LHS is monotone for alpha0 >= 1");
  }
  auto excess = [&](double kappa) {
    return positive_lhs_maximum(params.with_kappa(kappa)) - eps_prime;
  };
  double lo = 1.0;  // no positive maximum for kappa_eff <= 1
  double hi = 2.0;
  // kappa_eff^2 saturates at 1/alpha0, so the bracket search is bounded.
  while (excess(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e8) {
      throw NumericalError("three_root_threshold: no three-root regime for eps'=" +
                           std::to_string(eps_prime));
    }
  }
  while (hi - lo > 1e-11) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

MeanFieldOccupations occupations(const ModelParams& params, const MeanFieldSolution& sol) {
  const double n = params.n_atoms();
  return {sol.alpha * sol.alpha, -n * std::cos(sol.theta), n * std::sin(sol.theta)};
}

}  // namespace bdicke
