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

#ifndef BDICKE_MEANFIELD_HPP
#define BDICKE_MEANFIELD_HPP

#include <string_view>
#include <vector>

#include "bdicke/params.hpp"
#include "bdicke/roots.hpp"

namespace bdicke {

enum class Branch { NegativeGround, PositiveStable, Unstable };

std::string_view to_string(Branch branch);

/// Stationary point of the product-state energy E(alpha, theta) with
/// <J_z> = -N cos(theta), <J_x> = N sin(theta), <a + a^dag> = 2 alpha.
struct MeanFieldSolution {
  double theta = 0.0;   // radians, |theta| < pi/2
  double alpha = 0.0;   // boson displacement at the alpha-minimum
  double energy = 0.0;  // E(alpha, theta)
  Branch branch = Branch::Unstable;
  double residual = 0.0;   // |LHS(theta) - eps'|
  double lhs_slope = 0.0;  // d LHS / d theta at the root; < 0 means stable
};

// Scan interval for theta; the 1/cos(theta) term diverges at +-pi/2.
inline constexpr double kThetaMargin = 1e-6;

double energy_functional(const ModelParams& params, double alpha, double theta);

// (kappa_eff^2 - 1/cos theta) sin theta, with kappa_eff^2 = kappa^2 / (1 + alpha0 kappa^2).
double selfconsistency_lhs(const ModelParams& params, double theta);
double selfconsistency_lhs_derivative(const ModelParams& params, double theta);

// Minimizer of E over alpha at fixed theta: -lambda N sin(theta) / (omega + 4 kappa0).
double optimal_alpha(const ModelParams& params, double theta);

/// All roots of LHS(theta) = eps' in (-pi/2 + margin, pi/2 - margin), ascending.
///
/// The interval is split at the extrema of the LHS (cos^3 theta = 1/kappa_eff^2)
/// so every monotone piece is scanned separately and close root pairs near the
/// tangency cannot slip between grid points. Exactly one stable root is
/// labelled NegativeGround; ties between degenerate stable roots go to the
/// smaller theta. Negative bias is mapped onto positive bias by theta -> -theta.
std::vector<MeanFieldSolution> solve_mean_field(const ModelParams& params,
                                                int grid_points = kDefaultGridPoints);

MeanFieldSolution ground_solution(const ModelParams& params);

// First solution with the given branch label, or nullptr.
const MeanFieldSolution* find_branch(const std::vector<MeanFieldSolution>& sols, Branch branch);

/// Smallest kappa at which the positive-theta local maximum of the LHS reaches
/// eps' (onset of the three-root regime), to 1e-10 in kappa. Uses golden-section
/// maximization in theta nested inside bisection in kappa. Requires eps' > 0;
/// fails when alpha0 >= 1, where the LHS is monotone for every kappa.
double three_root_threshold(const ModelParams& params);

struct MeanFieldOccupations {
  double photons = 0.0;  // alpha^2
  double jz = 0.0;       // -N cos(theta)
  double jx = 0.0;       // N sin(theta)
};

MeanFieldOccupations occupations(const ModelParams& params, const MeanFieldSolution& sol);

}  // namespace bdicke

#endif  // BDICKE_MEANFIELD_HPP
