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

#ifndef BDICKE_CS_LIMIT_HPP
#define BDICKE_CS_LIMIT_HPP

#include "bdicke/meanfield.hpp"
#include "bdicke/params.hpp"

namespace bdicke {

struct QuadratureVariances {
  double var_xa = 0.0;
  double var_xb = 0.0;
  double var_pa = 0.0;
  double var_pb = 0.0;
};

/// Holstein-Primakoff (N -> infinity) normal modes around a stable branch.
///
/// In quadrature form
///   H2 = 1/2 (p_a^2 + omega^2 x_a^2) + 1/2 (p_b^2 + Omega'^2 x_b^2) + g x_a x_b,
///   g = 2 lambda sqrt(N) cos(theta) sqrt(omega Omega'),
/// and the rotation x_a = cos(sigma) q_- + sin(sigma) q_+,
/// x_b = -sin(sigma) q_- + cos(sigma) q_+ with tan(2 sigma) = 2 g / (Omega'^2 - omega^2)
/// decouples the two modes. sigma -> 0 as lambda -> 0 when omega < Omega'; for
/// omega > Omega' the mode labelled "-" is the atomic one and sigma -> pi/2.
struct NormalModes {
  double omega_minus = 0.0;
  double omega_plus = 0.0;
  double sigma = 0.0;
  double omega_field = 0.0;  // omega
  double omega_atom = 0.0;   // Omega'
  double coupling = 0.0;     // g
  QuadratureVariances variances;
};

// Throws NumericalError when omega_-^2 < 0 (unstable beyond the CS critical
// point) and InvalidArgument for an unstable root or alpha0 > 0.
NormalModes cs_normal_modes(const ModelParams& params, const MeanFieldSolution& sol);

QuadratureVariances cs_variances(const NormalModes& modes);

}  // namespace bdicke

#endif  // BDICKE_CS_LIMIT_HPP
