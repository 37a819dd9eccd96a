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

#include "bdicke/cs_limit.hpp"

#include <cmath>
#include <string>

#include "bdicke/co_limit.hpp"
#include "bdicke/error.hpp"

namespace bdicke {

NormalModes cs_normal_modes(const ModelParams& params, const MeanFieldSolution& sol) {
  if (sol.branch == Branch::Unstable) {
    throw InvalidArgument("cs_normal_modes: requires a stable branch");
  }
  if (params.alpha0() > 0.0) {
    throw InvalidArgument("cs_normal_modes: the A^2 term is not part of the spin-boson model here");
  }
  NormalModes m;
  m.omega_field = params.omega();
  m.omega_atom = effective_atom_splitting(params, sol);
  if (!(m.omega_atom > 0.0)) {
    throw NumericalError("cs_normal_modes: Omega' <= 0 on branch " +
                         std::string(to_string(sol.branch)));
  }
  m.coupling = 2.0 * params.lambda() * std::sqrt(double(params.n_atoms())) * std::cos(sol.theta) *
               std::sqrt(m.omega_field * m.omega_atom);

  const double a = m.omega_field * m.omega_field;
  const double b = m.omega_atom * m.omega_atom;
  const double g = m.coupling;
  const double plus_sq = 0.5 * (a + b + std::hypot(b - a, 2.0 * g));
  // From the determinant to keep the small root accurate.
  const double minus_sq = (a * b - g * g) / plus_sq;
  if (minus_sq < 0.0) {
    throw NumericalError("cs_normal_modes: unstable branch beyond CS critical point (omega_-^2 = " +
                         std::to_string(minus_sq) + ")");
  }
  m.omega_plus = std::sqrt(plus_sq);
  m.omega_minus = std::sqrt(minus_sq);
  m.sigma = 0.5 * std::atan2(2.0 * g, b - a);
  m.variances = cs_variances(m);
  return m;
}

QuadratureVariances cs_variances(const NormalModes& modes) {
  const double c2 = std::cos(modes.sigma) * std::cos(modes.sigma);
  const double s2 = std::sin(modes.sigma) * std::sin(modes.sigma);
  const double wm = modes.omega_minus;
  const double wp = modes.omega_plus;
  QuadratureVariances v;
  v.var_xa = c2 / (2.0 * wm) + s2 / (2.0 * wp);
  v.var_xb = s2 / (2.0 * wm) + c2 / (2.0 * wp);
  v.var_pa = 0.5 * (wm * c2 + wp * s2);
  v.var_pb = 0.5 * (wm * s2 + wp * c2);
  return v;
}

}  // namespace bdicke
