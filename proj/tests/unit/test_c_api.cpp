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
#include <string>
#include <vector>

#include "bdicke/bdicke.h"

TEST(CApi, VersionAndErrors) {
  EXPECT_STREQ(bdicke_version(), BDICKE_VERSION_STRING);
  bdicke_params* p = nullptr;
  EXPECT_EQ(bdicke_params_create(-1, 1, 0, 1, 1, 0, &p), BDICKE_INVALID_ARGUMENT);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(bdicke_last_error()), "");
  EXPECT_EQ(bdicke_params_create(1, 1, 0, 1, 1, 0, nullptr), BDICKE_INVALID_ARGUMENT);
}

TEST(CApi, MeanFieldAndCo) {
  bdicke_params* p = nullptr;
  ASSERT_EQ(bdicke_params_from_rescaled(1, 1, 0.6, 0, 1, 0, &p), BDICKE_OK);
  bdicke_param_values v;
  ASSERT_EQ(bdicke_params_get(p, &v), BDICKE_OK);
  EXPECT_NEAR(v.kappa, 0.6, 1e-15);
  bdicke_mf_solution s[3];
  size_t n = 0;
  ASSERT_EQ(bdicke_solve_mean_field(p, s, 3, &n), BDICKE_OK);
  ASSERT_EQ(n, 1u);
  EXPECT_EQ(s[0].branch, BDICKE_BRANCH_NEGATIVE_GROUND);
  bdicke_co_effective e;
  ASSERT_EQ(bdicke_co_compute(p, &s[0], &e), BDICKE_OK);
  EXPECT_NEAR(e.omega_prime, 0.8, 1e-14);
  double t = 0;
  EXPECT_EQ(bdicke_three_root_threshold(p, &t), BDICKE_INVALID_ARGUMENT);
  s[0].branch = 7;
  EXPECT_EQ(bdicke_co_compute(p, &s[0], &e), BDICKE_INVALID_ARGUMENT);
  bdicke_params_destroy(p);
}

TEST(CApi, ExactAndFidelity) {
  bdicke_params* p = nullptr;
  ASSERT_EQ(bdicke_params_from_rescaled(1, 20, 0.8, 0.1, 3, 0, &p), BDICKE_OK);
  bdicke_convergence_options o;
  bdicke_convergence_options_default(&o);
  EXPECT_EQ(o.initial_cutoff, 32);
  EXPECT_EQ(o.max_cutoff, 4096);
  bdicke_spectrum* s = nullptr;
  ASSERT_EQ(bdicke_diagonalize_converged(p, &o, &s), BDICKE_OK);
  bdicke_convergence_info info;
  ASSERT_EQ(bdicke_spectrum_convergence(s, &info), BDICKE_OK);
  EXPECT_EQ(info.converged, 1);
  EXPECT_EQ(bdicke_spectrum_size(s), size_t((info.cutoff + 1) * 4));
  std::vector<int> cut(info.steps);
  ASSERT_EQ(bdicke_spectrum_history(s, cut.data(), nullptr, nullptr), BDICKE_OK);
  EXPECT_EQ(cut.back(), info.cutoff);
  double gaps[5];
  ASSERT_EQ(bdicke_spectrum_gaps(s, 5, gaps), BDICKE_OK);
  EXPECT_GT(gaps[0], 0.0);

  bdicke_mf_solution m[3];
  size_t n = 0;
  ASSERT_EQ(bdicke_solve_mean_field(p, m, 3, &n), BDICKE_OK);
  bdicke_co_effective e;
  ASSERT_EQ(bdicke_co_compute(p, &m[0], &e), BDICKE_OK);
  double f = 0;
  ASSERT_EQ(bdicke_ansatz_fidelity(s, &m[0], &e, &f), BDICKE_OK);
  EXPECT_GT(f, 0.99);
  bdicke_spectrum_destroy(s);

  o.max_cutoff = 32;
  ASSERT_EQ(bdicke_diagonalize_converged(p, &o, &s), BDICKE_NOT_CONVERGED);
  ASSERT_NE(s, nullptr);
  bdicke_spectrum_destroy(s);
  bdicke_params_destroy(p);
}

TEST(CApi, LaddersAndModes) {
  const double g[] = {1, 2, 3, 4, 5};
  bdicke_ladder_fit fit;
  ASSERT_EQ(bdicke_decompose_ladders(g, 5, 0.25, &fit), BDICKE_OK);
  EXPECT_EQ(fit.n_ladders, 1);
  EXPECT_NEAR(fit.spacing[0], 1.0, 1e-14);

  bdicke_params* p = nullptr;
  ASSERT_EQ(bdicke_params_from_rescaled(1, 1, 0.8, 0.2, 1, 0, &p), BDICKE_OK);
  bdicke_mf_solution m[3];
  size_t n = 0;
  ASSERT_EQ(bdicke_solve_mean_field(p, m, 3, &n), BDICKE_OK);
  bdicke_normal_modes nm;
  ASSERT_EQ(bdicke_cs_normal_modes(p, &m[0], &nm), BDICKE_OK);
  EXPECT_LT(nm.omega_minus, nm.omega_plus);
  double norm = 1;
  ASSERT_EQ(bdicke_parity_commutator_norm(p, 10, &norm), BDICKE_OK);
  EXPECT_GT(norm, 0.0);
  bdicke_params_destroy(p);
}
