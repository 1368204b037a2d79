// Copyright 2026 The native_kernels Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nk/errors.hpp"
#include "nk/families.hpp"
#include "nk/hyperkernel.hpp"

namespace {

using nk::Kernel;
constexpr double kPi = std::numbers::pi;

TEST(Wendland, AskeyClosedForm) {
  EXPECT_DOUBLE_EQ(Kernel::askey(1.0, 6.0, 2)(0.5), 0.015625);
  EXPECT_EQ(Kernel::askey(1.0, 6.0, 2)(0.0), 1.0);
  EXPECT_EQ(Kernel::askey(1.0, 6.0, 2)(1.2), 0.0);
}

TEST(Wendland, OrdinaryWendlandClosedForm) {
  const nk::WendlandParams w{1.0, 1.0, 6.0, 2, 0};
  const double want = std::pow(0.7, 7) * (1.0 + 7.0 * 0.3);
  EXPECT_NEAR(nk::generalized_wendland(w, 0.3), want, 1e-15);
  EXPECT_NEAR(nk::evaluate(nk::wendland_to_hyper(w), 0.3), want, 1e-14);
}

TEST(Wendland, HoleEffectMatchesClassKernel) {
  const nk::WendlandParams w{2.0, 1.0, 6.0, 2, 2};
  for (double h : {0.2, 0.9, 1.5}) EXPECT_NEAR(nk::hole_wendland(w, h), nk::evaluate(nk::wendland_to_hyper(w), h), 1e-14);
}

TEST(Wendland, ParameterMap) {
  const nk::HyperParams t = nk::wendland_to_hyper({1.5, 1.0, 6.0, 2, 1});
  EXPECT_DOUBLE_EQ(t.a, 1.5);
  EXPECT_DOUBLE_EQ(t.alpha, 1.0 + 1.5 + 1.0);
  EXPECT_DOUBLE_EQ(t.beta, 1.0 + 4.5 + 1.0);
  EXPECT_DOUBLE_EQ(t.gamma, 1.0 + 4.0 + 1.0 + 1.0);
}

TEST(Wendland, ExponentBelowMinimumThrows) {
  EXPECT_THROW(Kernel::askey(1.0, 1.0, 2), nk::InvalidParameters);
  EXPECT_THROW(Kernel::wendland({1.0, -0.6, 6.0, 2, 0}), nk::InvalidParameters);
  EXPECT_DOUBLE_EQ(nk::nu_min(0.0, 2), 1.5);
}

TEST(TruncatedPolynomial, AgreesWithClassKernel) {
  const nk::HyperParams t = nk::truncated_polynomial_params(1.0, 2.5, 2, 1, 2, 3);
  EXPECT_DOUBLE_EQ(t.beta, 5.5);
  EXPECT_DOUBLE_EQ(t.gamma, 6.0);
  for (double h : {0.1, 0.4, 0.8}) EXPECT_NEAR(nk::truncated_polynomial(t, h), nk::evaluate(t, h), 1e-13);
  EXPECT_EQ(nk::truncated_polynomial(t, 1.0), 0.0);
}

TEST(TruncatedPolynomial, LowestRowIsAskeyLike) {
  // M = 0, N = 1 in one dimension: alpha = 1, beta = 2, gamma = 3.5.
  const nk::HyperParams t{1.0, 1.0, 2.0, 3.5, 1, 0};
  for (double h : {0.1, 0.4, 0.8}) EXPECT_NEAR(nk::truncated_polynomial(t, h), nk::evaluate(t, h), 1e-13);
}

TEST(Classical, ClosedForms) {
  const double x = 0.4;
  EXPECT_NEAR(Kernel::spherical(1.0)(x), 1 - 1.5 * x + 0.5 * x * x * x, 1e-15);
  EXPECT_NEAR(Kernel::circular(1.0)(x), 2 / kPi * (std::acos(x) - x * std::sqrt(1 - x * x)), 1e-15);
  EXPECT_NEAR(Kernel::pentaspherical(1.0)(x), 1 - 15. / 8 * x + 5. / 4 * std::pow(x, 3) - 3. / 8 * std::pow(x, 5), 1e-15);
  EXPECT_NEAR(Kernel::cubic(1.0)(x),
              1 - 7 * x * x + 35. / 4 * std::pow(x, 3) - 3.5 * std::pow(x, 5) + 0.75 * std::pow(x, 7), 1e-14);
  EXPECT_NEAR(Kernel::penta(1.0)(x),
              1 - 22. / 3 * x * x + 33 * std::pow(x, 4) - 77. / 2 * std::pow(x, 5) + 33. / 2 * std::pow(x, 7) -
                  11. / 2 * std::pow(x, 9) + 5. / 6 * std::pow(x, 11),
              1e-14);
}

TEST(Classical, EuclidHatInThreeDimensionsIsSpherical) {
  for (double h : {0.1, 0.5, 0.9}) EXPECT_NEAR(Kernel::euclid_hat(1.0, 3)(h), Kernel::spherical(1.0)(h), 1e-14);
  EXPECT_EQ(Kernel::euclid_hat(1.0, 3).dimension(), 3);
}

TEST(Matern, HalfIntegerClosedForms) {
  EXPECT_NEAR(nk::matern(1.0, 0.5, 1.0), std::exp(-1.0), 1e-16);
  EXPECT_EQ(nk::matern(1.0, 2.7, 0.0), 1.0);
  EXPECT_NEAR(nk::matern(1.0, 1.5, 0.5), 0.9097959895689501, 1e-15);  // (1 + x) e^{−x}
}

TEST(Matern, HoleEffectOracles) {
  EXPECT_NEAR(nk::hole_matern(1.0, 1.5, 2, 2, 0.5), 0.767640366198801677, 1e-14);
  EXPECT_NEAR(nk::hole_matern(1.0, 2.3, 3, 1, 0.5), 0.9265378010617467, 1e-14);
  EXPECT_NEAR(nk::hole_matern(1.0, 320.5, 2, 2, 50.0), -0.14118788307568566, 1e-12);
}

TEST(Matern, RoutesAgree) {
  for (double x : {0.5, 3.0, 10.0})
    EXPECT_NEAR(nk::hole_matern_bessel_sum(1.0, 1.5, 2, 2, x), nk::hole_matern_hypergeometric(1.0, 1.5, 2, 2, x),
                1e-12);
}

TEST(Matern, ZeroOrderIsPlainMatern) {
  for (double h : {0.0, 0.3, 2.0}) EXPECT_NEAR(nk::hole_matern(1.0, 1.5, 2, 0, h), nk::matern(1.0, 1.5, h), 1e-15);
}

TEST(Schoenberg, LowDimensionalClosedForms) {
  EXPECT_NEAR(nk::schoenberg(1.0, 1, kPi), -1.0, 1e-15);
  EXPECT_NEAR(nk::schoenberg(1.0, 3, kPi), 0.0, 1e-15);
  EXPECT_NEAR(nk::schoenberg(1.0, 3, 2.5), std::sin(2.5) / 2.5, 1e-15);
  EXPECT_EQ(nk::schoenberg(1.0, 2, 0.0), 1.0);
}

TEST(Gaussian, ClosedForm) {
  EXPECT_EQ(nk::gaussian(1.0, 0.0), 1.0);
  EXPECT_NEAR(nk::gaussian(1.0, 1.0), 0.36787944117144233, 1e-16);
  EXPECT_NEAR(nk::gaussian(1.0, 2.0), 0.01831563888873418, 1e-17);
}

TEST(Gaussian, HoleEffect) {
  for (double h : {0.3, 1.7}) EXPECT_NEAR(nk::hole_gaussian(1.0, 2, 0, h), std::exp(-h * h / 4.0), 1e-16);
  EXPECT_EQ(nk::hole_gaussian(1.0, 2, 3, 0.0), 1.0);
  int changes = 0;
  double prev = 1.0;
  for (int i = 1; i <= 4000; ++i) {
    const double v = nk::hole_gaussian(1.0, 2, 3, i * 0.005);
    if (v * prev < 0) ++changes;
    if (v != 0.0) prev = v;
  }
  EXPECT_GE(changes, 3);
}

TEST(IncompleteGamma, ClosedFormCases) {
  EXPECT_NEAR(nk::incomplete_gamma_kernel(1.0, 2.0, 2, 0, 1.0), std::exp(-1.0), 1e-15);  // α = d/2 + 1
  EXPECT_EQ(nk::incomplete_gamma_kernel(1.0, 1.5, 2, 0, 0.0), 1.0);                      // α = (d+1)/2
  EXPECT_NEAR(nk::incomplete_gamma_kernel(1.0, 3.0, 2, 0, 1.0), 2.0 * std::exp(-1.0), 1e-15);
}

TEST(IncompleteGamma, HoleEffectOracle) {
  EXPECT_NEAR(nk::incomplete_gamma_kernel(1.0, 5.5, 2, 2, 0.7), 0.770137841662539, 1e-13);
  EXPECT_NEAR(nk::incomplete_gamma_kernel(1.0, 5.5, 2, 2, 8.0), 1.157e-22, 1e-24);
}

TEST(KernelObject, Metadata) {
  const Kernel w = Kernel::wendland({2.0, 1.0, 6.0, 2, 1});
  EXPECT_EQ(w.family(), nk::Family::Wendland);
  EXPECT_EQ(w.name(), "wendland");
  EXPECT_EQ(Kernel::askey(1.0, 6.0, 2).name(), "askey");
  EXPECT_DOUBLE_EQ(w.support(), 2.0);
  EXPECT_TRUE(w.compact());
  EXPECT_EQ(w.dimension(), 2);
  EXPECT_EQ(w.hole_order(), 1);
  ASSERT_TRUE(w.hyper_params().has_value());

  const Kernel m = Kernel::matern(1.0, 1.5);
  EXPECT_FALSE(m.compact());
  EXPECT_FALSE(m.dimension().has_value());
  EXPECT_FALSE(m.hyper_params().has_value());
  EXPECT_EQ(Kernel::matern(1.0, 1.5, 2, 2).name(), "hole-matern");
  EXPECT_EQ(Kernel::matern(1.0, 1.5, 2, 2).dimension(), 2);
}

TEST(KernelObject, NegativeDistanceThrows) { EXPECT_THROW((void)Kernel::spherical(1.0)(-1.0), nk::DomainError); }

TEST(KernelObject, LowerBoundOnGrids) {
  const Kernel ks[] = {Kernel::askey(1.0, 6.0, 2, 2), Kernel::wendland({1.0, 1.0, 6.0, 2, 2}),
                       Kernel::matern(1.0, 5.5, 2, 5), Kernel::schoenberg(1.0, 2),
                       Kernel::hole_gaussian(1.0, 2, 4), Kernel::hypergeometric({1.0, 3.5, 7.0, 5.0, 2, 1})};
  for (const auto& k : ks)
    for (int i = 0; i <= 2000; ++i) EXPECT_GE(k(i * 0.01), -0.5 - 1e-9) << k.name();
}

}  // namespace
