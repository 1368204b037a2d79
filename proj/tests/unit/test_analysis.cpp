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

#include "nk/analysis.hpp"
#include "nk/errors.hpp"
#include "nk/hyperkernel.hpp"

namespace {

const nk::HyperParams kSpherical{1.0, 2.0, 2.5, 4.0, 3, 0};

TEST(Smoothness, SphericalSlope) {
  const nk::SmoothnessReport r = nk::smoothness_report(kSpherical);
  EXPECT_EQ(r.origin_first_kind, nk::FirstDerivativeKind::FiniteNegative);
  EXPECT_NEAR(r.origin_first_derivative, -1.5, 1e-12);
  EXPECT_DOUBLE_EQ(r.theta_exponent, 3.0);
  EXPECT_FALSE(r.fractal_dimension.has_value());
  EXPECT_FALSE(r.sobolev_exponent.has_value());  // A.3 holds with equality
  EXPECT_EQ(r.msd_order, 0);
}

TEST(Smoothness, ScaleEntersTheSlope) {
  const nk::SmoothnessReport r = nk::smoothness_report({2.5, 2.0, 2.5, 4.0, 3, 0});
  EXPECT_NEAR(r.origin_first_derivative, -1.5 / 2.5, 1e-12);
}

TEST(Smoothness, RoughKernelHasInfiniteSlopeAndFractalDimension) {
  const nk::SmoothnessReport r = nk::smoothness_report({1.0, 1.2, 3.1, 4.2, 2, 0});
  EXPECT_EQ(r.origin_first_kind, nk::FirstDerivativeKind::NegativeInfinity);
  ASSERT_TRUE(r.fractal_dimension.has_value());
  EXPECT_NEAR(*r.fractal_dimension, 2.0 + 1.0 - (2.0 * 1.2 - 1.0) / 2.0, 1e-14);
}

TEST(Smoothness, SmoothKernelHasZeroSlope) {
  const nk::SmoothnessReport r = nk::smoothness_report({1.0, 3.5, 7.0, 5.0, 2, 1});
  EXPECT_EQ(r.origin_first_kind, nk::FirstDerivativeKind::Zero);
  ASSERT_TRUE(r.sobolev_exponent.has_value());
  EXPECT_DOUBLE_EQ(*r.sobolev_exponent, 2.5);
}

TEST(Smoothness, RequiresValidParameters) {
  EXPECT_THROW(nk::smoothness_report({1.0, 1.0, 1.1, 1.2, 3, 0}), nk::InvalidParameters);
}

TEST(TailFit, SphericalDecay) {
  const nk::TailFit f = nk::tail_fit(kSpherical, 100.0, 1000.0, 40);
  EXPECT_NEAR(f.exponent_estimate, -4.0, 0.1);
}

TEST(TailFit, StrictInteriorKernel) {
  const nk::HyperParams t{1.0, 3.5, 9.0, 8.0, 2, 1};
  const nk::TailFit f = nk::tail_fit(t, 100.0, 1000.0, 40);
  EXPECT_NEAR(f.exponent_estimate, 2.0 - 7.0, 0.1);
}

TEST(TailFit, WindowMustBeAsymptotic) {
  EXPECT_THROW(nk::tail_fit(kSpherical, 10.0, 100.0, 10), nk::DomainError);
  EXPECT_THROW(nk::tail_fit(kSpherical, 100.0, 100.0, 10), nk::DomainError);
}

TEST(HoleDiagnostics, MonotoneWithoutHole) {
  const nk::HoleDiagnostics d = nk::hole_diagnostics(nk::Kernel::spherical(1.0), 1000);
  EXPECT_GE(d.min_value, -1e-12);
  EXPECT_EQ(d.sign_changes, 0);
  EXPECT_TRUE(d.nonincreasing);
}

TEST(HoleDiagnostics, AskeyHoleEffect) {
  const nk::HoleDiagnostics d = nk::hole_diagnostics(nk::Kernel::askey(1.0, 6.0, 2, 2), 2000);
  EXPECT_GE(d.sign_changes, 2);
  EXPECT_LT(d.min_value, 0.0);
  EXPECT_GE(d.min_value, -0.5 - 1e-9);
  EXPECT_FALSE(d.nonincreasing);
}

TEST(HoleDiagnostics, GridTooCoarseThrows) {
  EXPECT_THROW(nk::hole_diagnostics(nk::Kernel::spherical(1.0), 10), nk::DomainError);
}

}  // namespace
