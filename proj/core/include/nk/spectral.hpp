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

#pragma once

// Radial Fourier transforms (numerical oracle in both directions), the
// Schoenberg density identity and the turning-bands operator of even order.

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "nk/families.hpp"

namespace nk {

using RadialFunction = std::function<double(double)>;
/// (h, m) ↦ d^m/dh^m C(h).
using RadialDerivative = std::function<double(double, int)>;

struct RadialTransformConfig {
  /// Upper integration limit. For a compactly supported integrand set it to
  /// the support radius; +∞ integrates panel by panel with acceleration.
  double truncation_radius = std::numeric_limits<double>::infinity();
  /// Relative tolerance of each panel and of the accelerated tail.
  double tolerance = 1e-11;
  /// Maximum bisection depth of the adaptive Gauss–Kronrod rule per panel.
  unsigned max_depth = 12;
  /// Panel budget for infinite ranges.
  int max_panels = 20000;
};

struct TransformResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
  std::vector<std::string> warnings;
};

/// f_d(u) = (2π)^{−d/2} u^{1−d/2} ∫₀^∞ h^{d/2} J_{d/2−1}(uh) C(h) dh for
/// u ≥ 0 (u = 0 by continuity). Throws ConvergenceError when the panel
/// budget runs out.
TransformResult hankel_forward(const RadialFunction& c, int d, double u, const RadialTransformConfig& cfg = {});
/// Same, with the truncation radius taken from the kernel support.
TransformResult hankel_forward(const Kernel& kernel, int d, double u, RadialTransformConfig cfg = {});

/// C(h) = (2π)^{d/2} h^{1−d/2} ∫₀^∞ u^{d/2} J_{d/2−1}(uh) f(u) du.
/// `tail_exponent`, if known, is the power-law decay rate of f; a value not
/// above d triggers a slow-decay warning.
TransformResult hankel_inverse(const RadialFunction& f, int d, double h, const RadialTransformConfig& cfg = {},
                               double tail_exponent = std::numeric_limits<double>::quiet_NaN());

/// g_d(u) = 2π^{d/2}/Γ(d/2) · u^{d−1} · f_d(u).
double schoenberg_density(const RadialFunction& f, int d, double u);

struct TurningBandsResult {
  double value = 0.0;
  /// Largest Richardson discrepancy among the finite-difference derivatives
  /// (zero when an analytic derivative was supplied).
  double derivative_noise = 0.0;
  std::vector<std::string> warnings;
};

/// Turning-bands operator of order 2k: maps a source kernel of Φ_{d+2k} to
/// a kernel of Φ_d through a finite combination of h^m C^{(m)}(h).
/// Derivatives come from `derivative` when given, otherwise from central
/// differences with two Richardson levels.
TurningBandsResult turning_bands(const RadialFunction& source, int d, int k, double h,
                                 const RadialDerivative& derivative = nullptr);

/// Central-difference derivative of order m with two Richardson levels.
/// `noise` receives the discrepancy between the last two levels.
double finite_difference_derivative(const RadialFunction& f, double h, int m, double* noise = nullptr);

}  // namespace nk
