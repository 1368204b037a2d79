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

// Closed-form local and global properties of ℋ_θ: behaviour at the origin,
// Sobolev exponent, fractal dimension, differentiability at the range,
// spectral tail fit and hole-effect diagnostics.

#include <optional>
#include <string>
#include <vector>

#include "nk/families.hpp"
#include "nk/hyperkernel.hpp"
#include "nk/spectral.hpp"

namespace nk {

enum class FirstDerivativeKind { Zero, FiniteNegative, NegativeInfinity };
enum class SecondDerivativeKind { Finite, PositiveInfinity, NegativeInfinity };

std::string to_string(FirstDerivativeKind k);
std::string to_string(SecondDerivativeKind k);

struct SmoothnessReport {
  std::optional<double> sobolev_exponent;   // α − k, only under strict A.3
  int msd_order = 0;                        // ⌊α − d/2 − k⌋
  /// d + 1 − ϑ/2 with ϑ = 2(α − k) − 1, only when 0 < ϑ ≤ 2.
  std::optional<double> fractal_dimension;
  double theta_exponent = 0.0;              // ϑ

  FirstDerivativeKind origin_first_kind = FirstDerivativeKind::Zero;
  double origin_first_derivative = 0.0;     // meaningful for Zero and FiniteNegative
  SecondDerivativeKind origin_second_kind = SecondDerivativeKind::Finite;
  double origin_second_derivative = 0.0;    // meaningful for Finite

  /// Largest integer p with β + γ − α − 2k − d/2 − 1 > p.
  int range_diff_order = 0;
  double range_exponent = 0.0;
  bool range_caveat_beta_gamma_integer = false;        // β + γ ∈ ℕ
  bool range_caveat_shifted_integer = false;           // β + γ − α − d/2 ∈ ℕ
};

/// Requires A.1–A.4; throws InvalidParameters otherwise.
SmoothnessReport smoothness_report(const HyperParams& theta);

struct TailFit {
  double exponent_estimate = 0.0;
  double constant_estimate = 0.0;  // ζ in f(u) ≈ ζ u^{exponent}
  double u_lo = 0.0;
  double u_hi = 0.0;
  double residual = 0.0;           // RMS of raw log samples about the fit
  std::vector<std::string> warnings;
};

/// Log-log least squares on `n` log-spaced samples of the spectral density,
/// each averaged over one oscillation period 2π/a. The residual is taken on
/// the unaveraged samples. Requires a·u_lo ≥ 50 and n ≥ 2.
TailFit tail_fit(const HyperParams& theta, double u_lo, double u_hi, int n);

struct HoleDiagnostics {
  double min_value = 0.0;
  double argmin = 0.0;
  int sign_changes = 0;
  bool nonincreasing = true;  // within 1e-12
  double scan_end = 0.0;
};

/// Scans [0, a] (compact kernels) or [0, 5a] uniformly with grid_n ≥ 1000
/// points. Values with magnitude below 1e-14 count as zero and do not
/// contribute sign changes.
HoleDiagnostics hole_diagnostics(const RadialFunction& kernel, double a, int grid_n, bool compact = true);
HoleDiagnostics hole_diagnostics(const Kernel& kernel, int grid_n);

}  // namespace nk
