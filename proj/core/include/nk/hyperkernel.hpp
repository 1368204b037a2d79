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

// The generalized hypergeometric kernel ℋ_θ with θ = (a, α, β, γ, d, k):
// parameter validation, evaluation, continuation at integer α − d/2 − k,
// radial derivatives and the d-radial spectral density.

#include <optional>
#include <string>
#include <vector>

namespace nk {

struct HyperParams {
  double a = 1.0;      // support radius (range)
  double alpha = 1.0;  // drives smoothness at the origin
  double beta = 1.0;
  double gamma = 1.0;
  int d = 1;           // dimension of the Euclidean space
  int k = 0;           // hole-effect order
};

struct ValidityReport {
  bool a1 = false;  // α > d/2 + k
  bool a2 = false;  // 2(β−α)(γ−α) ≥ α
  bool a3 = false;  // 2(β+γ) ≥ 6α + 1
  bool a4 = false;  // α − d/2 − k not a positive integer (tolerance 1e-9)
  bool strict_a3 = false;
  /// β > α and γ > α; implied by A.2 together with A.3.
  bool beta_gamma_exceed_alpha = false;
  /// α − d/2 − k within 1e-9 of a positive integer while A.1–A.3 hold.
  bool continuation_required = false;
  /// α − d/2 − k within 1e-5 (but not 1e-9) of a positive integer.
  bool near_integer_warning = false;
  /// α − k, reported only when A.1–A.4 all pass and A.3 is strict.
  std::optional<double> sobolev_exponent;

  /// A.1–A.4 all pass.
  [[nodiscard]] bool all_pass() const { return a1 && a2 && a3 && a4; }
  /// The kernel is defined, possibly through continuation.
  [[nodiscard]] bool evaluable() const { return a1 && a2 && a3; }
};

/// Checks A.1–A.4. Throws InvalidParameters only for type-level violations
/// (a, α, β, γ not positive, d < 1, k < 0, non-finite values).
ValidityReport validate(const HyperParams& theta);

struct NormalizingConstants {
  double varpi = 0.0;      // constant of the x^{2α−d−2k} branch
  double varpi_hat = 0.0;  // constant of the spectral density
};

/// Requires A.1–A.4. Gamma products are formed in log space with sign
/// tracking. Throws InvalidParameters or PoleError.
NormalizingConstants normalizing_constants(const HyperParams& theta);

enum class Representation {
  Outside,       // h ≥ a, identically zero
  Origin,        // h = 0, identically one
  PowerSeries,   // two 3F2 branches in h²/a²
  NearRange,     // 2F1 expansion in 1 − h²/a²
  GaussSum,      // finite sum of 2F1 in h²/a²
};

struct Evaluation {
  double value = 0.0;
  double error_estimate = 0.0;
  Representation representation = Representation::Origin;
  std::vector<std::string> warnings;
};

struct EvalOptions {
  /// Also evaluate a second representation and warn when the two differ by
  /// more than 1e-6.
  bool cross_check = false;
};

/// ℋ_θ(h). Requires A.1–A.3; integer α − d/2 − k is routed to the
/// continuation automatically. Throws InvalidParameters or DomainError
/// (h < 0 or non-finite).
double evaluate(const HyperParams& theta, double h);
Evaluation evaluate_detailed(const HyperParams& theta, double h, const EvalOptions& options = {});

/// Continuous extension for α − d/2 − k ∈ ℕ≥1 (within 1e-9). Throws
/// InvalidParameters if A.1–A.3 fail or α − d/2 − k is not near an integer.
double evaluate_continuation(const HyperParams& theta, double h);

/// Forced representations, exposed for cross-validation. All require h in
/// (0, a). The power series needs A.4; the near-range form does not.
double evaluate_power_series(const HyperParams& theta, double h);
double evaluate_near_range(const HyperParams& theta, double h);
double evaluate_gauss_sum(const HyperParams& theta, double h);

/// d^m/dh^m ℋ_θ(h) for 0 < h < a, by term-wise differentiation of the
/// power series (or, close to the range for k = 0, of the 2F1 form).
double evaluate_derivative(const HyperParams& theta, double h, int order);

/// d-radial spectral density at u ≥ 0. Requires A.1–A.4.
double spectral_density(const HyperParams& theta, double u);

/// Exponent 2α − d − 2k of the non-analytic branch at the origin.
double origin_exponent(const HyperParams& theta);
/// Exponent β + γ − α − 2k − d/2 − 1 of (1 − h/a) near the range.
double range_exponent(const HyperParams& theta);

}  // namespace nk
