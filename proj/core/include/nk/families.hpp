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

// Named covariance families. Each is either a parameter map into the
// hypergeometric class or a closed form of its own (Matérn, Gaussian,
// Schoenberg, incomplete gamma and their hole-effect versions).

#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nk/hyperkernel.hpp"

namespace nk {

/// Generalized Wendland family, hole-effect order k.
struct WendlandParams {
  double a = 1.0;
  double xi = 0.0;  // > −1/2; ξ = 0 is the Askey kernel
  double nu = 1.0;
  int d = 1;
  int k = 0;
};

struct MaternParams {
  double a = 1.0;
  double nu = 0.5;
  int d = 1;  // only matters for the hole-effect version
  int k = 0;
};

struct SchoenbergParams {
  double a = 1.0;
  int d = 1;
};

/// k = 0 with `hole == false` is exp(−h²/a²). With `hole == true` the
/// hole-effect form with Laguerre polynomial and exp(−h²/4a²) is used,
/// also for k = 0.
struct GaussianParams {
  double a = 1.0;
  int d = 1;
  int k = 0;
  bool hole = false;
};

struct IncompleteGammaParams {
  double a = 1.0;
  double alpha = 1.0;
  int d = 1;
  int k = 0;
};

/// Smallest admissible ν of the generalized Wendland kernel in dimension d.
double nu_min(double xi, int d);

/// (a, ξ+(d+1)/2+k, ξ+(d+ν+1)/2+k, ξ+(d+ν)/2+k+1, d, k).
HyperParams wendland_to_hyper(const WendlandParams& w);

/// Throws InvalidParameters unless ξ > −1/2 and ν ≥ ν_min(ξ, d+2k).
void check_wendland(const WendlandParams& w);

// ---- closed forms -------------------------------------------------------

/// Gauss hypergeometric (k = 0) kernel through its 2F1 form in 1 − h²/a².
/// Needs A.1–A.3 only.
double gauss_hypergeometric(const HyperParams& theta, double h);

/// Finite-sum form for β = 1 + α + M and γ = 1 + d/2 + k + N with M, N ∈ ℕ.
double truncated_polynomial(const HyperParams& theta, double h);
/// (a, α, 1 + α + M, 1 + d/2 + k + N, d, k).
HyperParams truncated_polynomial_params(double a, double alpha, int d, int k, int M, int N);

/// Generalized Wendland kernel (k = 0) from its own 2F1 expression.
double generalized_wendland(const WendlandParams& w, double h);
/// Hole-effect Wendland kernel through the hypergeometric class (with
/// continuation when ξ + 1/2 is an integer).
double hole_wendland(const WendlandParams& w, double h);

double matern(double a, double nu, double h);

/// Hole-effect Matérn kernel. hole_matern picks the better-conditioned of
/// the quadruple Bessel sum and the two-term 1F2 form; both are exposed.
double hole_matern(double a, double nu, int d, int k, double h);
double hole_matern_bessel_sum(double a, double nu, int d, int k, double h);
double hole_matern_hypergeometric(double a, double nu, int d, int k, double h);

double schoenberg(double a, int d, double h);
double gaussian(double a, double h);
double hole_gaussian(double a, int d, int k, double h);
double incomplete_gamma_kernel(double a, double alpha, int d, int k, double h);

// ---- kernel object ------------------------------------------------------

enum class Family {
  Hypergeometric,
  TruncatedPolynomial,
  Wendland,
  Matern,
  Schoenberg,
  Gaussian,
  IncompleteGamma,
};

std::string to_string(Family f);

/// A radial correlation function: family tag plus parameters. Immutable,
/// cheap to copy and safe to share between threads.
class Kernel {
 public:
  using Params = std::variant<HyperParams, WendlandParams, MaternParams, SchoenbergParams, GaussianParams,
                              IncompleteGammaParams>;

  static Kernel hypergeometric(const HyperParams& theta);
  static Kernel truncated_polynomial(double a, double alpha, int d, int k, int M, int N);
  static Kernel wendland(const WendlandParams& w);
  static Kernel askey(double a, double nu, int d, int k = 0);
  static Kernel matern(double a, double nu, int d = 1, int k = 0);
  static Kernel schoenberg(double a, int d);
  static Kernel gaussian(double a);
  static Kernel hole_gaussian(double a, int d, int k);
  static Kernel incomplete_gamma(double a, double alpha, int d, int k = 0);

  // Classical compactly supported models, all inside the class.
  static Kernel triangular(double a);
  static Kernel circular(double a);
  static Kernel spherical(double a);
  static Kernel pentaspherical(double a);
  static Kernel cubic(double a);
  static Kernel penta(double a);
  static Kernel quadratic(double a);
  static Kernel euclid_hat(double a, int d);
  static Kernel upgraded_euclid_hat(double a, double alpha, int d);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const Params& params() const { return params_; }

  /// Correlation at radial distance h ≥ 0.
  [[nodiscard]] double operator()(double h) const;

  /// Support radius; +∞ for globally supported families.
  [[nodiscard]] double support() const;
  [[nodiscard]] bool compact() const { return support() < std::numeric_limits<double>::infinity(); }
  /// Largest dimension in which the kernel is known to be positive definite;
  /// nullopt for families valid in every dimension.
  [[nodiscard]] std::optional<int> dimension() const;
  /// Hole-effect order (0 when the family has none).
  [[nodiscard]] int hole_order() const;
  /// Equivalent hypergeometric parameters, when the family is a member.
  [[nodiscard]] std::optional<HyperParams> hyper_params() const;

 private:
  static Kernel classical(std::string name, const HyperParams& theta);
  Kernel(Family f, std::string name, Params p) : family_(f), name_(std::move(name)), params_(std::move(p)) {}

  Family family_;
  std::string name_;
  Params params_;
};

}  // namespace nk
