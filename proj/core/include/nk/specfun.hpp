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

// Special functions used by the kernel library: Gamma-family functions,
// Bessel J and K, generalized Laguerre polynomials and a generalized
// hypergeometric series engine.
//
// Gamma, incomplete Gamma, digamma and the Bessel functions delegate to
// Boost.Math. The hypergeometric engine is implemented here because it has
// to run in double-double precision with term-level error bookkeeping.

#include <cstddef>
#include <vector>

namespace nk {

/// Γ(x). Throws PoleError at non-positive integers, OverflowError when the
/// result exceeds the double range.
double gamma(double x);

/// log|Γ(x)| together with the sign of Γ(x).
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
};
SignedLog lgamma_signed(double x);

/// 1/Γ(x); exactly zero at the poles of Γ.
double rgamma(double x);

/// Digamma ψ(x). Throws PoleError at non-positive integers.
double digamma(double x);

/// Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1.
double pochhammer(double x, unsigned n);

/// Γ⁻(s,x) = ∫₀ˣ t^{s-1} e^{-t} dt for s > 0, x ≥ 0.
double incomplete_gamma_lower(double s, double x);
/// Γ⁺(s,x) = Γ(s) − Γ⁻(s,x).
double incomplete_gamma_upper(double s, double x);
/// Regularized upper incomplete Gamma Γ⁺(s,x)/Γ(s).
double regularized_gamma_upper(double s, double x);

/// Bessel function of the first kind J_ν(x), x ≥ 0.
double bessel_j(double nu, double x);
/// Modified Bessel function of the second kind K_ν(x), x > 0. Symmetric
/// in the sign of ν. Throws DomainError at x = 0, where it diverges.
double bessel_k(double nu, double x);

/// Generalized Laguerre polynomial L_n^μ(x), evaluated from the explicit
/// finite sum Σ_j (μ+1+j)_{n-j} (−x)^j / ((n−j)! j!) in extended precision.
double laguerre(unsigned n, double mu, double x);

/// Numerator and denominator coefficients of pFq.
struct PFQParams {
  std::vector<double> numerator;
  std::vector<double> denominator;
};

struct SeriesOptions {
  /// Stop once the (tail-corrected) term is below rel_tol·|partial sum| ...
  double rel_tol = 1e-15;
  /// ... for this many consecutive terms.
  int hysteresis = 3;
  std::size_t max_terms = 100000;
  /// Allow the large-argument expansion for 0F1 and 1F2 at negative argument.
  bool allow_asymptotic = true;
};

enum class SeriesMethod {
  Trivial,           // argument zero
  Series,            // convergent power series
  Terminated,        // polynomial (numerator hit a non-positive integer)
  Asymptotic,        // large negative argument expansion
  Transformation,    // 2F1 mapped from x to 1 − x
  LogTransformation  // 2F1 mapping in the logarithmic (integer c−a−b) case
};

struct SeriesResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::size_t terms = 0;
  SeriesMethod method = SeriesMethod::Series;
};

/// pFq(numerator; denominator; x).
///
/// Convergence domain: all x when p ≤ q; |x| < 1 when p = q + 1 (2F1 on
/// (0.5, 1) is routed through gauss_2f1); anything if the series terminates.
/// Throws PoleError, DomainError (outside the convergence domain) or
/// ConvergenceError (term budget exhausted).
SeriesResult pfq_eval(const PFQParams& params, double x,
                      const SeriesOptions& options = {});
double pfq(const PFQParams& params, double x);

/// Gauss 2F1(a, b; c; x) for x in [0, 1]; x = 1 requires c − a − b > 0.
/// Direct series up to x = 0.5, the x → 1 − x connection formula above,
/// with the digamma limit form when c − a − b is an integer.
SeriesResult gauss_2f1_eval(double a, double b, double c, double x);
double gauss_2f1(double a, double b, double c, double x);

}  // namespace nk
