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

// Extended-precision entry points of the hypergeometric engine. The kernel
// evaluators use these directly: their two-branch sums cancel, so both the
// coefficients and the argument have to be carried in double-double.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nk/detail/dd.hpp"
#include "nk/specfun.hpp"

namespace nk::detail {

struct SeriesStats {
  std::size_t terms = 0;
  bool terminated = false;
  double max_term = 0.0;         // largest |term| seen (double estimate)
  double abs_error = 0.0;        // truncation plus rounding estimate
};

/// Σ_n term0 · Π(a_i)_n / Π(b_j)_n · x^n / n! in double-double, with positive
/// and negative terms accumulated separately. Throws PoleError and
/// ConvergenceError like nk::pfq_eval.
DD pfq_series(std::span<const DD> numerator, std::span<const DD> denominator,
              DD x, const SeriesOptions& options, SeriesStats* stats,
              DD term0 = DD(1.0));

/// Large-argument expansion of 0F1(;b;−X) or 1F2(a;b1,b2;−X) written in
/// terms of w = 2√X. Returns false when the expansion cannot reach the
/// requested relative accuracy; otherwise fills value and abs_error.
bool pfq_asymptotic(std::span<const double> numerator,
                    std::span<const double> denominator, double w,
                    double rel_tol, double* value, double* abs_error);

/// ΠΓ(num)/ΠΓ(den) in log space, carried in long double. A pole in the
/// denominator makes the product exactly zero; a pole in the numerator
/// throws PoleError.
struct GammaProduct {
  long double log_abs = 0.0L;
  int sign = 1;
  bool zero = false;

  [[nodiscard]] long double value() const;
};
/// log|Γ(x)| in long double; *sign receives the sign of Γ(x).
long double lgamma_ld(double x, int* sign);

GammaProduct gamma_product(std::initializer_list<double> num,
                           std::initializer_list<double> den);

/// Summands of a Gamma argument, kept apart so the argument can be formed
/// exactly in extended precision.
using ArgParts = std::vector<double>;

/// ΠΓ(num)/ΠΓ(den) · x^exponent to full double-double accuracy, computed
/// with MPFR. The log-Gamma sum is cached per thread for the last argument
/// set, so repeated calls along a grid cost one log and one exp. Used when
/// the prefactor multiplies a branch that cancels against another.
DD precise_gamma_power(const std::vector<ArgParts>& num, const std::vector<ArgParts>& den,
                       const ArgParts& exponent, DD x);

}  // namespace nk::detail
