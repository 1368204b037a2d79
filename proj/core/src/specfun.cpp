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

#include "nk/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nk/detail/dd.hpp"
#include "nk/errors.hpp"

namespace nk {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

[[noreturn]] void pole(const char* fn, double x) {
  throw PoleError(std::string(fn) + ": pole at " + std::to_string(x));
}

}  // namespace

double gamma(double x) {
  if (is_nonpositive_integer(x)) pole("gamma", x);
  if (x > 171.62) throw OverflowError("gamma: result overflows at x=" + std::to_string(x));
  try {
    return boost::math::tgamma(x);
  } catch (const std::overflow_error&) {
    throw OverflowError("gamma: result overflows at x=" + std::to_string(x));
  }
}

SignedLog lgamma_signed(double x) {
  if (is_nonpositive_integer(x)) pole("lgamma", x);
  int sign = 1;
  const double v = boost::math::lgamma(x, &sign);
  return {v, sign};
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.62) {
    const SignedLog lg = lgamma_signed(x);
    return std::exp(-lg.log_abs);
  }
  return 1.0 / boost::math::tgamma(x);
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) pole("digamma", x);
  return boost::math::digamma(x);
}

double pochhammer(double x, unsigned n) {
  double p = 1.0;
  for (unsigned i = 0; i < n; ++i) p *= x + static_cast<double>(i);
  return p;
}

double incomplete_gamma_lower(double s, double x) {
  if (!(s > 0.0)) throw DomainError("incomplete_gamma_lower: requires s > 0");
  if (!(x >= 0.0)) throw DomainError("incomplete_gamma_lower: requires x >= 0");
  if (x == 0.0) return 0.0;
  return boost::math::tgamma_lower(s, x);
}

double incomplete_gamma_upper(double s, double x) {
  if (!(s > 0.0)) throw DomainError("incomplete_gamma_upper: requires s > 0");
  if (!(x >= 0.0)) throw DomainError("incomplete_gamma_upper: requires x >= 0");
  return boost::math::tgamma(s, x);
}

double regularized_gamma_upper(double s, double x) {
  if (!(s > 0.0)) throw DomainError("regularized_gamma_upper: requires s > 0");
  if (!(x >= 0.0)) throw DomainError("regularized_gamma_upper: requires x >= 0");
  return boost::math::gamma_q(s, x);
}

double bessel_j(double nu, double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_j: requires x >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : (nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  return boost::math::cyl_bessel_j(nu, x);
}

double bessel_k(double nu, double x) {
  if (x == 0.0) throw DomainError("bessel_k: K_nu diverges at x = 0");
  if (!(x > 0.0)) throw DomainError("bessel_k: requires x > 0");
  return boost::math::cyl_bessel_k(std::fabs(nu), x);
}

double laguerre(unsigned n, double mu, double x) {
  using detail::DD;
  // term_j = (mu+1+j)_{n-j} (-x)^j / ((n-j)! j!), with
  // term_{j+1}/term_j = -x (n-j) / ((j+1)(mu+1+j)).
  DD term(1.0);
  for (unsigned i = 1; i <= n; ++i) {
    term *= detail::two_sum(mu, static_cast<double>(i));
    term /= DD(static_cast<double>(i));
  }
  DD pos, neg;
  for (unsigned j = 0;; ++j) {
    if (term.hi >= 0.0) pos += term; else neg -= term;
    if (j == n) break;
    const DD num = DD(-x) * DD(static_cast<double>(n - j));
    const DD den = DD(static_cast<double>(j + 1)) * detail::two_sum(mu + 1.0, static_cast<double>(j));
    if (detail::is_zero(den)) break;  // only reachable for mu a negative integer
    term = term * num / den;
  }
  return (pos - neg).to_double();
}

}  // namespace nk
