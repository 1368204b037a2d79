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

#include "nk/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "nk/errors.hpp"

namespace nk {

namespace {

bool is_natural(double v) {
  const double r = std::round(v);
  return r >= 0.0 && std::fabs(v - r) <= 1e-12;
}

// Coefficient of x² in the analytic branch, times 2/a²: the second
// derivative at the origin when the non-analytic branch does not reach it.
double analytic_second_derivative(const HyperParams& t) {
  const double s = 0.5 * t.d + t.k;
  return 4.0 * s * (1.0 + s - t.beta) * (1.0 + s - t.gamma) / ((1.0 + s - t.alpha) * t.d * t.a * t.a);
}

}  // namespace

std::string to_string(FirstDerivativeKind k) {
  switch (k) {
    case FirstDerivativeKind::Zero: return "zero";
    case FirstDerivativeKind::FiniteNegative: return "finite-negative";
    case FirstDerivativeKind::NegativeInfinity: return "-inf";
  }
  return "?";
}

std::string to_string(SecondDerivativeKind k) {
  switch (k) {
    case SecondDerivativeKind::Finite: return "finite";
    case SecondDerivativeKind::PositiveInfinity: return "+inf";
    case SecondDerivativeKind::NegativeInfinity: return "-inf";
  }
  return "?";
}

SmoothnessReport smoothness_report(const HyperParams& t) {
  const ValidityReport v = validate(t);
  if (!v.all_pass()) throw InvalidParameters("smoothness_report: A.1-A.4 must hold");
  SmoothnessReport r;
  r.sobolev_exponent = v.sobolev_exponent;
  r.msd_order = static_cast<int>(std::floor(t.alpha - 0.5 * t.d - t.k + 1e-12));
  r.theta_exponent = 2.0 * (t.alpha - t.k) - 1.0;
  if (r.theta_exponent > 0.0 && r.theta_exponent <= 2.0) r.fractal_dimension = t.d + 1.0 - 0.5 * r.theta_exponent;

  // The non-analytic branch ϖ x^e with e = 2α − d − 2k decides the first
  // two one-sided derivatives at the origin.
  const double e = origin_exponent(t);
  const double varpi = normalizing_constants(t).varpi;
  if (std::fabs(e - 1.0) <= 1e-12) {
    r.origin_first_kind = FirstDerivativeKind::FiniteNegative;
    r.origin_first_derivative = varpi / t.a;
  } else if (e > 1.0) {
    r.origin_first_kind = FirstDerivativeKind::Zero;
  } else {
    r.origin_first_kind = FirstDerivativeKind::NegativeInfinity;
    r.origin_first_derivative = -std::numeric_limits<double>::infinity();
  }

  // e = 1 contributes only odd powers, so the analytic branch gives the
  // second derivative; e = 2 cannot occur under A.4.
  if (e > 2.0 || std::fabs(e - 1.0) <= 1e-12) {
    r.origin_second_kind = SecondDerivativeKind::Finite;
    r.origin_second_derivative = analytic_second_derivative(t);
  } else {
    const double lead = varpi * e * (e - 1.0);
    r.origin_second_kind = lead > 0.0 ? SecondDerivativeKind::PositiveInfinity : SecondDerivativeKind::NegativeInfinity;
    r.origin_second_derivative = lead > 0.0 ? std::numeric_limits<double>::infinity()
                                            : -std::numeric_limits<double>::infinity();
  }

  r.range_exponent = range_exponent(t);
  r.range_diff_order = static_cast<int>(std::ceil(r.range_exponent - 1e-12)) - 1;
  r.range_caveat_beta_gamma_integer = is_natural(t.beta + t.gamma);
  r.range_caveat_shifted_integer = is_natural(t.beta + t.gamma - t.alpha - 0.5 * t.d);
  return r;
}

TailFit tail_fit(const HyperParams& t, double u_lo, double u_hi, int n) {
  if (n < 2) throw DomainError("tail_fit: need at least two samples");
  if (!(u_hi > u_lo)) throw DomainError("tail_fit: empty frequency window");
  if (t.a * u_lo < 50.0) throw DomainError("tail_fit: a*u_lo must be >= 50 (asymptotic regime)");
  TailFit f;
  f.u_lo = u_lo;
  f.u_hi = u_hi;
  // The density carries a cos(a·u + φ) term whose amplitude can match the
  // power law (spherical: the density touches zero). Raw log samples alias
  // against it, so each sample is the density averaged over one period.
  const double half = std::numbers::pi / t.a;
  std::vector<double> xs(n), ys(n), raw(n);
  const double l0 = std::log(u_lo), l1 = std::log(u_hi);
  for (int i = 0; i < n; ++i) {
    const double lu = l0 + (l1 - l0) * i / (n - 1);
    const double u = std::exp(lu);
    const double mean = boost::math::quadrature::gauss<double, 30>::integrate(
                            [&](double v) { return spectral_density(t, v); }, u - half, u + half) /
                        (2.0 * half);
    if (!(mean > 0.0)) throw DomainError("tail_fit: spectral density not positive in the fit window");
    xs[i] = lu;
    ys[i] = std::log(mean);
    raw[i] = spectral_density(t, u);
  }
  double mx = 0, my = 0;
  for (int i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  f.exponent_estimate = sxy / sxx;
  const double intercept = my - f.exponent_estimate * mx;
  f.constant_estimate = std::exp(intercept);
  // The residual is measured on the raw samples so that it still reports
  // how strongly the oscillation shows in the window.
  double ss = 0;
  int used = 0;
  for (int i = 0; i < n; ++i) {
    if (!(raw[i] > 0.0)) continue;
    const double res = std::log(raw[i]) - (intercept + f.exponent_estimate * xs[i]);
    ss += res * res;
    ++used;
  }
  f.residual = used > 0 ? std::sqrt(ss / used) : std::numeric_limits<double>::infinity();
  if (f.residual > 0.05)
    f.warnings.emplace_back("oscillation-dominated: the oscillating part of the density is not yet negligible");
  return f;
}

HoleDiagnostics hole_diagnostics(const RadialFunction& kernel, double a, int grid_n, bool compact) {
  if (grid_n < 1000) throw DomainError("hole_diagnostics: grid_n must be >= 1000");
  if (!(a > 0.0)) throw InvalidParameters("hole_diagnostics: a must be > 0");
  HoleDiagnostics out;
  out.scan_end = compact ? a : 5.0 * a;
  out.min_value = std::numeric_limits<double>::infinity();
  int last_sign = 0;
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_n; ++i) {
    const double h = out.scan_end * i / (grid_n - 1);
    const double v = kernel(h);
    if (v < out.min_value) {
      out.min_value = v;
      out.argmin = h;
    }
    if (v > prev + 1e-12) out.nonincreasing = false;
    prev = v;
    const int sign = std::fabs(v) < 1e-14 ? 0 : (v > 0 ? 1 : -1);
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) ++out.sign_changes;
      last_sign = sign;
    }
  }
  return out;
}

HoleDiagnostics hole_diagnostics(const Kernel& kernel, int grid_n) {
  const bool compact = kernel.compact();
  double a = kernel.support();
  if (!compact) {
    a = std::visit([](const auto& p) { return p.a; }, kernel.params());
  }
  return hole_diagnostics([&kernel](double h) { return kernel(h); }, a, grid_n, compact);
}

}  // namespace nk
