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

#include "nk/spectral.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nk/detail/series.hpp"
#include "nk/errors.hpp"
#include "nk/specfun.hpp"

namespace nk {

namespace {

constexpr double kPi = std::numbers::pi;

// m-th positive zero of J_ν for ν ≥ −1/2.
double bessel_zero(double nu, int m) {
  if (nu == -0.5) return (m - 0.5) * kPi;
  if (nu == 0.5) return m * kPi;
  if (m > 40) {
    const double b = (m + 0.5 * nu - 0.25) * kPi;
    const double mu = 4.0 * nu * nu;
    return b - (mu - 1.0) / (8.0 * b) - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * std::pow(8.0 * b, 3));
  }
  return boost::math::cyl_bessel_j_zero(nu, m);
}

struct Compensated {
  long double sum = 0.0L;
  long double c = 0.0L;
  void add(long double v) {
    const long double y = v - c;
    const long double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

struct Panel {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
Panel integrate_panel(const F& f, double lo, double hi, const RadialTransformConfig& cfg) {
  double err = 0.0;
  // The tolerance is relative to the panel. Kernels with a fractional power
  // at the origin or at the range stall near 1e-12, and asking for more only
  // bisects the whole panel down to max_depth.
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, cfg.max_depth, cfg.tolerance, &err);
  return {v, err};
}

// Wynn's epsilon algorithm on a run of partial sums; returns the highest
// even-column entry.
long double wynn_epsilon(const std::vector<long double>& s) {
  const std::size_t n = s.size();
  if (n < 3) return s.back();
  std::vector<long double> prev(n + 1, 0.0L), cur(s.begin(), s.end());
  long double best = s.back();
  for (std::size_t col = 1; cur.size() >= 2; ++col) {
    std::vector<long double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const long double diff = cur[i + 1] - cur[i];
      if (diff == 0.0L) return col % 2 == 1 ? cur[i + 1] : best;
      next[i] = prev[i + 1] + 1.0L / diff;
    }
    prev.assign(cur.begin(), cur.end());
    cur = std::move(next);
    if (col % 2 == 0 && !cur.empty() && std::isfinite(static_cast<double>(cur.back()))) best = cur.back();
  }
  return best;
}

// ∫₀^R g(t) J_ν(ωt) dt with panels between the zeros of J_ν(ω·).
template <class G>
TransformResult oscillatory_integral(const G& g, double nu, double omega, const RadialTransformConfig& cfg) {
  auto integrand = [&](double t) {
    if (t == 0.0) return nu == -0.5 ? 0.0 : g(t) * boost::math::cyl_bessel_j(nu, 0.0);
    return g(t) * boost::math::cyl_bessel_j(nu, omega * t);
  };
  TransformResult out;
  Compensated acc;
  double err = 0.0;
  double lo = 0.0;
  const double R = cfg.truncation_radius;

  if (std::isfinite(R)) {
    for (int m = 1;; ++m) {
      const double hi = std::min(bessel_zero(nu, m) / omega, R);
      const Panel p = integrate_panel(integrand, lo, hi, cfg);
      acc.add(p.value);
      err += p.error;
      ++out.panels;
      lo = hi;
      if (hi >= R) break;
      if (out.panels > cfg.max_panels) throw ConvergenceError("hankel transform: panel budget exceeded");
    }
    out.value = static_cast<double>(acc.sum);
    out.error_estimate = err;
    return out;
  }

  constexpr std::size_t kWindow = 24;
  std::vector<long double> partial;
  long double estimate = 0.0L;
  int stable = 0;
  for (int m = 1; m <= cfg.max_panels; ++m) {
    const double hi = bessel_zero(nu, m) / omega;
    const Panel p = integrate_panel(integrand, lo, hi, cfg);
    acc.add(p.value);
    err += p.error;
    ++out.panels;
    lo = hi;
    partial.push_back(acc.sum);
    if (partial.size() > kWindow) partial.erase(partial.begin());
    const long double next = wynn_epsilon(partial);
    const double change = std::fabs(static_cast<double>(next - estimate));
    estimate = next;
    const double scale = std::max(1.0, std::fabs(static_cast<double>(estimate)));
    if (m >= 4 && change <= cfg.tolerance * scale) {
      if (++stable >= 3) {
        out.value = static_cast<double>(estimate);
        out.error_estimate = err + change;
        return out;
      }
    } else {
      stable = 0;
    }
  }
  throw ConvergenceError("hankel transform: panel budget exceeded before the tail converged");
}

void check_transform_args(int d, double x, const char* what) {
  if (d < 1) throw InvalidParameters("hankel transform: d must be >= 1");
  if (!std::isfinite(x) || !(x > 0.0)) throw DomainError(std::string(what) + " must be finite and > 0");
}

}  // namespace

// f_d(0) = (2π)^{−d/2} 2^{1−d/2}/Γ(d/2) ∫₀^∞ h^{d−1} C(h) dh, the u → 0
// limit of the transform; the integrand no longer oscillates.
TransformResult hankel_forward_at_zero(const RadialFunction& c, int d, const RadialTransformConfig& cfg) {
  const double hd = 0.5 * d;
  auto g = [&](double t) { return std::pow(t, d - 1.0) * c(t); };
  TransformResult r;
  double err = 0.0;
  if (std::isfinite(cfg.truncation_radius)) {
    r.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, cfg.truncation_radius,
                                                                              cfg.max_depth, cfg.tolerance, &err);
  } else {
    boost::math::quadrature::exp_sinh<double> q;
    r.value = q.integrate(g, 0.0, std::numeric_limits<double>::infinity(), cfg.tolerance, &err);
  }
  r.panels = 1;
  const double scale = static_cast<double>(
      std::exp(-hd * std::log(2.0L * kPi) + (1.0L - hd) * std::log(2.0L) - detail::lgamma_ld(hd, nullptr)));
  r.value *= scale;
  r.error_estimate = err * scale;
  return r;
}

TransformResult hankel_forward(const RadialFunction& c, int d, double u, const RadialTransformConfig& cfg) {
  if (d >= 1 && u == 0.0) return hankel_forward_at_zero(c, d, cfg);
  check_transform_args(d, u, "frequency u");
  const double hd = 0.5 * d;
  auto g = [&](double t) { return std::pow(t, hd) * c(t); };
  TransformResult r = oscillatory_integral(g, hd - 1.0, u, cfg);
  const double scale = std::pow(2.0 * kPi, -hd) * std::pow(u, 1.0 - hd);
  r.value *= scale;
  r.error_estimate *= std::fabs(scale);
  return r;
}

TransformResult hankel_forward(const Kernel& kernel, int d, double u, RadialTransformConfig cfg) {
  cfg.truncation_radius = std::min(cfg.truncation_radius, kernel.support());
  return hankel_forward([&kernel](double h) { return kernel(h); }, d, u, cfg);
}

TransformResult hankel_inverse(const RadialFunction& f, int d, double h, const RadialTransformConfig& cfg,
                               double tail_exponent) {
  check_transform_args(d, h, "distance h");
  const double hd = 0.5 * d;
  auto g = [&](double t) { return std::pow(t, hd) * f(t); };
  TransformResult r = oscillatory_integral(g, hd - 1.0, h, cfg);
  const double scale = std::pow(2.0 * kPi, hd) * std::pow(h, 1.0 - hd);
  r.value *= scale;
  r.error_estimate *= std::fabs(scale);
  if (std::isfinite(tail_exponent) && tail_exponent <= d)
    r.warnings.emplace_back("slow-decay: density tail exponent does not exceed d, integrability is marginal");
  return r;
}

double schoenberg_density(const RadialFunction& f, int d, double u) {
  if (d < 1) throw InvalidParameters("schoenberg_density: d must be >= 1");
  if (!std::isfinite(u) || !(u > 0.0)) throw DomainError("schoenberg_density: u must be > 0");
  const double hd = 0.5 * d;
  const long double lc = std::log(2.0L) + hd * std::log(static_cast<long double>(kPi)) - detail::lgamma_ld(hd, nullptr);
  return static_cast<double>(std::exp(lc)) * std::pow(u, d - 1.0) * f(u);
}

double finite_difference_derivative(const RadialFunction& f, double h, int m, double* noise) {
  if (m < 0) throw DomainError("derivative order must be >= 0");
  if (m == 0) {
    if (noise != nullptr) *noise = 0.0;
    return f(h);
  }
  // Step chosen so that truncation and rounding errors balance for order m,
  // and so that the stencil stays inside (0, ∞).
  double step = h * std::pow(1e-4, 1.0 / m);
  step = std::min(step, h / (m + 1.0));
  auto central = [&](double s) {
    long double acc = 0.0L;
    long double binom = 1.0L;
    for (int j = 0; j <= m; ++j) {
      acc += ((j % 2 == 0) ? 1.0L : -1.0L) * binom * f(h + (0.5 * m - j) * s);
      binom = binom * (m - j) / (j + 1);
    }
    return static_cast<double>(acc / std::pow(static_cast<long double>(s), m));
  };
  const double d0 = central(step), d1 = central(0.5 * step), d2 = central(0.25 * step);
  const double r1 = (4.0 * d1 - d0) / 3.0;
  const double r2 = (4.0 * d2 - d1) / 3.0;
  const double rr = (16.0 * r2 - r1) / 15.0;
  if (noise != nullptr) *noise = std::fabs(rr - r2);
  return rr;
}

TurningBandsResult turning_bands(const RadialFunction& source, int d, int k, double h,
                                 const RadialDerivative& derivative) {
  if (d < 1) throw InvalidParameters("turning_bands: d must be >= 1");
  if (k < 0) throw InvalidParameters("turning_bands: k must be >= 0");
  if (!std::isfinite(h) || h < 0.0) throw DomainError("turning_bands: h must be finite and >= 0");
  TurningBandsResult out;
  if (h == 0.0 || k == 0) {
    out.value = source(h);
    return out;
  }
  const double hd = 0.5 * d;
  std::vector<double> deriv(k + 1, 0.0);
  for (int m = 0; m <= k; ++m) {
    if (derivative) {
      deriv[m] = derivative(h, m);
    } else {
      double noise = 0.0;
      deriv[m] = finite_difference_derivative(source, h, m, &noise);
      out.derivative_noise = std::max(out.derivative_noise, noise);
    }
  }
  long double acc = 0.0L;
  for (int q = 0; q <= k; ++q) {
    long double common = pochhammer(k - q + 1.0, q) / (std::tgamma(q + 1.0L) * pochhammer(hd, q));
    for (int r = 0; r <= std::max(0, q - 1); ++r) {
      const int m = q - r;
      const long double c = ((r % 2 == 0) ? 1.0L : -1.0L) * common * pochhammer(q, r) * pochhammer(m, r) /
                            (std::ldexp(1.0L, q + r) * std::tgamma(r + 1.0L));
      acc += c * std::pow(static_cast<long double>(h), m) * deriv[m];
    }
  }
  out.value = static_cast<double>(acc);
  if (out.derivative_noise > 1e-6)
    out.warnings.emplace_back("derivative-instability: finite-difference noise exceeds 1e-6");
  return out;
}

}  // namespace nk
