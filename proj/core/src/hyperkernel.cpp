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

#include "nk/hyperkernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nk/detail/dd.hpp"
#include "nk/detail/series.hpp"
#include "nk/errors.hpp"
#include "nk/specfun.hpp"

namespace nk {

namespace {

using detail::DD;

constexpr double kIntegerTol = 1e-9;
constexpr double kWarnTol = 1e-5;
// The near-range 2F1 series is summed directly up to this argument.
constexpr double kNearRangeDirectMax = 0.75;
constexpr double kSwitchRatio = 0.5;

void check_types(const HyperParams& t) {
  auto bad = [](double v) { return !std::isfinite(v) || !(v > 0.0); };
  if (bad(t.a)) throw InvalidParameters("a must be finite and > 0");
  if (bad(t.alpha)) throw InvalidParameters("alpha must be finite and > 0");
  if (bad(t.beta)) throw InvalidParameters("beta must be finite and > 0");
  if (bad(t.gamma)) throw InvalidParameters("gamma must be finite and > 0");
  if (t.d < 1) throw InvalidParameters("d must be >= 1");
  if (t.k < 0) throw InvalidParameters("k must be >= 0");
}

double half_d(const HyperParams& t) { return 0.5 * t.d; }

std::string describe(const HyperParams& t, const ValidityReport& r) {
  std::ostringstream os;
  os << "invalid parameters (a=" << t.a << ", alpha=" << t.alpha << ", beta=" << t.beta
     << ", gamma=" << t.gamma << ", d=" << t.d << ", k=" << t.k << "):";
  if (!r.a1) os << " A.1 fails (alpha <= d/2 + k);";
  if (!r.a2) os << " A.2 fails (2(beta-alpha)(gamma-alpha) < alpha);";
  if (!r.a3) os << " A.3 fails (2(beta+gamma) < 6 alpha + 1);";
  if (!r.a4) os << " A.4 fails (alpha - d/2 - k is a positive integer);";
  return os.str();
}

ValidityReport require_evaluable(const HyperParams& t) {
  ValidityReport r = validate(t);
  if (!r.evaluable()) throw InvalidParameters(describe(t, r));
  return r;
}

ValidityReport require_all(const HyperParams& t) {
  ValidityReport r = validate(t);
  if (!r.all_pass()) throw InvalidParameters(describe(t, r));
  return r;
}

DD dd_sum(std::initializer_list<double> xs) {
  DD s;
  for (double v : xs) s += DD(v);
  return s;
}

long double log_dd(DD x) { return std::log(static_cast<long double>(x.hi) + static_cast<long double>(x.lo)); }

SeriesOptions dd_options() {
  SeriesOptions o;
  o.rel_tol = 1e-31;
  o.hysteresis = 3;
  return o;
}

struct Partial {
  DD value;
  double error = 0.0;
};

// The two 3F2 branches in z = x².
struct PowerSeriesSetup {
  std::array<DD, 3> n1, n2;
  std::array<DD, 2> d1, d2;
  detail::GammaProduct varpi;
  double exponent = 0.0;
  // The same constant as exact argument summands, for the MPFR fallback.
  std::vector<detail::ArgParts> varpi_num, varpi_den;
  detail::ArgParts exponent_parts;
};

PowerSeriesSetup power_series_setup(const HyperParams& t) {
  const double hd = half_d(t), k = t.k, al = t.alpha, be = t.beta, ga = t.gamma;
  PowerSeriesSetup s;
  s.n1 = {DD(al), dd_sum({1.0, al, -be}), dd_sum({1.0, al, -ga})};
  s.d1 = {dd_sum({1.0, al, -hd, -k}), dd_sum({al, -k})};
  s.n2 = {dd_sum({hd, k}), dd_sum({1.0, hd, k, -be}), dd_sum({1.0, hd, k, -ga})};
  s.d2 = {dd_sum({1.0, hd, k, -al}), DD(hd)};
  s.varpi = detail::gamma_product({al, be - hd - k, ga - hd - k, hd, hd + k - al},
                                  {hd + k, al - hd - k, be - al, ga - al, al - k});
  s.exponent = 2.0 * al - t.d - 2.0 * k;
  s.varpi_num = {{al}, {be, -hd, -k}, {ga, -hd, -k}, {hd}, {hd, k, -al}};
  s.varpi_den = {{hd, k}, {al, -hd, -k}, {be, -al}, {ga, -al}, {al, -k}};
  s.exponent_parts = {al, al, -static_cast<double>(t.d), -2.0 * k};
  return s;
}

DD branch_prefactor(const PowerSeriesSetup& s, DD x, double* rel_err) {
  const long double lx = log_dd(x);
  const long double lg = s.varpi.log_abs + static_cast<long double>(s.exponent) * lx;
  *rel_err = 2e-19 * (1.0 + std::fabs(static_cast<double>(s.varpi.log_abs)) +
                      std::fabs(static_cast<double>(static_cast<long double>(s.exponent) * lx)));
  return detail::from_long_double(static_cast<long double>(s.varpi.sign) * std::exp(lg));
}

// The long double prefactor limits the result to about 1e-19 times the
// branch magnitude. When the branches are large and cancel, the prefactor
// is recomputed in MPFR so that only the double-double series error remains.
constexpr double kPrefactorErrorMax = 1e-16;

Partial power_series(const HyperParams& t, DD x) {
  const PowerSeriesSetup s = power_series_setup(t);
  const DD z = x * x;
  double pref_rel = 0.0;
  DD t0 = branch_prefactor(s, x, &pref_rel);
  detail::SeriesStats s1, s2;
  const SeriesOptions opt = dd_options();
  DD b1 = detail::pfq_series(s.n1, s.d1, z, opt, &s1, t0);
  const DD b2 = detail::pfq_series(s.n2, s.d2, z, opt, &s2);
  if (pref_rel * std::fabs(b1.hi) > kPrefactorErrorMax) {
    t0 = detail::precise_gamma_power(s.varpi_num, s.varpi_den, s.exponent_parts, x);
    b1 = detail::pfq_series(s.n1, s.d1, z, opt, &s1, t0);
    pref_rel = 1e-31;
  }
  Partial p;
  p.value = b1 + b2;
  p.error = s1.abs_error + s2.abs_error + pref_rel * std::fabs(b1.hi);
  return p;
}

// Σ_n t_n · (p + 2n)(p + 2n − 1)…(p + 2n − m + 1), the m-th x-derivative of
// x^p·Σ t_n x^{2n} multiplied by x^m.
DD weighted_series(std::span<const DD> num, std::span<const DD> den, DD z, DD term0, double p, int m,
                   double* err) {
  DD term = term0, pos, neg;
  double max_w = 0.0;
  int small = 0;
  std::size_t n = 0;
  for (;; ++n) {
    if (n > 200000) throw ConvergenceError("derivative series did not converge");
    DD w = term;
    for (int j = 0; j < m; ++j) w *= dd_sum({p, 2.0 * static_cast<double>(n), -static_cast<double>(j)});
    if (w.hi >= 0.0) pos += w; else neg -= w;
    max_w = std::max(max_w, std::fabs(w.hi));
    const DD nn(static_cast<double>(n));
    DD numf = z;
    bool term_stop = false;
    for (const DD& a : num) {
      const DD an = a + nn;
      if (detail::is_zero(an)) term_stop = true;
      numf *= an;
    }
    if (term_stop) break;
    DD denf(static_cast<double>(n + 1));
    for (const DD& b : den) denf *= b + nn;
    term *= numf / denf;
    const double next = std::fabs(term.hi) * std::pow(std::fabs(p) + 2.0 * (n + 1) + m, m);
    const double sum = std::fabs((pos - neg).hi);
    if (next <= 1e-31 * sum || next <= 1e-35 * max_w || detail::is_zero(term)) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  *err = static_cast<double>(n + 8) * 5e-32 * (pos + neg).hi;
  return pos - neg;
}

// Exact-rational coefficients of the near-range form, see near_range().
std::vector<double> near_range_coefficients(int k, double hd) {
  std::vector<double> K(static_cast<std::size_t>(k) + 1, 0.0);
  auto fact = [](int n) { return std::tgamma(n + 1.0); };
  for (int q = 0; q <= k; ++q) {
    for (int r = 0; r <= std::max(0, q - 1); ++r) {
      const int m = q - r;
      const double c25 = ((r % 2) ? -1.0 : 1.0) * pochhammer(k - q + 1.0, q) * pochhammer(q, r) *
                         pochhammer(q - r, r) /
                         (std::ldexp(1.0, q + r) * fact(q) * fact(r) * pochhammer(hd, q));
      for (int s = 0; 2 * s <= m; ++s) {
        const int n = m - s;
        K[n] += c25 * fact(m) / (fact(s) * std::ldexp(1.0, s) * fact(m - 2 * s));
      }
    }
  }
  return K;
}

// Near-range representation, obtained by applying the order-2k turning
// bands operator to the k = 0 kernel of dimension d + 2k written as
//   c/Γ(C0) z^{C0−1} 2F1(β−α, γ−α; C0; z),  z = 1 − x²,
// with C0 = β − α + γ − d/2 − k and c = Γ(β−d/2−k)Γ(γ−d/2−k)/Γ(α−d/2−k).
// Collecting the Faà di Bruno expansion of the derivatives in z gives
//   ℋ = Σ_{n=0}^{k} K_n (−2)^n x^{2n} c/Γ(C0−n) z^{C0−n−1} 2F1(β−α, γ−α; C0−n; z).
// It needs no condition on α − d/2 − k and its series argument is small
// close to the range.
Partial near_range(const HyperParams& t, DD x) {
  // Close to the origin 1 − x² rounds to 1 and the branches in 1 − x² stop
  // resolving the departure from 1. That departure is x²(p log x + q) up to
  // O(x⁴ log x), so p and q are fitted at two abscissae that are still
  // well resolved.
  constexpr double kTinyX = 1e-6;
  if (x.hi < kTinyX) {
    constexpr double x0 = 1e-5, x1 = 1e-6;
    const double r0 = (near_range(t, DD(x0)).value - DD(1.0)).to_double() / (x0 * x0);
    const double r1 = (near_range(t, DD(x1)).value - DD(1.0)).to_double() / (x1 * x1);
    const double p = (r0 - r1) / (std::log(x0) - std::log(x1));
    const double q = r1 - p * std::log(x1);
    const double xd = x.to_double();
    const double dev = xd * xd * (p * std::log(xd) + q);
    return {DD(1.0) + DD(dev), std::fabs(dev) * 1e-6 + 1e-20};
  }
  const double hd = half_d(t), k = t.k;
  const DD z = (DD(1.0) - x) * (DD(1.0) + x);
  const DD A = dd_sum({t.beta, -t.alpha});
  const DD B = dd_sum({t.gamma, -t.alpha});
  const DD C0 = dd_sum({t.beta, -t.alpha, t.gamma, -hd, -k});
  const detail::GammaProduct c = detail::gamma_product({t.beta - hd - k, t.gamma - hd - k}, {t.alpha - hd - k});
  const std::vector<double> K = near_range_coefficients(t.k, hd);
  const long double lz = log_dd(z);
  const DD x2 = x * x;
  DD total, x2n(1.0);
  double err = 0.0;
  for (int n = 0; n <= t.k; ++n) {
    const DD Cn = C0 - DD(static_cast<double>(n));
    const double cn = Cn.to_double();
    int sg = 1;
    const long double lgC = detail::lgamma_ld(cn, &sg);
    DD T;
    double terr = 0.0;
    const long double logpre = c.log_abs - lgC + (static_cast<long double>(cn) - 1.0L) * lz;
    const long double pre = static_cast<long double>(c.sign * sg) * std::exp(logpre);
    if (z.hi <= kNearRangeDirectMax) {
      detail::SeriesStats st;
      const std::array<DD, 2> num{A, B};
      const std::array<DD, 1> den{Cn};
      T = detail::pfq_series(num, den, z, dd_options(), &st, detail::from_long_double(pre));
      terr = st.abs_error + 2e-19 * (1.0 + std::fabs(static_cast<double>(logpre))) * std::fabs(T.hi);
    } else {
      const SeriesResult F = gauss_2f1_eval(A.to_double(), B.to_double(), cn, z.to_double());
      T = detail::from_long_double(pre * static_cast<long double>(F.value));
      terr = std::fabs(static_cast<double>(pre)) * F.error_estimate + 1e-18 * std::fabs(T.hi);
    }
    const double coef = K[n] * std::ldexp((n % 2) ? -1.0 : 1.0, n);
    const DD contrib = DD(coef) * x2n * T;
    total += contrib;
    err += std::fabs(coef) * x2n.hi * terr;
    x2n *= x2;
  }
  return {total, err};
}

// d^m/dx^m of the k = 0 kernel in its 2F1 form, for x close to 1.
DD near_range_derivative_k0(const HyperParams& t, DD x, int m, double* err) {
  const double hd = half_d(t);
  const DD z = (DD(1.0) - x) * (DD(1.0) + x);
  const DD A = dd_sum({t.beta, -t.alpha});
  const DD B = dd_sum({t.gamma, -t.alpha});
  const DD C0 = dd_sum({t.beta, -t.alpha, t.gamma, -hd});
  const detail::GammaProduct c = detail::gamma_product({t.beta - hd, t.gamma - hd}, {t.alpha - hd});
  const long double lz = log_dd(z);
  const long double lx = log_dd(x);
  auto fact = [](int n) { return std::tgamma(n + 1.0); };
  DD total;
  *err = 0.0;
  // d^m/dx^m g(1 − x²) = Σ_s m!/(s! 2^s (m−2s)!) (−2)^{m−s} x^{m−2s} g^{(m−s)}(z)
  // with g^{(j)}(z) = c/Γ(C0−j) z^{C0−j−1} 2F1(A, B; C0−j; z).
  for (int s = 0; 2 * s <= m; ++s) {
    const int j = m - s;
    const DD Cj = C0 - DD(static_cast<double>(j));
    const double cj = Cj.to_double();
    if (cj <= 0.0 && cj == std::floor(cj)) {
      throw DomainError("near-range derivative: order too high for these parameters");
    }
    int sg = 1;
    const long double lg = detail::lgamma_ld(cj, &sg);
    const double comb = fact(m) / (fact(s) * std::ldexp(1.0, s) * fact(m - 2 * s)) * std::ldexp((j % 2) ? -1.0 : 1.0, j);
    const long double logpre = c.log_abs - lg + (static_cast<long double>(cj) - 1.0L) * lz +
                               static_cast<long double>(m - 2 * s) * lx;
    const long double pre = static_cast<long double>(c.sign * sg) * comb * std::exp(logpre);
    detail::SeriesStats st;
    const std::array<DD, 2> num{A, B};
    const std::array<DD, 1> den{Cj};
    const DD T = detail::pfq_series(num, den, z, dd_options(), &st, detail::from_long_double(pre));
    total += T;
    *err += st.abs_error + 1e-18 * std::fabs(T.hi);
  }
  return total;
}

Partial power_series_derivative(const HyperParams& t, DD x, int m) {
  const PowerSeriesSetup s = power_series_setup(t);
  const DD z = x * x;
  double pref_rel = 0.0;
  DD t0 = branch_prefactor(s, x, &pref_rel);
  double e1 = 0.0, e2 = 0.0;
  DD b1 = weighted_series(s.n1, s.d1, z, t0, s.exponent, m, &e1);
  if (pref_rel * std::fabs(b1.hi) > kPrefactorErrorMax) {
    t0 = detail::precise_gamma_power(s.varpi_num, s.varpi_den, s.exponent_parts, x);
    b1 = weighted_series(s.n1, s.d1, z, t0, s.exponent, m, &e1);
    pref_rel = 1e-31;
  }
  const DD b2 = weighted_series(s.n2, s.d2, z, DD(1.0), 0.0, m, &e2);
  Partial p;
  p.value = b1 + b2;
  p.error = e1 + e2 + pref_rel * std::fabs(b1.hi);
  return p;
}

DD ratio_dd(double h, double a) { return DD(h) / DD(a); }

double integer_distance(double v) {
  const double r = std::round(v);
  return std::fabs(v - r);
}

}  // namespace

ValidityReport validate(const HyperParams& t) {
  check_types(t);
  ValidityReport r;
  const double hd = half_d(t);
  const double off = t.alpha - hd - t.k;
  r.a1 = t.alpha > hd + t.k;
  r.a2 = 2.0 * (t.beta - t.alpha) * (t.gamma - t.alpha) >= t.alpha;
  r.a3 = 2.0 * (t.beta + t.gamma) >= 6.0 * t.alpha + 1.0;
  r.strict_a3 = 2.0 * (t.beta + t.gamma) > 6.0 * t.alpha + 1.0;
  r.beta_gamma_exceed_alpha = t.beta > t.alpha && t.gamma > t.alpha;
  const double dist = integer_distance(off);
  const bool near_positive_int = std::round(off) >= 1.0;
  r.a4 = !(near_positive_int && dist <= kIntegerTol);
  r.continuation_required = r.a1 && r.a2 && r.a3 && !r.a4;
  r.near_integer_warning = r.a1 && near_positive_int && dist > kIntegerTol && dist < kWarnTol;
  if (r.all_pass() && r.strict_a3) r.sobolev_exponent = t.alpha - t.k;
  return r;
}

NormalizingConstants normalizing_constants(const HyperParams& t) {
  require_all(t);
  const double hd = half_d(t), k = t.k;
  const detail::GammaProduct w = detail::gamma_product(
      {t.alpha, t.beta - hd - k, t.gamma - hd - k, hd, hd + k - t.alpha},
      {hd + k, t.alpha - hd - k, t.beta - t.alpha, t.gamma - t.alpha, t.alpha - k});
  const detail::GammaProduct wh = detail::gamma_product(
      {hd, t.alpha, t.beta - hd - k, t.gamma - hd - k}, {hd + k, t.alpha - hd - k, t.beta, t.gamma});
  const long double log_den = hd * std::log(std::numbers::pi_v<long double>) +
                              (t.d + 2.0L * k) * std::log(2.0L);
  NormalizingConstants c;
  c.varpi = static_cast<double>(w.value());
  c.varpi_hat = static_cast<double>(wh.sign * std::exp(wh.log_abs - log_den));
  if (!std::isfinite(c.varpi) || !std::isfinite(c.varpi_hat)) {
    throw OverflowError("normalizing constants overflow the double range");
  }
  return c;
}

Evaluation evaluate_detailed(const HyperParams& t, double h, const EvalOptions& options) {
  if (!std::isfinite(h) || h < 0.0) throw DomainError("evaluate: h must be finite and >= 0");
  const ValidityReport rep = require_evaluable(t);
  Evaluation ev;
  if (rep.near_integer_warning) {
    ev.warnings.emplace_back("alpha - d/2 - k is within 1e-5 of an integer; power series is ill-conditioned");
  }
  if (h >= t.a) {
    ev.representation = Representation::Outside;
    return ev;
  }
  if (h == 0.0) {
    ev.value = 1.0;
    ev.representation = Representation::Origin;
    return ev;
  }
  const DD x = ratio_dd(h, t.a);
  Partial p;
  if (rep.continuation_required || x.hi > kSwitchRatio) {
    p = near_range(t, x);
    ev.representation = Representation::NearRange;
  } else {
    p = power_series(t, x);
    ev.representation = Representation::PowerSeries;
  }
  ev.value = p.value.to_double();
  ev.error_estimate = p.error + 1.2e-16 * std::fabs(ev.value);
  if (ev.error_estimate > 1e-9) {
    ev.warnings.emplace_back("estimated evaluation error " + std::to_string(ev.error_estimate) + " exceeds 1e-9");
  }
  if (options.cross_check) {
    double alt = ev.value;
    if (ev.representation == Representation::PowerSeries) {
      alt = near_range(t, x).value.to_double();
    } else if (rep.a4 && x.hi < 0.9) {
      alt = power_series(t, x).value.to_double();
    }
    if (std::fabs(alt - ev.value) > 1e-6) {
      ev.warnings.emplace_back("representation disagreement: " + std::to_string(ev.value) + " vs " +
                               std::to_string(alt));
    }
  }
  return ev;
}

double evaluate(const HyperParams& t, double h) { return evaluate_detailed(t, h).value; }

double evaluate_continuation(const HyperParams& t, double h) {
  if (!std::isfinite(h) || h < 0.0) throw DomainError("evaluate_continuation: h must be finite and >= 0");
  require_evaluable(t);
  const double off = t.alpha - half_d(t) - t.k;
  if (!(integer_distance(off) <= kIntegerTol && std::round(off) >= 1.0)) {
    throw InvalidParameters("evaluate_continuation: alpha - d/2 - k is not a positive integer");
  }
  if (h >= t.a) return 0.0;
  if (h == 0.0) return 1.0;
  return near_range(t, ratio_dd(h, t.a)).value.to_double();
}

double evaluate_power_series(const HyperParams& t, double h) {
  require_all(t);
  if (!(h > 0.0 && h < t.a)) throw DomainError("evaluate_power_series: h must lie in (0, a)");
  return power_series(t, ratio_dd(h, t.a)).value.to_double();
}

double evaluate_near_range(const HyperParams& t, double h) {
  require_evaluable(t);
  if (!(h > 0.0 && h < t.a)) throw DomainError("evaluate_near_range: h must lie in (0, a)");
  return near_range(t, ratio_dd(h, t.a)).value.to_double();
}

double evaluate_gauss_sum(const HyperParams& t, double h) {
  require_all(t);
  if (!(h > 0.0 && h < t.a)) throw DomainError("evaluate_gauss_sum: h must lie in (0, a)");
  const double hd = half_d(t), k = t.k, al = t.alpha, be = t.beta, ga = t.gamma;
  const double x = h / t.a, z = x * x;
  const double kf = std::tgamma(k + 1.0);
  double first = 0.0;
  for (int n = 0; n <= t.k; ++n) {
    const double coef = ((n % 2) ? -1.0 : 1.0) * kf * pochhammer(1 + hd + k - be, n) * pochhammer(1 + hd + k - ga, n) /
                        (std::tgamma(n + 1.0) * std::tgamma(k - n + 1.0) * pochhammer(1 - hd - n, n) *
                         pochhammer(1 + hd + k - al, n));
    first += coef * std::pow(z, n) * gauss_2f1(1 + hd + k - be + n, 1 + hd + k - ga + n, 1 + hd + k - al + n, z);
  }
  const detail::GammaProduct w = detail::gamma_product({be - hd - k, ga - hd - k, hd, hd + k - al},
                                                       {hd + k, al - hd - k, be - al, ga - al});
  double second = 0.0;
  for (int n = 0; n <= t.k; ++n) {
    const double coef = (((n + t.k) % 2) ? -1.0 : 1.0) * kf * pochhammer(1 - al, t.k - n) * pochhammer(1 + al - be, n) *
                        pochhammer(1 + al - ga, n) /
                        (std::tgamma(n + 1.0) * std::tgamma(k - n + 1.0) * pochhammer(1 + al - hd - k, n));
    second += coef * std::pow(x, 2 * al - t.d - 2 * k + 2 * n) *
              gauss_2f1(1 + al - be + n, 1 + al - ga + n, 1 + al - hd - k + n, z);
  }
  return first + static_cast<double>(w.value()) * second;
}

double evaluate_derivative(const HyperParams& t, double h, int order) {
  if (order < 0) throw DomainError("evaluate_derivative: negative order");
  if (order == 0) return evaluate(t, h);
  const ValidityReport rep = require_evaluable(t);
  if (!(h > 0.0 && h < t.a)) throw DomainError("evaluate_derivative: h must lie in (0, a)");
  const DD x = ratio_dd(h, t.a);
  DD v;
  double err = 0.0;
  if ((t.k == 0 && x.hi > 0.9) || !rep.a4) {
    if (t.k != 0) throw DomainError("evaluate_derivative: continuation derivatives need k = 0");
    v = near_range_derivative_k0(t, x, order, &err);
  } else {
    // The weighted sums carry an extra factor x^m.
    const Partial p = power_series_derivative(t, x, order);
    DD xm(1.0);
    for (int i = 0; i < order; ++i) xm *= x;
    v = p.value / xm;
  }
  return v.to_double() / std::pow(t.a, order);
}

double spectral_density(const HyperParams& t, double u) {
  if (!std::isfinite(u) || u < 0.0) throw DomainError("spectral_density: u must be finite and >= 0");
  const NormalizingConstants c = normalizing_constants(t);
  if (u == 0.0) return t.k > 0 ? 0.0 : c.varpi_hat * std::pow(t.a, t.d);
  const double au = t.a * u;
  const SeriesResult F = pfq_eval({{t.alpha}, {t.beta, t.gamma}}, -0.25 * au * au);
  const long double logpre = std::log(static_cast<long double>(c.varpi_hat)) +
                             static_cast<long double>(t.d + 2 * t.k) * std::log(static_cast<long double>(t.a)) +
                             static_cast<long double>(2 * t.k) * std::log(static_cast<long double>(u));
  return static_cast<double>(std::exp(logpre) * static_cast<long double>(F.value));
}

double origin_exponent(const HyperParams& t) { return 2.0 * t.alpha - t.d - 2.0 * t.k; }

double range_exponent(const HyperParams& t) { return t.beta + t.gamma - t.alpha - 2.0 * t.k - 0.5 * t.d - 1.0; }

}  // namespace nk
