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

#include <algorithm>
#include <array>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "nk/detail/dd.hpp"
#include "nk/detail/series.hpp"
#include "nk/errors.hpp"
#include "nk/specfun.hpp"

namespace nk {
namespace detail {

namespace {

constexpr double kDDEps = 1.2325951644078310e-32;  // 2^-106

bool is_nonpositive_integer(DD v) {
  return v.lo == 0.0 && v.hi <= 0.0 && v.hi == std::floor(v.hi);
}

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

}  // namespace

long double GammaProduct::value() const {
  if (zero) return 0.0L;
  return static_cast<long double>(sign) * std::exp(log_abs);
}

long double lgamma_ld(double x, int* sign) {
  if (is_nonpositive_integer(x)) throw PoleError("lgamma: pole at " + std::to_string(x));
  return boost::math::lgamma(static_cast<long double>(x), sign);
}

GammaProduct gamma_product(std::initializer_list<double> num,
                           std::initializer_list<double> den) {
  GammaProduct g;
  for (double x : num) {
    if (is_nonpositive_integer(x)) {
      throw PoleError("gamma product: numerator pole at " + std::to_string(x));
    }
    int s = 1;
    g.log_abs += boost::math::lgamma(static_cast<long double>(x), &s);
    g.sign *= s;
  }
  for (double x : den) {
    if (is_nonpositive_integer(x)) {
      g.zero = true;
      continue;
    }
    int s = 1;
    g.log_abs -= boost::math::lgamma(static_cast<long double>(x), &s);
    g.sign *= s;
  }
  return g;
}

DD pfq_series(std::span<const DD> numerator, std::span<const DD> denominator,
              DD x, const SeriesOptions& options, SeriesStats* stats, DD term0) {
  // A zero or negative-integer denominator is a pole unless a numerator
  // coefficient of smaller magnitude terminates the series first.
  for (const DD& b : denominator) {
    if (!is_nonpositive_integer(b)) continue;
    bool rescued = false;
    for (const DD& a : numerator) {
      if (is_nonpositive_integer(a) && a.hi > b.hi) rescued = true;
    }
    if (!rescued) {
      throw PoleError("pfq: denominator coefficient " + std::to_string(b.hi) +
                      " is a non-positive integer");
    }
  }

  SeriesStats local;
  SeriesStats& st = stats ? *stats : local;
  st = SeriesStats{};

  DD term = term0;
  DD pos, neg;
  if (is_zero(term) || is_zero(x)) {
    st.terms = 1;
    st.terminated = true;
    st.max_term = std::fabs(term.hi);
    return term;
  }

  const bool p_eq_q1 = numerator.size() == denominator.size() + 1;
  const double absx = std::fabs(x.hi);
  int small = 0;
  double tail = 0.0;
  std::size_t n = 0;
  for (;; ++n) {
    if (n >= options.max_terms) {
      throw ConvergenceError("pfq: no convergence after " +
                             std::to_string(options.max_terms) + " terms");
    }
    if (!std::isfinite(term.hi)) throw OverflowError("pfq: term overflow");
    if (term.hi >= 0.0) pos += term; else neg -= term;
    st.max_term = std::max(st.max_term, std::fabs(term.hi));

    const DD nn(static_cast<double>(n));
    DD num = x;
    bool terminates = false;
    for (const DD& a : numerator) {
      const DD an = a + nn;
      if (is_zero(an)) terminates = true;
      num *= an;
    }
    if (terminates) {
      st.terminated = true;
      tail = 0.0;
      break;
    }
    DD den(static_cast<double>(n + 1));
    for (const DD& b : denominator) den *= b + nn;
    const DD ratio = num / den;
    term *= ratio;

    // Tail bound from the current ratio; for p = q + 1 the ratio tends to
    // |x| and may approach it from above, so that limit is used as a floor.
    double r = std::fabs(ratio.hi);
    if (p_eq_q1) r = std::max(r, absx);
    const double sum = std::fabs((pos - neg).hi);
    const double t = std::fabs(term.hi);
    if (r < 1.0) {
      const double est = t / (1.0 - r);
      const bool tiny = est <= options.rel_tol * sum || est <= 1e-3 * kDDEps * st.max_term;
      small = tiny ? small + 1 : 0;
      tail = est;
    } else {
      small = 0;
    }
    if (small >= options.hysteresis) {
      ++n;
      break;
    }
  }
  st.terms = n + 1;
  const DD result = pos - neg;
  st.abs_error = tail + static_cast<double>(st.terms + 8) * 4.0 * kDDEps * (pos + neg).hi;
  return result;
}

bool pfq_asymptotic(std::span<const double> numerator,
                    std::span<const double> denominator, double w, double rel_tol,
                    double* value, double* abs_error) {
  const std::size_t p = numerator.size();
  const std::size_t q = denominator.size();
  if (!(p + 1 == q && q >= 1 && q <= 2) || !(w > 0.0)) return false;
  const double X = 0.25 * w * w;

  // Algebraic part, present for 1F2 only:
  //   Γ(b1)Γ(b2)/(Γ(b1−a)Γ(b2−a)) X^{−a} Σ (a)_m(1+a−b1)_m(1+a−b2)_m/m! (−1/X)^m
  double alg = 0.0, alg_err = 0.0;
  if (p == 1) {
    const double a = numerator[0], b1 = denominator[0], b2 = denominator[1];
    const GammaProduct g = gamma_product({b1, b2}, {b1 - a, b2 - a});
    if (!g.zero) {
      double s = 1.0, t = 1.0, best = std::numeric_limits<double>::infinity();
      for (int m = 0; m < 400; ++m) {
        const double f = (a + m) * (1.0 + a - b1 + m) * (1.0 + a - b2 + m) / (m + 1.0) * (-1.0 / X);
        const double tn = t * f;
        if (tn == 0.0) { best = 0.0; break; }
        if (std::fabs(tn) >= std::fabs(t)) { best = std::fabs(t); break; }
        t = tn;
        s += t;
        if (std::fabs(t) <= 1e-17 * std::fabs(s)) { best = std::fabs(t); break; }
      }
      const long double pref = g.value() * std::exp(-static_cast<long double>(a) * std::log(static_cast<long double>(X)));
      alg = static_cast<double>(pref * s);
      alg_err = static_cast<double>(std::fabs(pref)) * best;
    }
  }

  // Oscillatory part. With D' = x d/dx + i x, the differential operator of
  // pFq(−x²/4) conjugated by e^{ix} maps x^m to Σ_j A_j(m) x^{m+j}; the formal
  // solution Σ c_k x^{ρ−k} then follows from a linear recurrence.
  using cplx = std::complex<double>;
  const cplx I(0.0, 1.0);
  auto coeffs = [&](double m) {
    std::vector<cplx> first{cplx(1.0)};
    auto apply = [&](std::vector<cplx>& poly, double c) {
      std::vector<cplx> out(poly.size() + 1, cplx(0.0));
      for (std::size_t j = 0; j < poly.size(); ++j) {
        out[j] += poly[j] * ((m + static_cast<double>(j)) / 2.0 + c);
        out[j + 1] += poly[j] * (0.5 * I);
      }
      poly = std::move(out);
    };
    apply(first, 0.0);
    for (double b : denominator) apply(first, b - 1.0);
    std::vector<cplx> second{cplx(0.25)};
    for (double a : numerator) apply(second, a);
    std::vector<cplx> total(q + 2, cplx(0.0));
    for (std::size_t j = 0; j < first.size() && j < total.size(); ++j) total[j] += first[j];
    for (std::size_t j = 0; j < second.size() && j + 2 < total.size(); ++j) total[j + 2] += second[j];
    return total;
  };

  double rho = 0.5;
  for (double a : numerator) rho += a;
  for (double b : denominator) rho -= b;

  std::vector<std::vector<cplx>> A;
  std::vector<cplx> c{cplx(1.0)};
  A.push_back(coeffs(rho));
  cplx sum(1.0);
  double prev = 1.0, osc_trunc = std::numeric_limits<double>::infinity();
  double wpow = 1.0;
  for (std::size_t n = 1; n < 300; ++n) {
    A.push_back(coeffs(rho - static_cast<double>(n)));
    cplx acc(0.0);
    const std::size_t k0 = n > q ? n - q : 0;
    for (std::size_t k = k0; k < n; ++k) acc += c[k] * A[k][q - n + k];
    const cplx lead = A[n][q];
    if (std::abs(lead) == 0.0) return false;
    c.push_back(-acc / lead);
    wpow /= w;
    const cplx term = c[n] * wpow;
    const double mag = std::abs(term);
    if (mag > prev && n > 2) {
      osc_trunc = prev;
      break;
    }
    sum += term;
    prev = mag;
    if (mag <= 1e-17 * std::abs(sum)) {
      osc_trunc = mag;
      break;
    }
  }

  // Amplitude ΠΓ(b)/ΠΓ(a)/√π (w/2)^ρ.
  long double log_amp = static_cast<long double>(rho) * std::log(static_cast<long double>(w) / 2.0L) -
                        0.5L * std::log(std::numbers::pi_v<long double>);
  int amp_sign = 1;
  for (double b : denominator) {
    if (is_nonpositive_integer(b)) return false;
    int s = 1;
    log_amp += boost::math::lgamma(static_cast<long double>(b), &s);
    amp_sign *= s;
  }
  for (double a : numerator) {
    if (is_nonpositive_integer(a)) return false;  // terminating: use the series
    int s = 1;
    log_amp -= boost::math::lgamma(static_cast<long double>(a), &s);
    amp_sign *= s;
  }
  const double amp = amp_sign * static_cast<double>(std::exp(log_amp));
  const double half_pi_rho = 0.5 * std::numbers::pi * rho;
  const cplx phase = cplx(std::cos(w), std::sin(w)) * cplx(std::cos(half_pi_rho), std::sin(half_pi_rho));
  const double osc = amp * std::real(phase * sum);
  // Phase error from rounding w itself is intrinsic conditioning of the
  // function and is not counted here.
  const double osc_err = std::fabs(amp) * (osc_trunc + 4e-16 * std::abs(sum));

  const double scale = std::fabs(alg) + std::fabs(amp) * std::abs(sum);
  const double err = alg_err + osc_err + 2e-16 * scale;
  if (!(err <= rel_tol * scale) || !std::isfinite(scale)) return false;
  *value = alg + osc;
  *abs_error = err;
  return true;
}

}  // namespace detail

namespace {

using detail::DD;

std::vector<DD> to_dd(const std::vector<double>& v) {
  return {v.begin(), v.end()};
}

bool has_nonpositive_integer(const std::vector<double>& v) {
  return std::any_of(v.begin(), v.end(), [](double x) { return x <= 0.0 && x == std::floor(x); });
}

SeriesResult run_series(const std::vector<double>& num, const std::vector<double>& den, double x,
                        const SeriesOptions& options) {
  const std::vector<DD> a = to_dd(num), b = to_dd(den);
  detail::SeriesStats st;
  const DD v = detail::pfq_series(a, b, DD(x), options, &st);
  SeriesResult r;
  r.value = v.to_double();
  r.error_estimate = st.abs_error + 1.2e-16 * std::fabs(r.value);
  r.terms = st.terms;
  r.method = st.terminated ? SeriesMethod::Terminated : SeriesMethod::Series;
  return r;
}

// Plain double series used inside the logarithmic connection formulas.
template <class Term>
double sum_until_small(Term&& next_term, double* err) {
  double s = 0.0, c = 0.0;
  int small = 0;
  for (int n = 0; n < 100000; ++n) {
    const double t = next_term(n);
    // Kahan-Babuska summation
    const double y = s + t;
    c += std::fabs(s) >= std::fabs(t) ? (s - y) + t : (t - y) + s;
    s = y;
    if (std::fabs(t) <= 1e-17 * std::fabs(s + c)) {
      if (++small >= 3) {
        *err = std::fabs(t) * 4.0;
        return s + c;
      }
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: logarithmic series did not converge");
}

// c − a − b = m ∈ ℤ, argument x in (0.5, 1); y = 1 − x.
SeriesResult gauss_2f1_log_case(double a, double b, double c, int m, double x) {
  const double y = 1.0 - x;
  const double ly = std::log(y);
  SeriesResult r;
  r.method = SeriesMethod::LogTransformation;
  double err = 0.0;
  if (m >= 0) {
    double finite = 0.0;
    if (m > 0) {
      const long double g = detail::gamma_product({static_cast<double>(m), c}, {a + m, b + m}).value();
      double t = 1.0, s = 0.0;
      for (int n = 0; n < m; ++n) {
        s += t;
        t *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * y;
      }
      finite = static_cast<double>(g) * s;
    }
    const long double g2 = detail::gamma_product({c}, {a, b}).value();
    double tcoef = 1.0 / std::tgamma(m + 1.0);  // (a+m)_0(b+m)_0/(0! m!)
    auto term = [&](int n) {
      const double bracket = ly - digamma(n + 1.0) - digamma(n + m + 1.0) + digamma(a + n + m) + digamma(b + n + m);
      const double t = tcoef * bracket;
      tcoef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0)) * y;
      return t;
    };
    const double series = sum_until_small(term, &err);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (x−1)^m = (−y)^m
    const double ym = std::pow(y, m);
    r.value = finite - sign * ym * static_cast<double>(g2) * series;
    r.error_estimate = std::fabs(static_cast<double>(g2)) * ym * err + 4e-16 * (std::fabs(finite) + std::fabs(r.value));
    return r;
  }
  const int mp = -m;
  const long double g1 = detail::gamma_product({static_cast<double>(mp), c}, {a, b}).value();
  double t = 1.0, s = 0.0;
  for (int n = 0; n < mp; ++n) {
    s += t;
    t *= (a - mp + n) * (b - mp + n) / ((n + 1.0) * (1.0 - mp + n)) * y;
  }
  const double finite = static_cast<double>(g1) * std::pow(y, -mp) * s;
  const detail::GammaProduct g2p = detail::gamma_product({c}, {a - mp, b - mp});
  double second = 0.0;
  if (!g2p.zero) {
    double tcoef = 1.0 / std::tgamma(mp + 1.0);
    auto term = [&](int n) {
      const double bracket = ly - digamma(n + 1.0) - digamma(n + mp + 1.0) + digamma(a + n) + digamma(b + n);
      const double tt = tcoef * bracket;
      tcoef *= (a + n) * (b + n) / ((n + 1.0) * (n + mp + 1.0)) * y;
      return tt;
    };
    const double series = sum_until_small(term, &err);
    const double sign = (mp % 2 == 0) ? 1.0 : -1.0;
    second = sign * static_cast<double>(g2p.value()) * series;
    err *= std::fabs(static_cast<double>(g2p.value()));
  }
  r.value = finite - second;
  r.error_estimate = err + 4e-16 * (std::fabs(finite) + std::fabs(second));
  return r;
}

}  // namespace

SeriesResult gauss_2f1_eval(double a, double b, double c, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("gauss_2f1: argument must lie in [0, 1]");
  if (c <= 0.0 && c == std::floor(c)) {
    // Allowed only when a numerator terminates earlier; the series checks it.
    return run_series({a, b}, {c}, x, SeriesOptions{});
  }
  if (x == 0.0) return {1.0, 0.0, 1, SeriesMethod::Trivial};
  const double s = c - a - b;
  if (x == 1.0) {
    if (has_nonpositive_integer({a, b})) return run_series({a, b}, {c}, x, SeriesOptions{});
    if (!(s > 0.0)) throw DomainError("gauss_2f1: x = 1 requires c - a - b > 0");
    const double v = static_cast<double>(detail::gamma_product({c, s}, {c - a, c - b}).value());
    return {v, 4e-16 * std::fabs(v), 1, SeriesMethod::Transformation};
  }
  if (x <= 0.5 || has_nonpositive_integer({a, b})) return run_series({a, b}, {c}, x, SeriesOptions{});

  const double m = std::round(s);
  const double dist = std::fabs(s - m);
  if (dist <= 1e-12 * std::max(1.0, std::fabs(m))) {
    return gauss_2f1_log_case(a, b, c, static_cast<int>(m), x);
  }
  if (dist < 1e-3 && x <= 0.95) {
    // Connection coefficients would cancel like 1/dist; the direct series is
    // still affordable here.
    return run_series({a, b}, {c}, x, SeriesOptions{});
  }
  const double y = 1.0 - x;
  const detail::GammaProduct g1 = detail::gamma_product({c, s}, {c - a, c - b});
  const detail::GammaProduct g2 = detail::gamma_product({c, -s}, {a, b});
  SeriesResult f1{}, f2{};
  double v1 = 0.0, v2 = 0.0;
  if (!g1.zero) {
    f1 = run_series({a, b}, {1.0 - s}, y, SeriesOptions{});
    v1 = static_cast<double>(g1.value()) * f1.value;
  }
  double scale2 = 0.0;
  if (!g2.zero) {
    f2 = run_series({c - a, c - b}, {1.0 + s}, y, SeriesOptions{});
    scale2 = static_cast<double>(g2.value() * std::pow(static_cast<long double>(y), static_cast<long double>(s)));
    v2 = scale2 * f2.value;
  }
  SeriesResult r;
  r.value = v1 + v2;
  r.error_estimate = std::fabs(static_cast<double>(g1.zero ? 0.0L : g1.value())) * f1.error_estimate +
                     std::fabs(scale2) * f2.error_estimate + 4e-16 * (std::fabs(v1) + std::fabs(v2));
  r.terms = f1.terms + f2.terms;
  r.method = SeriesMethod::Transformation;
  return r;
}

double gauss_2f1(double a, double b, double c, double x) { return gauss_2f1_eval(a, b, c, x).value; }

SeriesResult pfq_eval(const PFQParams& params, double x, const SeriesOptions& options) {
  const auto& num = params.numerator;
  const auto& den = params.denominator;
  if (!std::isfinite(x)) throw DomainError("pfq: non-finite argument");
  if (x == 0.0) {
    // Still reject a pole: the 0-th term is 1 regardless, but the
    // parameter set itself is malformed.
    for (double b : den) {
      if (b <= 0.0 && b == std::floor(b) && !has_nonpositive_integer(num)) {
        throw PoleError("pfq: denominator coefficient is a non-positive integer");
      }
    }
    return {1.0, 0.0, 1, SeriesMethod::Trivial};
  }
  const std::size_t p = num.size(), q = den.size();
  const bool terminating = has_nonpositive_integer(num);
  if (!terminating) {
    if (p > q + 1) throw DomainError("pfq: divergent series (p > q + 1)");
    if (p == 2 && q == 1 && x > 0.5 && x <= 1.0) return gauss_2f1_eval(num[0], num[1], den[0], x);
    if (p == q + 1 && std::fabs(x) >= 1.0) {
      throw DomainError("pfq: |x| >= 1 outside the convergence disk of p = q + 1");
    }
    if (options.allow_asymptotic && p + 1 == q && q <= 2 && x <= -150.0) {
      double v = 0.0, e = 0.0;
      const double w = 2.0 * std::sqrt(-x);
      const bool ok = detail::pfq_asymptotic(num, den, w, 1e-14, &v, &e);
      if (ok) return {v, e, 0, SeriesMethod::Asymptotic};
      try {
        SeriesResult sr = run_series(num, den, x, options);
        if (detail::pfq_asymptotic(num, den, w, 1e-6, &v, &e) && e < sr.error_estimate) {
          return {v, e, 0, SeriesMethod::Asymptotic};
        }
        return sr;
      } catch (const Error&) {
        if (detail::pfq_asymptotic(num, den, w, 1e-3, &v, &e)) return {v, e, 0, SeriesMethod::Asymptotic};
        throw;
      }
    }
  }
  return run_series(num, den, x, options);
}

double pfq(const PFQParams& params, double x) { return pfq_eval(params, x).value; }

}  // namespace nk
