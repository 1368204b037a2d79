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

#include "nk/families.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <tuple>
#include <utility>

#include "nk/detail/dd.hpp"
#include "nk/detail/series.hpp"
#include "nk/errors.hpp"
#include "nk/specfun.hpp"

namespace nk {

namespace {

using detail::DD;

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_distance(double h) {
  if (!std::isfinite(h) || h < 0.0) throw DomainError("distance must be finite and >= 0");
}

void check_scale(double a) {
  if (!std::isfinite(a) || !(a > 0.0)) throw InvalidParameters("scale a must be finite and > 0");
}

void check_dk(int d, int k) {
  if (d < 1) throw InvalidParameters("d must be >= 1");
  if (k < 0) throw InvalidParameters("k must be >= 0");
}

bool near_integer(double v, double tol, long* n = nullptr) {
  const double r = std::round(v);
  if (n != nullptr) *n = static_cast<long>(r);
  return std::fabs(v - r) <= tol;
}

SeriesOptions dd_options() {
  SeriesOptions o;
  o.rel_tol = 1e-31;
  o.allow_asymptotic = false;
  return o;
}

// ---- exact rationals for the Bessel-sum coefficients --------------------

__extension__ typedef __int128 i128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Rational {
  i128 num = 0;
  i128 den = 1;

  void normalize() {
    if (den < 0) {
      den = -den;
      num = -num;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Rational& operator+=(const Rational& o) {
    const i128 g = gcd128(den, o.den);
    const i128 l = den / g;
    num = num * (o.den / g) + o.num * l;
    den = l * o.den;
    normalize();
    return *this;
  }
  [[nodiscard]] long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
};

i128 factorial128(int n) {
  i128 r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

i128 rising128(int x, int n) {
  i128 r = 1;
  for (int i = 0; i < n; ++i) r *= (x + i);
  return r;
}

// Exact arithmetic is used up to this hole-effect order; beyond it the
// coefficients are accumulated in long double.
constexpr int kExactOrderMax = 12;

// Term index of the Bessel sum: power offset P, order offset O and s. The
// term is R · (ν+1−s)_s · 2^{−ν}/Γ(ν) · x^{ν+P} · K_{ν+O}(x).
using TermKey = std::tuple<int, int, int>;

struct BesselSumTerms {
  std::map<TermKey, long double> coeff;
};

BesselSumTerms bessel_sum_terms(int d, int k) {
  std::map<TermKey, Rational> exact;
  std::map<TermKey, long double> approx;
  const bool use_exact = k <= kExactOrderMax;
  for (int q = 0; q <= k; ++q) {
    for (int r = 0; r <= q; ++r) {
      for (int s = 0; s <= q - r; ++s) {
        for (int t = 0; t <= q - r - s; ++t) {
          const TermKey key{q - r - s, 2 * t + r + s - q, s};
          const int sign = ((q - s) % 2 == 0) ? 1 : -1;
          const int twos = 2 * q - s - 1 - q;  // 2^{2q−s−1} over the 2^q of (d/2)_q
          if (use_exact) {
            i128 n = factorial128(q - r) * rising128(q - r, r) * rising128(k - q + 1, q) * rising128(q, r);
            i128 den = factorial128(q) * factorial128(r) * factorial128(s) * factorial128(t) *
                       factorial128(q - r - s - t);
            for (int i = 0; i < q; ++i) den *= (d + 2 * i);
            if (twos >= 0) den *= (i128{1} << twos);
            else n *= (i128{1} << -twos);
            if (n == 0) continue;
            Rational c{sign * n, den};
            c.normalize();
            exact[key] += c;
          } else {
            const long double v = std::tgamma(static_cast<long double>(q - r + 1));
            long double rr = 1;
            for (int i = 0; i < r; ++i) rr *= (q - r + i) * static_cast<long double>(q + i);
            long double kk = 1;
            for (int i = 0; i < q; ++i) kk *= (k - q + 1 + i) / static_cast<long double>(d + 2 * i);
            long double den = std::tgamma(static_cast<long double>(q + 1)) * std::tgamma(r + 1.0L) *
                              std::tgamma(s + 1.0L) * std::tgamma(t + 1.0L) *
                              std::tgamma(static_cast<long double>(q - r - s - t + 1));
            approx[key] += sign * v * rr * kk * std::ldexp(1.0L, -twos) / den;
          }
        }
      }
    }
  }
  BesselSumTerms out;
  if (use_exact) {
    for (const auto& [key, c] : exact)
      if (c.num != 0) out.coeff[key] = c.value();
  } else {
    out.coeff = std::move(approx);
  }
  return out;
}

double matern_direct(double nu, double x) {
  // 2^{1−ν}/Γ(ν) · x^ν K_ν(x), assembled in log space.
  const double kv = bessel_k(nu, x);
  if (kv == 0.0) return 0.0;
  if (!std::isfinite(kv)) return std::numeric_limits<double>::quiet_NaN();
  const long double lg =
      (1.0L - nu) * std::numbers::ln2_v<long double> - detail::lgamma_ld(nu, nullptr) + nu * std::log((long double)x) +
      std::log((long double)kv);
  return static_cast<double>(std::exp(lg));
}

struct HmResult {
  double value = 0.0;
  double error = 0.0;
};

HmResult hole_matern_1f2(double nu, int d, int k, double x) {
  const double hd = 0.5 * d;
  const DD X = DD(x) * DD(x) / DD(4.0);
  const SeriesOptions opt = dd_options();

  const std::array<DD, 1> n1{DD(k + hd)};
  const std::array<DD, 2> d1{DD(1.0) - DD(nu), DD(hd)};
  detail::SeriesStats s1;
  const DD first = detail::pfq_series(n1, d1, X, opt, &s1);

  const detail::GammaProduct g = detail::gamma_product({nu + hd + k, hd, -nu}, {hd + k, nu, nu + hd});
  DD second;
  detail::SeriesStats s2;
  if (!g.zero) {
    const long double lx = std::log(static_cast<long double>(X.hi) + static_cast<long double>(X.lo));
    const long double l0 = g.log_abs + static_cast<long double>(nu) * lx;
    if (l0 < -11000.0L) {
      second = DD(0.0);
    } else {
      const DD term0 = detail::from_long_double(g.sign * std::exp(l0));
      const std::array<DD, 1> n2{DD(nu) + DD(hd + k)};
      const std::array<DD, 2> d2{DD(nu) + DD(hd), DD(nu) + DD(1.0)};
      second = detail::pfq_series(n2, d2, X, opt, &s2, term0);
      s2.abs_error += 4e-19 * (1.0 + std::fabs(static_cast<double>(l0))) * std::fabs(second.hi);
    }
  }
  const DD total = first + second;
  return {total.hi, s1.abs_error + s2.abs_error + 1e-16 * std::fabs(total.hi)};
}

HmResult hole_matern_sum(double nu, int d, int k, double x) {
  const BesselSumTerms terms = bessel_sum_terms(d, k);
  const long double lx = std::log(static_cast<long double>(x));
  const long double base = -nu * std::numbers::ln2_v<long double> - detail::lgamma_ld(nu, nullptr);
  long double sum = 0.0L;
  long double mag = 0.0L;
  for (const auto& [key, c] : terms.coeff) {
    const auto [P, O, s] = key;
    const double kv = bessel_k(nu + O, x);
    if (!std::isfinite(kv)) throw OverflowError("hole Matern Bessel sum overflows at this distance");
    if (kv == 0.0) continue;
    long double poch = 1.0L;
    for (int i = 0; i < s; ++i) poch *= (nu + 1 - s + i);
    const long double lt = base + (nu + P) * lx + std::log(static_cast<long double>(kv));
    const long double term = c * poch * std::exp(lt);
    sum += term;
    mag = std::max(mag, std::fabs(term));
  }
  const double rounding = k <= kExactOrderMax ? 1e-16 : 1e-14;
  return {static_cast<double>(sum), static_cast<double>(mag) * rounding + 1e-16};
}

}  // namespace

// ---- Wendland -----------------------------------------------------------

double nu_min(double xi, int d) {
  if (d == 1 && xi > -0.5 && xi < 0.0) return 0.5 * (std::sqrt(8.0 * xi + 9.0) - 1.0);
  return xi + 0.5 * (d + 1);
}

HyperParams wendland_to_hyper(const WendlandParams& w) {
  const double hd = 0.5 * w.d;
  return HyperParams{w.a,
                     w.xi + hd + 0.5 + w.k,
                     w.xi + hd + 0.5 * (w.nu + 1.0) + w.k,
                     w.xi + hd + 0.5 * w.nu + w.k + 1.0,
                     w.d,
                     w.k};
}

void check_wendland(const WendlandParams& w) {
  check_scale(w.a);
  check_dk(w.d, w.k);
  if (!std::isfinite(w.xi) || !(w.xi > -0.5)) throw InvalidParameters("wendland: xi must be > -1/2");
  const double lo = nu_min(w.xi, w.d + 2 * w.k);
  if (!std::isfinite(w.nu) || w.nu < lo - 1e-12)
    throw InvalidParameters("wendland: nu must be >= nu_min(xi, d + 2k) = " + std::to_string(lo));
}

double generalized_wendland(const WendlandParams& w, double h) {
  check_wendland(w);
  check_distance(h);
  if (w.k != 0) throw InvalidParameters("generalized_wendland: k must be 0, use hole_wendland");
  if (h >= w.a) return 0.0;
  if (h == 0.0) return 1.0;
  const double x = h / w.a;
  const double z = (1.0 - x) * (1.0 + x);
  const detail::GammaProduct g =
      detail::gamma_product({w.xi + 0.5 * (w.nu + 1.0), w.xi + 0.5 * w.nu + 1.0}, {w.xi + w.nu + 1.0, w.xi + 0.5});
  const double f = gauss_2f1(0.5 * w.nu, 0.5 * (w.nu + 1.0), w.xi + w.nu + 1.0, z);
  return static_cast<double>(g.value() * std::pow(static_cast<long double>(z), w.xi + w.nu)) * f;
}

double hole_wendland(const WendlandParams& w, double h) {
  check_wendland(w);
  return evaluate(wendland_to_hyper(w), h);
}

// ---- hypergeometric closed forms ---------------------------------------

double gauss_hypergeometric(const HyperParams& t, double h) {
  const ValidityReport r = validate(t);
  if (!r.evaluable())
    throw InvalidParameters("gauss_hypergeometric: A.1-A.3 must hold");
  if (t.k != 0) throw InvalidParameters("gauss_hypergeometric: k must be 0");
  check_distance(h);
  if (h >= t.a) return 0.0;
  if (h == 0.0) return 1.0;
  const double hd = 0.5 * t.d;
  const double x = h / t.a;
  const double z = (1.0 - x) * (1.0 + x);
  const double c0 = t.beta - t.alpha + t.gamma - hd;
  const detail::GammaProduct g = detail::gamma_product({t.beta - hd, t.gamma - hd}, {t.alpha - hd, c0});
  const double f = gauss_2f1(t.beta - t.alpha, t.gamma - t.alpha, c0, z);
  return static_cast<double>(g.value() * std::pow(static_cast<long double>(z), c0 - 1.0)) * f;
}

HyperParams truncated_polynomial_params(double a, double alpha, int d, int k, int M, int N) {
  if (M < 0 || N < 0) throw InvalidParameters("truncated polynomial: M and N must be >= 0");
  return HyperParams{a, alpha, 1.0 + alpha + M, 1.0 + 0.5 * d + k + N, d, k};
}

double truncated_polynomial(const HyperParams& t, double h) {
  const ValidityReport r = validate(t);
  if (!r.all_pass()) throw InvalidParameters("truncated_polynomial: A.1-A.4 must hold");
  const double hd = 0.5 * t.d;
  long Ml = 0, Nl = 0;
  if (!near_integer(t.beta - t.alpha - 1.0, 1e-12, &Ml) || Ml < 0 ||
      !near_integer(t.gamma - hd - t.k - 1.0, 1e-12, &Nl) || Nl < 0)
    throw InvalidParameters("truncated_polynomial: beta - alpha - 1 and gamma - d/2 - k - 1 must be natural numbers");
  check_distance(h);
  if (h >= t.a) return 0.0;
  if (h == 0.0) return 1.0;
  const int M = static_cast<int>(Ml), N = static_cast<int>(Nl);
  const long double al = t.alpha, k = t.k, x2 = static_cast<long double>(h / t.a) * (h / t.a);

  long double first = 0.0L, term = 1.0L;
  for (int n = 0; n <= N; ++n) {
    first += term;
    term *= (hd + k + n) * (hd + k - al - M + n) * (n - N) / ((1 + hd + k - al + n) * (hd + n) * (n + 1.0L)) * x2;
  }
  const detail::GammaProduct c =
      detail::gamma_product({t.alpha, 1.0 + t.alpha + M - hd - t.k, hd, hd + t.k - t.alpha, N + 1.0},
                            {hd + t.k, t.alpha - hd - t.k, 1.0 + hd + t.k + N - t.alpha, t.alpha - t.k, M + 1.0});
  long double second = 0.0L;
  term = 1.0L;
  for (int n = 0; n <= M; ++n) {
    second += term;
    term *= (al + n) * (n - M) * (al - hd - k - N + n) / ((1 + al - hd - k + n) * (al - k + n) * (n + 1.0L)) * x2;
  }
  const long double e = 2.0L * al - t.d - 2.0L * k;
  const long double lx = std::log(static_cast<long double>(h / t.a));
  const long double pre = c.zero ? 0.0L : c.sign * std::exp(c.log_abs + e * lx);
  return static_cast<double>(first + pre * second);
}

// ---- Matérn family ------------------------------------------------------

double matern(double a, double nu, double h) {
  check_scale(a);
  if (!std::isfinite(nu) || !(nu > 0.0)) throw InvalidParameters("matern: nu must be > 0");
  check_distance(h);
  if (h == 0.0) return 1.0;
  const double x = h / a;
  const double v = matern_direct(nu, x);
  if (std::isfinite(v)) return v;
  // K_ν(x) overflowed: small x with large ν, where the series form is exact.
  if (near_integer(nu, 1e-6)) throw OverflowError("matern: Bessel K overflow");
  return hole_matern_1f2(nu, 1, 0, x).value;
}

double hole_matern_bessel_sum(double a, double nu, int d, int k, double h) {
  check_scale(a);
  check_dk(d, k);
  if (!std::isfinite(nu) || !(nu > 0.0)) throw InvalidParameters("hole_matern: nu must be > 0");
  check_distance(h);
  if (h == 0.0) return 1.0;
  return hole_matern_sum(nu, d, k, h / a).value;
}

double hole_matern_hypergeometric(double a, double nu, int d, int k, double h) {
  check_scale(a);
  check_dk(d, k);
  if (!std::isfinite(nu) || !(nu > 0.0)) throw InvalidParameters("hole_matern: nu must be > 0");
  if (near_integer(nu, 1e-9)) throw PoleError("hole_matern: the 1F2 form needs non-integer nu");
  check_distance(h);
  if (h == 0.0) return 1.0;
  return hole_matern_1f2(nu, d, k, h / a).value;
}

double hole_matern(double a, double nu, int d, int k, double h) {
  check_scale(a);
  check_dk(d, k);
  if (!std::isfinite(nu) || !(nu > 0.0)) throw InvalidParameters("hole_matern: nu must be > 0");
  check_distance(h);
  if (h == 0.0) return 1.0;
  const double x = h / a;
  // The 1F2 pair cancels roughly like e^{2x} once x exceeds ν; below that,
  // and for small x, it is the accurate route. The Bessel sum covers the rest.
  if (!near_integer(nu, 1e-6) && x <= std::max(25.0, 0.75 * nu)) {
    const HmResult r = hole_matern_1f2(nu, d, k, x);
    if (r.error <= 1e-13) return r.value;
  }
  return hole_matern_sum(nu, d, k, x).value;
}

// ---- Schoenberg, Gaussian, incomplete gamma ----------------------------

double schoenberg(double a, int d, double h) {
  check_scale(a);
  check_dk(d, 0);
  check_distance(h);
  if (h == 0.0) return 1.0;
  const double x = h / a;
  const double hd = 0.5 * d;
  if (x < 2.0) return pfq(PFQParams{{}, {hd}}, -0.25 * x * x);
  const long double l = detail::lgamma_ld(hd, nullptr) + (1.0L - hd) * std::log(0.5L * x);
  return static_cast<double>(std::exp(l)) * bessel_j(hd - 1.0, x);
}

double gaussian(double a, double h) {
  check_scale(a);
  check_distance(h);
  const double x = h / a;
  return std::exp(-x * x);
}

double hole_gaussian(double a, int d, int k, double h) {
  check_scale(a);
  check_dk(d, k);
  check_distance(h);
  if (h == 0.0) return 1.0;
  const double hd = 0.5 * d;
  const double x = h / a;
  const double X = 0.25 * x * x;
  const detail::GammaProduct g = detail::gamma_product({hd, k + 1.0}, {hd + k});
  const double lag = laguerre(static_cast<unsigned>(k), hd - 1.0, X);
  if (lag == 0.0) return 0.0;
  const long double l = g.log_abs - X + std::log(std::fabs(static_cast<long double>(lag)));
  return (lag < 0 ? -1.0 : 1.0) * g.sign * static_cast<double>(std::exp(l));
}

double incomplete_gamma_kernel(double a, double alpha, int d, int k, double h) {
  check_scale(a);
  check_dk(d, k);
  const double hd = 0.5 * d;
  const double s = alpha - hd - k;
  if (!std::isfinite(alpha) || !(s > 0.0)) throw InvalidParameters("incomplete_gamma: alpha must exceed d/2 + k");
  check_distance(h);
  if (h == 0.0) return 1.0;
  const double X = (h / a) * (h / a);
  // 1 − Σ c_n P(s+n, X) rewritten as (1 − Σ c_n) + Σ c_n Q(s+n, X), which
  // stays accurate in the tail where P → 1.
  long double csum = 0.0L, acc = 0.0L;
  long double binom = 1.0L, poch_s = 1.0L;
  const long double dk = pochhammer(hd, static_cast<unsigned>(k));
  for (int n = 0; n <= k; ++n) {
    long double tail = 1.0L;
    for (int i = 0; i < k - n; ++i) tail *= (alpha - k + n + i);
    const long double c = ((n % 2 == 0) ? 1.0L : -1.0L) * binom * tail * poch_s / dk;
    csum += c;
    acc += c * regularized_gamma_upper(s + n, X);
    binom *= static_cast<long double>(k - n) / (n + 1);
    poch_s *= (s + n);
  }
  return static_cast<double>((1.0L - csum) + acc);
}

// ---- Kernel -------------------------------------------------------------

std::string to_string(Family f) {
  switch (f) {
    case Family::Hypergeometric: return "hypergeometric";
    case Family::TruncatedPolynomial: return "truncated-polynomial";
    case Family::Wendland: return "wendland";
    case Family::Matern: return "matern";
    case Family::Schoenberg: return "schoenberg";
    case Family::Gaussian: return "gaussian";
    case Family::IncompleteGamma: return "incomplete-gamma";
  }
  return "unknown";
}

Kernel Kernel::hypergeometric(const HyperParams& theta) {
  const ValidityReport r = validate(theta);
  if (!r.evaluable())
    throw InvalidParameters("hypergeometric kernel: A.1-A.3 must hold");
  return Kernel(Family::Hypergeometric, "hypergeometric", theta);
}

Kernel Kernel::truncated_polynomial(double a, double alpha, int d, int k, int M, int N) {
  const HyperParams t = truncated_polynomial_params(a, alpha, d, k, M, N);
  if (!validate(t).all_pass()) throw InvalidParameters("truncated polynomial kernel: A.1-A.4 must hold");
  return Kernel(Family::TruncatedPolynomial, "truncated-polynomial", t);
}

Kernel Kernel::wendland(const WendlandParams& w) {
  check_wendland(w);
  return Kernel(Family::Wendland, w.xi == 0.0 ? "askey" : "wendland", w);
}

Kernel Kernel::askey(double a, double nu, int d, int k) { return wendland(WendlandParams{a, 0.0, nu, d, k}); }

Kernel Kernel::matern(double a, double nu, int d, int k) {
  check_scale(a);
  check_dk(d, k);
  if (!std::isfinite(nu) || !(nu > 0.0)) throw InvalidParameters("matern: nu must be > 0");
  return Kernel(Family::Matern, k == 0 ? "matern" : "hole-matern", MaternParams{a, nu, d, k});
}

Kernel Kernel::schoenberg(double a, int d) {
  check_scale(a);
  check_dk(d, 0);
  return Kernel(Family::Schoenberg, "schoenberg", SchoenbergParams{a, d});
}

Kernel Kernel::gaussian(double a) {
  check_scale(a);
  return Kernel(Family::Gaussian, "gaussian", GaussianParams{a, 1, 0, false});
}

Kernel Kernel::hole_gaussian(double a, int d, int k) {
  check_scale(a);
  check_dk(d, k);
  return Kernel(Family::Gaussian, "hole-gaussian", GaussianParams{a, d, k, true});
}

Kernel Kernel::incomplete_gamma(double a, double alpha, int d, int k) {
  check_scale(a);
  check_dk(d, k);
  if (!(alpha > 0.5 * d + k)) throw InvalidParameters("incomplete_gamma: alpha must exceed d/2 + k");
  return Kernel(Family::IncompleteGamma, "incomplete-gamma", IncompleteGammaParams{a, alpha, d, k});
}

Kernel Kernel::classical(std::string name, const HyperParams& theta) {
  if (!validate(theta).evaluable()) throw InvalidParameters(name + " kernel: A.1-A.3 must hold");
  return Kernel(Family::Hypergeometric, std::move(name), theta);
}

Kernel Kernel::triangular(double a) { return classical("triangular", {a, 1.0, 1.5, 2.0, 1, 0}); }
Kernel Kernel::circular(double a) { return classical("circular", {a, 1.5, 2.0, 3.0, 2, 0}); }
Kernel Kernel::spherical(double a) { return classical("spherical", {a, 2.0, 2.5, 4.0, 3, 0}); }
Kernel Kernel::pentaspherical(double a) { return classical("pentaspherical", {a, 3.0, 3.5, 6.0, 5, 0}); }
Kernel Kernel::cubic(double a) { return classical("cubic", {a, 3.0, 3.5, 6.0, 3, 0}); }
Kernel Kernel::penta(double a) { return classical("penta", {a, 4.0, 4.5, 8.0, 3, 0}); }
Kernel Kernel::quadratic(double a) { return classical("quadratic", {a, 2.0, 3.0, 3.5, 3, 0}); }

Kernel Kernel::euclid_hat(double a, int d) {
  const double al = 0.5 * (d + 1);
  return classical("euclid-hat", {a, al, al + 0.5, 2.0 * al, d, 0});
}

Kernel Kernel::upgraded_euclid_hat(double a, double alpha, int d) {
  return classical("upgraded-euclid-hat", {a, alpha, alpha + 0.5, 2.0 * alpha, d, 0});
}

double Kernel::operator()(double h) const {
  switch (family_) {
    case Family::Hypergeometric: return evaluate(std::get<HyperParams>(params_), h);
    case Family::TruncatedPolynomial: return nk::truncated_polynomial(std::get<HyperParams>(params_), h);
    case Family::Wendland: return hole_wendland(std::get<WendlandParams>(params_), h);
    case Family::Matern: {
      const auto& p = std::get<MaternParams>(params_);
      return p.k == 0 ? nk::matern(p.a, p.nu, h) : hole_matern(p.a, p.nu, p.d, p.k, h);
    }
    case Family::Schoenberg: {
      const auto& p = std::get<SchoenbergParams>(params_);
      return nk::schoenberg(p.a, p.d, h);
    }
    case Family::Gaussian: {
      const auto& p = std::get<GaussianParams>(params_);
      return p.hole ? nk::hole_gaussian(p.a, p.d, p.k, h) : nk::gaussian(p.a, h);
    }
    case Family::IncompleteGamma: {
      const auto& p = std::get<IncompleteGammaParams>(params_);
      return incomplete_gamma_kernel(p.a, p.alpha, p.d, p.k, h);
    }
  }
  return 0.0;
}

double Kernel::support() const {
  switch (family_) {
    case Family::Hypergeometric:
    case Family::TruncatedPolynomial: return std::get<HyperParams>(params_).a;
    case Family::Wendland: return std::get<WendlandParams>(params_).a;
    default: return kInf;
  }
}

std::optional<int> Kernel::dimension() const {
  return std::visit(
      [](const auto& p) -> std::optional<int> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, MaternParams>) {
          if (p.k == 0) return std::nullopt;
          return p.d;
        } else if constexpr (std::is_same_v<T, GaussianParams>) {
          if (!p.hole) return std::nullopt;
          return p.d;
        } else {
          return p.d;
        }
      },
      params_);
}

int Kernel::hole_order() const {
  return std::visit(
      [](const auto& p) -> int {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SchoenbergParams>) return 0;
        else return p.k;
      },
      params_);
}

std::optional<HyperParams> Kernel::hyper_params() const {
  if (const auto* t = std::get_if<HyperParams>(&params_)) return *t;
  if (const auto* w = std::get_if<WendlandParams>(&params_)) return wendland_to_hyper(*w);
  return std::nullopt;
}

}  // namespace nk
