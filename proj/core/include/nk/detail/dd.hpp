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

// Double-double ("dd") arithmetic: an unevaluated sum hi + lo of two doubles
// carrying roughly 106 significant bits. Only what the series engine and the
// kernel assembly need is provided. Everything is built from the error-free
// transformations TwoSum and TwoProd, so it must be compiled without
// floating-point contraction (see core/CMakeLists.txt).

#include <cmath>

namespace nk::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}  // NOLINT(google-explicit-constructor)
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  [[nodiscard]] double to_double() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
#if defined(__FMA__) || defined(__FP_FAST_FMA)
  return {p, std::fma(a, b, -p)};
#else
  // Dekker's splitting; exact for |a|,|b| well inside the double range.
  constexpr double split = 134217729.0;  // 2^27 + 1
  double t = split * a;
  const double ahi = t - (t - a);
  const double alo = a - ahi;
  t = split * b;
  const double bhi = t - (t - b);
  const double blo = b - bhi;
  const double err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
  return {p, err};
#endif
}

inline DD operator+(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
  const double q1 = a.hi / b.hi;
  DD r = a - b * DD(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * DD(q2);
  const double q3 = r.hi / b.hi;
  DD q = quick_two_sum(q1, q2);
  return q + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { return a = a + b; }
inline DD& operator-=(DD& a, DD b) { return a = a - b; }
inline DD& operator*=(DD& a, DD b) { return a = a * b; }
inline DD& operator/=(DD& a, DD b) { return a = a / b; }

inline DD abs(DD a) { return a.hi < 0.0 ? -a : a; }
inline bool is_zero(DD a) { return a.hi == 0.0 && a.lo == 0.0; }

// Converts an extended-precision value, keeping the bits that fit in hi+lo.
inline DD from_long_double(long double v) {
  const double h = static_cast<double>(v);
  if (!std::isfinite(h)) return {h, 0.0};
  return {h, static_cast<double>(v - static_cast<long double>(h))};
}

inline DD sqr(DD a) { return a * a; }

}  // namespace nk::detail
