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

#include <mpfr.h>

#include <cmath>

#include "nk/detail/series.hpp"
#include "nk/errors.hpp"

namespace nk::detail {

namespace {

constexpr mpfr_prec_t kBits = 192;

class Mp {
 public:
  Mp() { mpfr_init2(v_, kBits); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

void set_sum(mpfr_ptr out, const ArgParts& parts) {
  mpfr_set_zero(out, 1);
  for (double p : parts) mpfr_add_d(out, out, p, MPFR_RNDN);
}

struct Cache {
  std::vector<ArgParts> num, den;
  Mp log_abs;
  int sign = 1;
  bool valid = false;
};

Cache& cache() {
  thread_local Cache c;
  return c;
}

void fill_cache(Cache& c, const std::vector<ArgParts>& num, const std::vector<ArgParts>& den) {
  Mp arg, lg;
  mpfr_set_zero(c.log_abs.get(), 1);
  c.sign = 1;
  for (int pass = 0; pass < 2; ++pass) {
    for (const ArgParts& a : pass == 0 ? num : den) {
      set_sum(arg.get(), a);
      if (mpfr_integer_p(arg.get()) && mpfr_sgn(arg.get()) <= 0) {
        if (pass == 0) throw PoleError("gamma product: numerator pole");
        c.valid = false;
        c.sign = 0;
        return;
      }
      int s = 1;
      mpfr_lgamma(lg.get(), &s, arg.get(), MPFR_RNDN);
      if (pass == 0) mpfr_add(c.log_abs.get(), c.log_abs.get(), lg.get(), MPFR_RNDN);
      else mpfr_sub(c.log_abs.get(), c.log_abs.get(), lg.get(), MPFR_RNDN);
      c.sign *= s;
    }
  }
  c.num = num;
  c.den = den;
  c.valid = true;
}

}  // namespace

DD precise_gamma_power(const std::vector<ArgParts>& num, const std::vector<ArgParts>& den,
                       const ArgParts& exponent, DD x) {
  Cache& c = cache();
  if (!c.valid || c.num != num || c.den != den) {
    fill_cache(c, num, den);
    if (c.sign == 0) return DD(0.0);
  }
  Mp lx, e, r;
  mpfr_set_d(lx.get(), x.hi, MPFR_RNDN);
  mpfr_add_d(lx.get(), lx.get(), x.lo, MPFR_RNDN);
  mpfr_log(lx.get(), lx.get(), MPFR_RNDN);
  set_sum(e.get(), exponent);
  mpfr_mul(r.get(), e.get(), lx.get(), MPFR_RNDN);
  mpfr_add(r.get(), r.get(), c.log_abs.get(), MPFR_RNDN);
  mpfr_exp(r.get(), r.get(), MPFR_RNDN);
  const double hi = mpfr_get_d(r.get(), MPFR_RNDN);
  if (!std::isfinite(hi)) throw OverflowError("gamma power prefactor overflows");
  mpfr_sub_d(r.get(), r.get(), hi, MPFR_RNDN);
  const double lo = mpfr_get_d(r.get(), MPFR_RNDN);
  return c.sign < 0 ? DD(-hi, -lo) : DD(hi, lo);
}

}  // namespace nk::detail
