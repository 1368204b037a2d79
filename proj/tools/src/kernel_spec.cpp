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

#include "kernel_spec.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>

#include "nk/limits.hpp"

namespace nkcli {

namespace {

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError("family '" + family + "' needs --" + std::string(flag));
  return *v;
}

using Builder = std::function<nk::Kernel(const KernelSpec&)>;

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"hypergeometric", [](const KernelSpec& s) { return nk::Kernel::hypergeometric(hyper_params(s)); }},
      {"truncated-polynomial",
       [](const KernelSpec& s) {
         return nk::Kernel::truncated_polynomial(s.a.value_or(1.0), need(s.alpha, "alpha", s.family), s.dim(),
                                                 s.k.value_or(0), need(s.M, "M", s.family), need(s.N, "N", s.family));
       }},
      {"wendland",
       [](const KernelSpec& s) {
         return nk::Kernel::wendland(
             {s.a.value_or(1.0), s.xi.value_or(0.0), need(s.nu, "nu", s.family), s.dim(), s.k.value_or(0)});
       }},
      {"askey",
       [](const KernelSpec& s) {
         return nk::Kernel::askey(s.a.value_or(1.0), need(s.nu, "nu", s.family), s.dim(), s.k.value_or(0));
       }},
      {"matern",
       [](const KernelSpec& s) {
         return nk::Kernel::matern(s.a.value_or(1.0), need(s.nu, "nu", s.family), s.dim(), s.k.value_or(0));
       }},
      {"schoenberg", [](const KernelSpec& s) { return nk::Kernel::schoenberg(s.a.value_or(1.0), s.dim()); }},
      {"gaussian", [](const KernelSpec& s) { return nk::Kernel::gaussian(s.a.value_or(1.0)); }},
      {"hole-gaussian",
       [](const KernelSpec& s) { return nk::Kernel::hole_gaussian(s.a.value_or(1.0), s.dim(), s.k.value_or(0)); }},
      {"incomplete-gamma",
       [](const KernelSpec& s) {
         return nk::Kernel::incomplete_gamma(s.a.value_or(1.0), need(s.alpha, "alpha", s.family), s.dim(),
                                             s.k.value_or(0));
       }},
      {"triangular", [](const KernelSpec& s) { return nk::Kernel::triangular(s.a.value_or(1.0)); }},
      {"circular", [](const KernelSpec& s) { return nk::Kernel::circular(s.a.value_or(1.0)); }},
      {"spherical", [](const KernelSpec& s) { return nk::Kernel::spherical(s.a.value_or(1.0)); }},
      {"pentaspherical", [](const KernelSpec& s) { return nk::Kernel::pentaspherical(s.a.value_or(1.0)); }},
      {"cubic", [](const KernelSpec& s) { return nk::Kernel::cubic(s.a.value_or(1.0)); }},
      {"penta", [](const KernelSpec& s) { return nk::Kernel::penta(s.a.value_or(1.0)); }},
      {"quadratic", [](const KernelSpec& s) { return nk::Kernel::quadratic(s.a.value_or(1.0)); }},
      {"euclid-hat", [](const KernelSpec& s) { return nk::Kernel::euclid_hat(s.a.value_or(1.0), s.dim()); }},
      {"upgraded-euclid-hat",
       [](const KernelSpec& s) {
         return nk::Kernel::upgraded_euclid_hat(s.a.value_or(1.0), need(s.alpha, "alpha", s.family), s.dim());
       }},
  };
  return table;
}

double parse_number(const std::string& s, const char* what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw UsageError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : builders()) v.push_back(name);
    return v;
  }();
  return names;
}

nk::HyperParams hyper_params(const KernelSpec& s) {
  return {s.a.value_or(1.0), need(s.alpha, "alpha", s.family), need(s.beta, "beta", s.family),
          need(s.gamma, "gamma", s.family), s.dim(), s.k.value_or(0)};
}

nk::Kernel make_kernel(const KernelSpec& spec) {
  const auto it = builders().find(spec.family);
  if (it == builders().end()) throw UsageError("unknown family '" + spec.family + "'");
  return it->second(spec);
}

std::vector<double> GridSpec::points() const { return nk::uniform_grid(start, stop, count); }

GridSpec parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("grid must read start:stop:count, got '" + text + "'");
  GridSpec g;
  g.start = parse_number(text.substr(0, c1), "grid start");
  g.stop = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "grid stop");
  const double count = parse_number(text.substr(c2 + 1), "grid count");
  if (count != std::floor(count) || count < 2 || count > 1e8) throw UsageError("grid count must be an integer >= 2");
  g.count = static_cast<int>(count);
  if (!std::isfinite(g.start) || !std::isfinite(g.stop) || g.start < 0.0 || g.stop < g.start)
    throw UsageError("grid needs 0 <= start <= stop");
  return g;
}

}  // namespace nkcli
