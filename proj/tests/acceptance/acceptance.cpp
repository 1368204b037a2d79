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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are fixed here and never relaxed to make a
// run pass.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "nk/analysis.hpp"
#include "nk/covmat.hpp"
#include "nk/families.hpp"
#include "nk/format.hpp"
#include "nk/hyperkernel.hpp"
#include "nk/limits.hpp"
#include "nk/spectral.hpp"

namespace {

using nk::HyperParams;
using nk::Kernel;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool report(const char* id, const char* title, const std::function<Outcome()>& body, double time_limit_s) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > time_limit_s) {
    o.pass = false;
    o.detail += "; runtime limit " + sci(time_limit_s) + " s exceeded";
  }
  std::printf("%s %s %s: %s (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
  std::fflush(stdout);
  return o.pass;
}

// ---- AC1 -------------------------------------------------------------------

Outcome special_cases() {
  constexpr double kPi = std::numbers::pi;
  struct Row {
    const char* name;
    Kernel kernel;
    std::function<double(double)> closed;
  };
  const std::vector<Row> rows = {
      {"triangular", Kernel::triangular(1.0), [](double x) { return 1 - x; }},
      {"circular", Kernel::circular(1.0),
       [&](double x) { return 2 / kPi * (std::acos(x) - x * std::sqrt(1 - x * x)); }},
      {"spherical", Kernel::spherical(1.0), [](double x) { return 1 - 1.5 * x + 0.5 * x * x * x; }},
      {"pentaspherical", Kernel::pentaspherical(1.0),
       [](double x) { return 1 - 15. / 8 * x + 5. / 4 * std::pow(x, 3) - 3. / 8 * std::pow(x, 5); }},
      {"cubic", Kernel::cubic(1.0),
       [](double x) { return 1 - 7 * x * x + 35. / 4 * std::pow(x, 3) - 3.5 * std::pow(x, 5) + 0.75 * std::pow(x, 7); }},
      {"penta", Kernel::penta(1.0),
       [](double x) {
         return 1 - 22. / 3 * x * x + 33 * std::pow(x, 4) - 77. / 2 * std::pow(x, 5) + 33. / 2 * std::pow(x, 7) -
                11. / 2 * std::pow(x, 9) + 5. / 6 * std::pow(x, 11);
       }},
      {"askey", Kernel::askey(1.0, 6.0, 2), [](double x) { return std::pow(1 - x, 6); }},
      {"wendland", Kernel::wendland({1.0, 1.0, 6.0, 2, 0}), [](double x) { return std::pow(1 - x, 7) * (1 + 7 * x); }},
  };
  double worst = 0.0;
  std::string worst_name;
  for (const auto& r : rows) {
    const HyperParams t = *r.kernel.hyper_params();
    for (int i = 0; i < 200; ++i) {
      const double h = i / 199.0;
      const double want = h >= 1.0 ? 0.0 : r.closed(h);
      const double err = std::fabs(nk::evaluate(t, h) - want);
      if (err > worst) {
        worst = err;
        worst_name = r.name;
      }
    }
  }
  return {worst <= 1e-9, "8 rows x 200 points, sup error " + sci(worst) + " (" + worst_name + "), limit 1e-9"};
}

// ---- AC2 -------------------------------------------------------------------

const std::array<HyperParams, 6> kSpectralThetas = {{{1.0, 3.5, 7.0, 5.0, 2, 1},
                                                     {1.0, 4.5, 9.0, 8.0, 2, 2},
                                                     {2.0, 1.7, 3.1, 4.2, 1, 0},
                                                     {1.5, 3.3, 6.0, 7.0, 3, 1},
                                                     {1.0, 2.75, 5.5, 6.25, 2, 0},
                                                     {1.0, 4.2, 9.0, 10.0, 3, 2}}};

Outcome spectral_consistency() {
  double worst = 0.0;
  for (const auto& t : kSpectralThetas) {
    const Kernel k = Kernel::hypergeometric(t);
    for (int i = 0; i < 25; ++i) {
      const double u = 0.1 * std::pow(200.0, i / 24.0);
      const double want = nk::spectral_density(t, u);
      const double got = nk::hankel_forward(k, t.d, u).value;
      worst = std::max(worst, std::fabs(got - want) / std::fabs(want));
    }
  }
  return {worst <= 1e-6, "6 theta x 25 frequencies in [0.1, 20], max relative error " + sci(worst) + ", limit 1e-6"};
}

// ---- AC3 -------------------------------------------------------------------

Outcome turning_bands_identity() {
  const std::array<HyperParams, 4> targets = {{{1.0, 3.5, 7.0, 5.0, 2, 1},
                                              {1.5, 3.3, 6.0, 7.0, 1, 1},
                                              {1.0, 4.5, 9.0, 8.0, 2, 2},
                                              {1.0, 4.2, 9.0, 10.0, 1, 2}}};
  double worst = 0.0, worst_fd = 0.0;
  for (const auto& target : targets) {
    HyperParams source = target;
    source.d = target.d + 2 * target.k;
    source.k = 0;
    auto c = [&](double h) { return nk::evaluate(source, h); };
    auto dc = [&](double h, int m) { return m == 0 ? c(h) : nk::evaluate_derivative(source, h, m); };
    for (int i = 1; i < 40; ++i) {
      const double h = target.a * i / 40.0;
      const double want = nk::evaluate(target, h);
      worst = std::max(worst, std::fabs(nk::turning_bands(c, target.d, target.k, h, dc).value - want));
      worst_fd = std::max(worst_fd, std::fabs(nk::turning_bands(c, target.d, target.k, h).value - want));
    }
  }
  return {worst <= 1e-6, "k=1,2 two theta each on 39 points of (0,a): sup error " + sci(worst) +
                             " with exact derivatives, " + sci(worst_fd) + " with finite differences, limit 1e-6"};
}

// ---- AC4 -------------------------------------------------------------------

Outcome positive_definiteness() {
  const std::vector<Kernel> kernels = {
      Kernel::spherical(0.6),
      Kernel::pentaspherical(0.8),
      Kernel::askey(0.7, 6.0, 2),
      Kernel::wendland({0.9, 1.0, 6.0, 2, 2}),
      Kernel::hypergeometric({0.8, 3.5, 7.0, 5.0, 2, 1}),
      Kernel::matern(0.3, 2.5, 2, 2),
      Kernel::hole_gaussian(0.3, 2, 1),
      Kernel::incomplete_gamma(0.4, 2.5, 2, 1),
  };
  int failures = 0;
  double worst_ratio = -1e300;  // min eigenvalue relative to its tolerance
  std::string worst_name;
  for (const auto& k : kernels) {
    const int d = k.dimension().value_or(2);
    for (int s = 0; s < 50; ++s) {
      const auto pts = nk::PointSet::uniform(100, d, 0.0, 2.0, 1000 + s);
      const nk::PdCheck pd = nk::pd_check(nk::build(k, pts));
      if (!pd.is_pd) ++failures;
      const double ratio = -pd.min_eigenvalue / pd.tolerance;
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst_name = k.name();
      }
    }
  }
  // Lower bound −1/d on fine evaluation grids.
  double bound_violation = 0.0;
  for (const auto& k : kernels) {
    const int d = k.dimension().value_or(2);
    const double reach = k.compact() ? k.support() : 20.0;
    for (int i = 0; i <= 4000; ++i) {
      const double v = k(reach * i / 4000.0);
      bound_violation = std::max(bound_violation, -1.0 / d - v);
    }
  }
  const bool pass = failures == 0 && bound_violation <= 1e-9;
  return {pass, std::to_string(kernels.size()) + " families x 50 sets of 100 points: " + std::to_string(failures) +
                    " failures (closest: " + worst_name + ", -min_eig/tol = " + sci(worst_ratio) +
                    "); lower bound -1/d exceeded by at most " + sci(std::max(0.0, bound_violation)) +
                    " (limit 1e-9)"};
}

// ---- AC5 -------------------------------------------------------------------

Outcome limit_propositions() {
  std::ostringstream msg;
  bool pass = true;
  int n = 0;
  std::vector<double> wm_errors, hm_errors, hms_errors;
  for (const auto& e : nk::builtin_experiments()) {
    const nk::ConvergenceResult r = nk::run_limit(e);
    ++n;
    bool nonincreasing = true;
    for (std::size_t i = 1; i < r.errors.size(); ++i) nonincreasing = nonincreasing && r.errors[i] <= r.errors[i - 1];
    const bool ok = nonincreasing && r.final_error <= 0.02;
    if (!ok) {
      pass = false;
      msg << " [" << r.id << " final " << sci(r.final_error) << (nonincreasing ? "" : " not monotone") << "]";
    }
    if (r.id == "wendland-matern") wm_errors = r.errors;
    if (r.id == "wendland-hole-matern") hm_errors = r.errors;
    if (r.id == "hole-matern-schoenberg") hms_errors = r.errors;
  }
  // Schedules start at μ = 10, 50 and k = 5, 10, 25, 100.
  const bool mu_order = wm_errors.size() >= 2 && wm_errors[1] < wm_errors[0] && hm_errors[1] < hm_errors[0];
  const bool k_order = hms_errors.size() == 4 && hms_errors[3] < hms_errors[0];
  pass = pass && mu_order && k_order;
  std::string d = std::to_string(n) + " experiments nonincreasing with final error <= 0.02";
  d += msg.str().empty() ? "" : ", failing:" + msg.str();
  d += std::string("; error(mu=50) < error(mu=10): ") + (mu_order ? "yes" : "no");
  d += std::string("; error(k=100) < error(k=5): ") + (k_order ? "yes" : "no");
  return {pass, d};
}

// ---- AC6 -------------------------------------------------------------------

Outcome smoothness_trichotomy() {
  const std::array<HyperParams, 10> thetas = {{
      {1.0, 1.2, 3.1, 4.2, 2, 0},     // e = 0.4
      {1.0, 0.8, 2.0, 3.0, 1, 0},     // e = 0.6
      {1.0, 2.0, 2.5, 4.0, 3, 0},     // spherical, e = 1
      {2.0, 2.0, 2.5, 4.0, 3, 0},     // spherical at a = 2
      {1.0, 3.0, 3.5, 6.0, 5, 0},     // pentaspherical, e = 1
      {1.0, 1.7, 3.1, 4.2, 2, 0},     // e = 1.4
      {1.0, 2.3, 5.0, 6.0, 3, 0},     // e = 1.6
      {1.0, 3.5, 7.0, 5.0, 2, 1},     // e = 3
      {1.0, 2.75, 5.5, 6.25, 2, 0},   // e = 3.5
      {1.0, 4.2, 9.0, 10.0, 3, 2},    // e = 1.4 with k = 2
  }};
  int mismatches = 0;
  bool seen_first[3] = {false, false, false};
  bool seen_finite = false, seen_infinite = false;
  std::ostringstream bad;
  double spherical_rel = 0.0;
  for (const auto& t : thetas) {
    const nk::SmoothnessReport r = nk::smoothness_report(t);
    auto C = [&](double h) { return nk::evaluate(t, h); };
    auto slope = [&](double h) { return (C(h * t.a) - 1.0) / (h * t.a); };
    bool ok = true;
    switch (r.origin_first_kind) {
      case nk::FirstDerivativeKind::Zero: {
        seen_first[0] = true;
        const double s3 = std::fabs(slope(1e-3)), s5 = std::fabs(slope(1e-5));
        ok = s5 < 0.5 * s3;
        break;
      }
      case nk::FirstDerivativeKind::FiniteNegative: {
        seen_first[1] = true;
        const double s = slope(1e-7);
        ok = r.origin_first_derivative < 0 &&
             std::fabs(s - r.origin_first_derivative) <= 1e-4 * std::fabs(r.origin_first_derivative);
        break;
      }
      case nk::FirstDerivativeKind::NegativeInfinity: {
        seen_first[2] = true;
        const double s3 = slope(1e-3), s5 = slope(1e-5);
        ok = s3 < 0 && s5 < 2.0 * s3;
        break;
      }
    }
    // Second-order difference quotient after removing the linear term.
    if (r.origin_first_kind != nk::FirstDerivativeKind::NegativeInfinity) {
      const double d1 = r.origin_first_kind == nk::FirstDerivativeKind::FiniteNegative ? r.origin_first_derivative : 0.0;
      auto q = [&](double h) {
        const double x = h * t.a;
        return 2.0 * (C(x) - 1.0 - d1 * x) / (x * x);
      };
      if (r.origin_second_kind == nk::SecondDerivativeKind::Finite) {
        seen_finite = true;
        ok = ok && std::fabs(q(1e-4) - r.origin_second_derivative) <= 1e-2 * std::max(1.0, std::fabs(r.origin_second_derivative));
      } else {
        seen_infinite = true;
        const double sign = r.origin_second_kind == nk::SecondDerivativeKind::PositiveInfinity ? 1.0 : -1.0;
        ok = ok && sign * q(1e-2) > 0 && sign * q(1e-5) > 2.0 * sign * q(1e-2);
      }
    }
    if (!ok) {
      ++mismatches;
      bad << " (" << t.alpha << "," << t.beta << "," << t.gamma << "," << t.d << "," << t.k << ")";
    }
    if (t.alpha == 2.0 && t.beta == 2.5 && t.d == 3)
      spherical_rel = std::max(spherical_rel, std::fabs(r.origin_first_derivative - (-1.5 / t.a)) / (1.5 / t.a));
  }
  const bool coverage = seen_first[0] && seen_first[1] && seen_first[2] && seen_finite && seen_infinite;
  const bool pass = mismatches == 0 && coverage && spherical_rel <= 1e-4;
  std::string d = std::to_string(thetas.size()) + " theta, " + std::to_string(mismatches) +
                  " classification mismatches" + bad.str() + "; all cases covered: " + (coverage ? "yes" : "no") +
                  "; spherical slope relative error " + sci(spherical_rel) + " (limit 1e-4)";
  return {pass, d};
}

// ---- AC7 -------------------------------------------------------------------

Outcome tail_exponents() {
  struct Row {
    const char* name;
    HyperParams theta;
  };
  const std::vector<Row> rows = {
      {"triangular", *Kernel::triangular(1.0).hyper_params()},
      {"circular", *Kernel::circular(1.0).hyper_params()},
      {"spherical", *Kernel::spherical(1.0).hyper_params()},
      {"pentaspherical", *Kernel::pentaspherical(1.0).hyper_params()},
      {"cubic", *Kernel::cubic(1.0).hyper_params()},
      {"penta", *Kernel::penta(1.0).hyper_params()},
      {"askey", *Kernel::askey(1.0, 6.0, 2).hyper_params()},
      {"wendland", *Kernel::wendland({1.0, 1.0, 6.0, 2, 0}).hyper_params()},
      {"hole-wendland", *Kernel::wendland({1.0, 1.0, 6.0, 2, 1}).hyper_params()},
      {"hypergeometric-k2", {1.0, 4.5, 9.0, 8.0, 2, 2}},
  };
  double worst = 0.0;
  std::ostringstream bad;
  for (const auto& r : rows) {
    const nk::TailFit f = nk::tail_fit(r.theta, 100.0 / r.theta.a, 1000.0 / r.theta.a, 40);
    const double dev = std::fabs(f.exponent_estimate - (2.0 * r.theta.k - 2.0 * r.theta.alpha));
    worst = std::max(worst, dev);
    if (dev > 0.1) bad << " " << r.name << "(" << sci(f.exponent_estimate) << ")";
  }
  std::string d = std::to_string(rows.size()) + " kernels, window a*u in [100, 1000]: max |fit - (2k-2alpha)| = " +
                  sci(worst) + ", limit 0.1";
  if (!bad.str().empty()) d += "; outside:" + bad.str();
  return {worst <= 0.1, d};
}

// ---- AC8 -------------------------------------------------------------------

Outcome hole_counts() {
  std::ostringstream bad;
  int checked = 0;
  for (int k = 1; k <= 3; ++k) {
    for (const Kernel& kern : {Kernel::askey(1.0, 6.0, 2, k), Kernel::wendland({1.0, 1.0, 7.0, 2, k})}) {
      const nk::HoleDiagnostics h = nk::hole_diagnostics(kern, 4000);
      ++checked;
      if (h.sign_changes < k) bad << " " << kern.name() << "(k=" << k << ": " << h.sign_changes << ")";
    }
  }
  for (const Kernel& kern : {Kernel::askey(1.0, 6.0, 2), Kernel::wendland({1.0, 1.0, 6.0, 2, 0}),
                             Kernel::spherical(1.0), Kernel::hypergeometric({1.0, 2.75, 5.5, 6.25, 2, 0})}) {
    const nk::HoleDiagnostics h = nk::hole_diagnostics(kern, 4000);
    ++checked;
    if (h.min_value < -1e-12 || !h.nonincreasing) bad << " " << kern.name() << "(k=0 not monotone/nonnegative)";
  }
  const bool pass = bad.str().empty();
  return {pass, std::to_string(checked) + " kernels scanned" + (pass ? ", all as expected" : ", failing:" + bad.str())};
}

// ---- AC9 -------------------------------------------------------------------

std::string run_cli(const std::string& args, const char* threads) {
  ::setenv("NATIVE_KERNELS_THREADS", threads, 1);
  const std::string cmd = std::string(NK_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int rc = ::pclose(p);
  ::unsetenv("NATIVE_KERNELS_THREADS");
  return out + "\n[exit " + std::to_string(rc) + "]";
}

Outcome determinism() {
  const std::vector<std::string> commands = {
      "eval --family matern --nu 2.5 --d 2 --k 2 --grid 0:6:3001",
      "eval --alpha 3.5 --beta 7 --gamma 5 --d 2 --k 1 --grid 0:1:2001 --format jsonl",
      "spectrum --family wendland --xi 1 --nu 6 --d 2 --k 1 --grid 0:30:301",
      "limits --experiment wendland-matern",
      "covmat --family spherical --random 300 --dim 3 --seed 9",
  };
  int differing = 0;
  std::size_t bytes = 0;
  for (const auto& c : commands) {
    const std::string a = run_cli(c, "1");
    const std::string b = run_cli(c, "4");
    const std::string again = run_cli(c, "4");
    bytes += a.size();
    if (a != b || b != again) ++differing;
  }
  return {differing == 0, std::to_string(commands.size()) + " commands run with 1, 4 and 4 workers (" +
                              std::to_string(bytes) + " bytes each): " + std::to_string(differing) + " differ"};
}

}  // namespace

int main() {
  int failed = 0;
  failed += !report("AC1", "special-case equivalence", special_cases, 10);
  failed += !report("AC2", "spectral consistency", spectral_consistency, 60);
  failed += !report("AC3", "turning-bands identity", turning_bands_identity, 600);
  failed += !report("AC4", "positive definiteness", positive_definiteness, 600);
  failed += !report("AC5", "limit experiments", limit_propositions, 300);
  failed += !report("AC6", "smoothness trichotomy", smoothness_trichotomy, 600);
  failed += !report("AC7", "tail exponent", tail_exponents, 600);
  failed += !report("AC8", "hole-effect counts", hole_counts, 600);
  failed += !report("AC9", "determinism", determinism, 600);
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
