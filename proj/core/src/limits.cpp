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

#include "nk/limits.hpp"

#include <algorithm>
#include <cmath>

#include "nk/errors.hpp"
#include "nk/parallel.hpp"

namespace nk {

namespace {

constexpr int kBoundedPoints = 512;
constexpr int kFullRayPoints = 2048;

// The Wendland → Matérn experiments run at ν = 1.5 in the plane.
constexpr double kNu = 1.5;
constexpr int kDim = 2;

std::vector<double> bounded_grid(double a) { return uniform_grid(0.0, 3.0 * a, kBoundedPoints); }
std::vector<double> full_ray_grid(double a) { return uniform_grid(0.0, 10.0 * a, kFullRayPoints); }

LimitExperiment wendland_to_matern(int k) {
  LimitExperiment e{
      k == 0 ? "wendland-matern" : "wendland-hole-matern",
      "generalized Wendland (a=mu, xi=nu-1/2, nu=mu) -> Matern (nu=1.5, d=2, k=" + std::to_string(k) + ")",
      "wendland",
      k == 0 ? "matern" : "hole-matern",
      "mu",
      {10.0, 50.0, 250.0, 1250.0},
      [k](double mu) { return Kernel::wendland({mu, kNu - 0.5, mu, kDim, k}); },
      Kernel::matern(1.0, kNu, kDim, k),
      full_ray_grid(1.0),
      UniformityDomain::FullRay};
  return e;
}

LimitExperiment wendland_to_gaussian(const std::string& id, const std::vector<double>& nus, bool coupled) {
  return LimitExperiment{
      id,
      coupled ? "generalized Wendland (a=mu/sqrt(4 nu), xi=nu-1/2, nu=mu), mu=nu^3 -> Gaussian"
              : "decoupled control: mu=2 nu",
      "wendland",
      "gaussian",
      "nu",
      nus,
      [coupled](double nu) {
        const double mu = coupled ? nu * nu * nu : 2.0 * nu;
        return Kernel::wendland({mu / std::sqrt(4.0 * nu), nu - 0.5, mu, kDim, 0});
      },
      Kernel::gaussian(1.0),
      uniform_grid(0.0, 5.0, kFullRayPoints),
      UniformityDomain::FullRay};
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2) throw DomainError("uniform_grid: need at least two points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.back() = hi;
  return g;
}

ConvergenceResult run_limit(const LimitExperiment& e, int threads) {
  for (std::size_t i = 1; i < e.schedule.size(); ++i)
    if (!(e.schedule[i] > e.schedule[i - 1])) throw DomainError(e.id + ": schedule must be strictly increasing");

  ConvergenceResult out;
  out.id = e.id;
  out.rates = e.schedule;

  std::vector<double> target(e.grid.size());
  parallel_for(
      e.grid.size(),
      [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) target[i] = e.target(e.grid[i]);
      },
      threads);

  for (double rate : e.schedule) {
    const Kernel src = [&] {
      try {
        return e.source(rate);
      } catch (const std::exception& ex) {
        throw Error(e.id + " at " + e.rate_name + "=" + std::to_string(rate) + ": " + ex.what());
      }
    }();
    std::vector<double> err(e.grid.size());
    parallel_for(
        e.grid.size(),
        [&](std::size_t lo, std::size_t hi) {
          for (std::size_t i = lo; i < hi; ++i) {
            try {
              err[i] = std::fabs(src(e.grid[i]) - target[i]);
            } catch (const std::exception& ex) {
              throw Error(e.id + " at " + e.rate_name + "=" + std::to_string(rate) +
                          ", h=" + std::to_string(e.grid[i]) + ": " + ex.what());
            }
          }
        },
        threads);
    double sup = 0.0;
    for (double v : err) {
      if (!std::isfinite(v)) throw Error(e.id + ": non-finite error at " + e.rate_name + "=" + std::to_string(rate));
      sup = std::max(sup, v);
    }
    out.errors.push_back(sup);
  }
  for (std::size_t i = 1; i < out.errors.size(); ++i)
    if (out.errors[i] > 1.05 * out.errors[i - 1]) out.monotone_pass = false;
  out.final_error = out.errors.empty() ? 0.0 : out.errors.back();
  return out;
}

std::vector<LimitExperiment> builtin_experiments() {
  std::vector<LimitExperiment> v;
  v.push_back(wendland_to_matern(0));
  v.push_back(wendland_to_matern(2));

  v.push_back(LimitExperiment{"hole-wendland-schoenberg",
                              "hole Wendland (a=mu, xi=k, nu=mu, k), mu=k^2 -> Schoenberg (d=2)",
                              "wendland",
                              "schoenberg",
                              "k",
                              // The error decays like k/μ = 1/k under μ = k², hence the long schedule.
                              {10.0, 20.0, 40.0, 80.0, 160.0},
                              [](double k) {
                                const double mu = k * k;
                                return Kernel::wendland({mu, k, mu, kDim, static_cast<int>(k)});
                              },
                              Kernel::schoenberg(1.0, kDim),
                              bounded_grid(1.0),
                              UniformityDomain::BoundedInterval});

  v.push_back(LimitExperiment{"hole-matern-schoenberg",
                              "hole Matern (nu=k+1/2, k) -> Schoenberg (d=2)",
                              "hole-matern",
                              "schoenberg",
                              "k",
                              {5.0, 10.0, 25.0, 100.0},
                              [](double k) { return Kernel::matern(1.0, k + 0.5, kDim, static_cast<int>(k)); },
                              Kernel::schoenberg(1.0, kDim),
                              bounded_grid(1.0),
                              UniformityDomain::BoundedInterval});

  v.push_back(wendland_to_gaussian("wendland-gaussian", {2.5, 5.5, 10.5, 21.5}, true));

  // With the hole Gaussian taken verbatim (exp(−h²/4a²) at k = 0), the
  // limit of both sources is the hole Gaussian at scale a/2.
  constexpr int kHole = 2;
  v.push_back(LimitExperiment{"hole-wendland-hole-gaussian",
                              "hole Wendland (a=mu/sqrt(4n), xi=n, nu=mu, k=2), mu=n^2 -> hole Gaussian (a/2, d=2, k=2)",
                              "wendland",
                              "hole-gaussian",
                              "n",
                              {5.0, 10.0, 20.0, 40.0, 80.0, 160.0},
                              [](double n) {
                                const double mu = n * n;
                                return Kernel::wendland({mu / std::sqrt(4.0 * n), n, mu, kDim, kHole});
                              },
                              Kernel::hole_gaussian(0.5, kDim, kHole),
                              bounded_grid(1.0),
                              UniformityDomain::BoundedInterval});

  v.push_back(LimitExperiment{"hole-matern-hole-gaussian",
                              "hole Matern (a=1/sqrt(4n), nu=n+1/2, k=2) -> hole Gaussian (a/2, d=2, k=2)",
                              "hole-matern",
                              "hole-gaussian",
                              "n",
                              {5.0, 20.0, 80.0, 320.0},
                              [](double n) { return Kernel::matern(1.0 / std::sqrt(4.0 * n), n + 0.5, kDim, kHole); },
                              Kernel::hole_gaussian(0.5, kDim, kHole),
                              bounded_grid(1.0),
                              UniformityDomain::BoundedInterval});

  v.push_back(LimitExperiment{"hole-gaussian-schoenberg",
                              "hole Gaussian (a sqrt(k), d=2, k) -> Schoenberg (d=2)",
                              "hole-gaussian",
                              "schoenberg",
                              "k",
                              {4.0, 16.0, 64.0, 256.0},
                              [](double k) { return Kernel::hole_gaussian(std::sqrt(k), kDim, static_cast<int>(k)); },
                              Kernel::schoenberg(1.0, kDim),
                              bounded_grid(1.0),
                              UniformityDomain::BoundedInterval});

  // The incomplete gamma limit needs β = 1 + d/2 + k.
  constexpr double kAlpha = 2.5;
  constexpr int kK = 1;
  v.push_back(LimitExperiment{"hypergeometric-incomplete-gamma",
                              "hypergeometric (a=b sqrt(gamma), alpha=2.5, beta=3, d=2, k=1) -> incomplete gamma",
                              "hypergeometric",
                              "incomplete-gamma",
                              "gamma",
                              {8.0, 40.0, 200.0, 1000.0, 5000.0},
                              [](double g) {
                                return Kernel::hypergeometric({std::sqrt(g), kAlpha, 1.0 + 0.5 * kDim + kK, g, kDim, kK});
                              },
                              Kernel::incomplete_gamma(1.0, kAlpha, kDim, kK),
                              bounded_grid(1.0),
                              UniformityDomain::BoundedInterval});
  return v;
}

std::optional<LimitExperiment> find_experiment(const std::string& id) {
  for (auto& e : builtin_experiments())
    if (e.id == id) return e;
  if (id == "wendland-gaussian-decoupled") return wendland_gaussian_decoupled_control();
  return std::nullopt;
}

LimitExperiment wendland_gaussian_decoupled_control() {
  return wendland_to_gaussian("wendland-gaussian-decoupled", {2.5, 5.5, 10.5, 21.5}, false);
}

}  // namespace nk
