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

// Harness for the parametric-limit results: a source kernel indexed by a
// rate parameter is compared with its limit on a grid, and the sup-norm
// error trace is checked for monotone decrease.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nk/families.hpp"

namespace nk {

enum class UniformityDomain { FullRay, BoundedInterval };

struct LimitExperiment {
  std::string id;
  std::string description;
  std::string source_family;
  std::string target_family;
  std::string rate_name;
  std::vector<double> schedule;  // strictly increasing
  std::function<Kernel(double)> source;
  Kernel target;
  std::vector<double> grid;
  UniformityDomain domain = UniformityDomain::BoundedInterval;
};

struct ConvergenceResult {
  std::string id;
  std::vector<double> rates;
  std::vector<double> errors;  // sup-norm error per schedule point
  bool monotone_pass = true;   // nonincreasing within 5% slack
  double final_error = 0.0;
};

/// n uniform points on [lo, hi] including both ends.
std::vector<double> uniform_grid(double lo, double hi, int n);

/// Evaluates source and target on the grid at every schedule point. Failures
/// are rethrown as nk::Error with the experiment id and rate in the message.
/// `threads` ≤ 0 uses worker_count().
ConvergenceResult run_limit(const LimitExperiment& experiment, int threads = 0);

/// The nine built-in experiments, named source-target: wendland-matern,
/// wendland-hole-matern, hole-wendland-schoenberg, hole-matern-schoenberg,
/// wendland-gaussian, hole-wendland-hole-gaussian, hole-matern-hole-gaussian,
/// hole-gaussian-schoenberg and hypergeometric-incomplete-gamma.
std::vector<LimitExperiment> builtin_experiments();
std::optional<LimitExperiment> find_experiment(const std::string& id);

/// wendland-gaussian with the rates decoupled (μ = 2ν instead of μ = ν³);
/// a negative control that must not converge.
LimitExperiment wendland_gaussian_decoupled_control();

}  // namespace nk
