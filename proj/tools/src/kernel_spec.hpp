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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nk/families.hpp"

namespace nkcli {

/// Raised for malformed or missing command-line input (exit status 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Kernel family and parameters as given on the command line or in a
/// config file. Unset parameters fall back to per-family defaults.
struct KernelSpec {
  std::string family = "hypergeometric";
  std::optional<double> a, alpha, beta, gamma, xi, nu;
  std::optional<int> d, k, M, N;

  /// Ambient dimension used for transforms when the family does not fix one.
  [[nodiscard]] int dim() const { return d.value_or(1); }
};

/// Families accepted by --family, in help order.
const std::vector<std::string>& family_names();

/// Builds the kernel. Throws UsageError for an unknown family or a missing
/// required parameter and nk::InvalidParameters for out-of-range values.
nk::Kernel make_kernel(const KernelSpec& spec);

/// The class parameters for the hypergeometric family without building a
/// kernel, so that `validate` can report on invalid θ.
nk::HyperParams hyper_params(const KernelSpec& spec);

struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  int count = 101;
  [[nodiscard]] std::vector<double> points() const;
};

/// Parses "start:stop:count". Throws UsageError.
GridSpec parse_grid(const std::string& text);

}  // namespace nkcli
