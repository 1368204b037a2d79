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

// Covariance matrices of a kernel over a point set, positive-definiteness
// diagnostics and export.

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nk/families.hpp"

namespace nk {

/// n points in ℝ^d, stored row-major.
class PointSet {
 public:
  PointSet(int d, std::vector<double> coords);
  static PointSet from_rows(const std::vector<std::vector<double>>& rows);
  /// n points uniform in [lo, hi]^d from a seeded Mersenne twister.
  static PointSet uniform(std::size_t n, int d, double lo, double hi, std::uint64_t seed);

  [[nodiscard]] int dim() const { return d_; }
  [[nodiscard]] std::size_t size() const { return coords_.size() / static_cast<std::size_t>(d_); }
  [[nodiscard]] const double* point(std::size_t i) const { return coords_.data() + i * static_cast<std::size_t>(d_); }
  [[nodiscard]] double distance(std::size_t i, std::size_t j) const;

 private:
  int d_;
  std::vector<double> coords_;
};

struct BuildOptions {
  /// Dense storage up to this size; above it, compactly supported kernels
  /// are stored in compressed sparse form.
  std::size_t dense_limit = 5000;
  int threads = 0;  // ≤ 0: worker_count()
};

class CovMatrix {
 public:
  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] bool is_sparse() const { return sparse_.has_value(); }
  /// Fraction of entries that are exactly zero.
  [[nodiscard]] double sparsity() const { return sparsity_; }
  [[nodiscard]] double max_abs_entry() const { return max_abs_; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const;
  [[nodiscard]] Eigen::MatrixXd to_dense() const;
  [[nodiscard]] const Eigen::MatrixXd& dense() const { return dense_; }
  [[nodiscard]] const Eigen::SparseMatrix<double>& sparse() const { return *sparse_; }

 private:
  friend CovMatrix build(const Kernel&, const PointSet&, const BuildOptions&);
  std::size_t n_ = 0;
  Eigen::MatrixXd dense_;
  std::optional<Eigen::SparseMatrix<double>> sparse_;
  double sparsity_ = 0.0;
  double max_abs_ = 0.0;
};

/// Throws DimensionMismatch when the kernel is not known to be valid in the
/// dimension of the points.
CovMatrix build(const Kernel& kernel, const PointSet& points, const BuildOptions& options = {});

struct PdCheck {
  bool is_pd = false;
  double min_eigenvalue = 0.0;
  bool cholesky_succeeded = false;
  double tolerance = 0.0;  // the scaled threshold actually applied
};

/// Cholesky first, then the smallest eigenvalue (dense eigensolver up to
/// n = 2000, shifted inverse iteration above). is_pd ⇔ λ_min ≥ −tol·n·max|entry|.
PdCheck pd_check(const CovMatrix& m, double tol = 1e-10);

/// Dense CSV, one row per line, 17 significant digits.
void write_csv(const CovMatrix& m, std::ostream& out);
/// "i j value" lines (0-based) for the nonzero entries, upper triangle
/// included, in row-major order.
void write_triplets(const CovMatrix& m, std::ostream& out);

}  // namespace nk
