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

#include "nk/covmat.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "nk/errors.hpp"
#include "nk/format.hpp"
#include "nk/parallel.hpp"

namespace nk {

PointSet::PointSet(int d, std::vector<double> coords) : d_(d), coords_(std::move(coords)) {
  if (d < 1) throw DimensionMismatch("point dimension must be >= 1");
  if (coords_.empty() || coords_.size() % static_cast<std::size_t>(d) != 0)
    throw DimensionMismatch("coordinate count is not a positive multiple of d");
  for (double c : coords_)
    if (!std::isfinite(c)) throw DomainError("point coordinates must be finite");
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DimensionMismatch("point set must contain at least one point");
  const std::size_t d = rows.front().size();
  std::vector<double> c;
  c.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw DimensionMismatch("all points must have the same dimension");
    c.insert(c.end(), r.begin(), r.end());
  }
  return PointSet(static_cast<int>(d), std::move(c));
}

PointSet PointSet::uniform(std::size_t n, int d, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> c(n * static_cast<std::size_t>(d));
  for (double& v : c) v = u(rng);
  return PointSet(d, std::move(c));
}

double PointSet::distance(std::size_t i, std::size_t j) const {
  const double* p = point(i);
  const double* q = point(j);
  double s = 0.0;
  for (int k = 0; k < d_; ++k) {
    const double t = p[k] - q[k];
    s += t * t;
  }
  return std::sqrt(s);
}

double CovMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DomainError("matrix index out of range");
  return sparse_ ? sparse_->coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))
                 : dense_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
}

Eigen::MatrixXd CovMatrix::to_dense() const { return sparse_ ? Eigen::MatrixXd(*sparse_) : dense_; }

CovMatrix build(const Kernel& kernel, const PointSet& pts, const BuildOptions& opt) {
  if (const auto kd = kernel.dimension(); kd && *kd < pts.dim())
    throw DimensionMismatch("kernel " + kernel.name() + " is valid up to d=" + std::to_string(*kd) +
                            ", points live in d=" + std::to_string(pts.dim()));
  const std::size_t n = pts.size();
  CovMatrix m;
  m.n_ = n;
  const bool sparse = kernel.compact() && n > opt.dense_limit;
  const double support = kernel.support();

  // Row i holds the entries j ≥ i; every row is computed by one worker.
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
  parallel_for(
      n,
      [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          auto& row = rows[i];
          row.emplace_back(i, kernel(0.0));
          for (std::size_t j = i + 1; j < n; ++j) {
            const double h = pts.distance(i, j);
            if (h >= support) continue;
            const double v = kernel(h);
            if (v != 0.0) row.emplace_back(j, v);
          }
        }
      },
      opt.threads);

  std::size_t nonzero = 0;
  double max_abs = 0.0;
  for (const auto& row : rows)
    for (const auto& [j, v] : row) {
      (void)j;
      max_abs = std::max(max_abs, std::fabs(v));
    }
  if (sparse) {
    std::vector<Eigen::Triplet<double>> trip;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [j, v] : rows[i]) {
        trip.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
        if (j != i) trip.emplace_back(static_cast<int>(j), static_cast<int>(i), v);
      }
    Eigen::SparseMatrix<double> s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    s.setFromTriplets(trip.begin(), trip.end());
    nonzero = static_cast<std::size_t>(s.nonZeros());
    m.sparse_ = std::move(s);
  } else {
    m.dense_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [j, v] : rows[i]) {
        m.dense_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
        m.dense_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
        nonzero += (j == i) ? 1 : 2;
      }
  }
  m.sparsity_ = 1.0 - static_cast<double>(nonzero) / (static_cast<double>(n) * static_cast<double>(n));
  m.max_abs_ = max_abs;
  return m;
}

namespace {

constexpr std::size_t kDenseEigenLimit = 2000;
constexpr int kInverseIterations = 500;

// Smallest eigenvalue by inverse iteration on A − σI with σ below the
// Gershgorin lower bound, so that the shifted matrix is positive definite.
template <class Mat, class Solver>
double inverse_iteration(const Mat& a, double sigma) {
  const Eigen::Index n = a.rows();
  Mat shifted = a;
  for (Eigen::Index i = 0; i < n; ++i) shifted.coeffRef(i, i) -= sigma;
  Solver solver(shifted);
  if (solver.info() != Eigen::Success) throw ConvergenceError("pd_check: shifted factorization failed");
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized();
  double lambda = 0.0;
  for (int it = 0; it < kInverseIterations; ++it) {
    Eigen::VectorXd w = solver.solve(v);
    const double nw = w.norm();
    if (nw == 0.0) break;
    w /= nw;
    const double next = w.dot(a * w);
    v = std::move(w);
    if (it > 0 && std::fabs(next - lambda) <= 1e-13 * std::max(1.0, std::fabs(next))) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return lambda;
}

double gershgorin_lower(const Eigen::MatrixXd& a) {
  double lo = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    lo = std::min(lo, a(i, i) - (a.row(i).cwiseAbs().sum() - std::fabs(a(i, i))));
  return lo;
}

double gershgorin_lower(const Eigen::SparseMatrix<double>& a) {
  Eigen::VectorXd off = Eigen::VectorXd::Zero(a.rows());
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(a.rows());
  for (Eigen::Index c = 0; c < a.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, c); it; ++it) {
      if (it.row() == it.col()) diag(it.row()) = it.value();
      else off(it.row()) += std::fabs(it.value());
    }
  return std::min(0.0, (diag - off).minCoeff());
}

}  // namespace

PdCheck pd_check(const CovMatrix& m, double tol) {
  PdCheck r;
  const std::size_t n = m.size();
  r.tolerance = tol * static_cast<double>(n) * m.max_abs_entry();
  if (m.is_sparse()) {
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(m.sparse());
    r.cholesky_succeeded = llt.info() == Eigen::Success;
    const double sigma = gershgorin_lower(m.sparse()) - 1.0;
    r.min_eigenvalue =
        inverse_iteration<Eigen::SparseMatrix<double>, Eigen::SimplicialLLT<Eigen::SparseMatrix<double>>>(m.sparse(),
                                                                                                          sigma);
  } else {
    const Eigen::MatrixXd& a = m.dense();
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    r.cholesky_succeeded = llt.info() == Eigen::Success;
    if (n <= kDenseEigenLimit) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
      r.min_eigenvalue = es.eigenvalues().minCoeff();
    } else {
      r.min_eigenvalue =
          inverse_iteration<Eigen::MatrixXd, Eigen::LLT<Eigen::MatrixXd>>(a, gershgorin_lower(a) - 1.0);
    }
  }
  r.is_pd = r.min_eigenvalue >= -r.tolerance;
  return r;
}

void write_csv(const CovMatrix& m, std::ostream& out) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_triplets(const CovMatrix& m, std::ostream& out) {
  const std::size_t n = m.size();
  if (m.is_sparse()) {
    Eigen::SparseMatrix<double, Eigen::RowMajor> rm(m.sparse());
    for (Eigen::Index r = 0; r < rm.outerSize(); ++r)
      for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(rm, r); it; ++it)
        out << it.row() << ' ' << it.col() << ' ' << format_double(it.value()) << '\n';
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = m(i, j);
      if (v != 0.0) out << i << ' ' << j << ' ' << format_double(v) << '\n';
    }
}

}  // namespace nk
