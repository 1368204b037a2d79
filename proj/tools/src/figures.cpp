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

#include "figures.hpp"

#include <cmath>
#include <fstream>
#include <utility>

#include "kernel_spec.hpp"
#include "nk/families.hpp"
#include "nk/limits.hpp"
#include "nk/parallel.hpp"
#include "table.hpp"

namespace nkcli {

namespace {

struct Curve {
  std::string label;
  nk::Kernel kernel;
};

std::filesystem::path write_curves(const std::filesystem::path& path, const std::vector<double>& grid,
                                   const std::vector<Curve>& curves) {
  std::vector<std::vector<double>> values(curves.size(), std::vector<double>(grid.size()));
  for (std::size_t c = 0; c < curves.size(); ++c)
    nk::parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) values[c][i] = curves[c].kernel(grid[i]);
    });

  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path.string() + " for writing");
  std::vector<std::string> header{"h"};
  for (const auto& c : curves) header.push_back(c.label);
  TableWriter table(out, Format::Csv, header);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<Cell> row{Cell::number(grid[i])};
    for (std::size_t c = 0; c < curves.size(); ++c) row.push_back(Cell::number(values[c][i]));
    table.row(row);
  }
  if (!out) throw UsageError("write to " + path.string() + " failed");
  return path;
}

// Smallest N (for a given M) meeting the admissibility conditions of the
// truncated polynomial kernel with α = (d+1)/2 + k + p.
int smallest_admissible_n(int d, int k, int p, int m) {
  for (int n = 0;; ++n) {
    const bool c1 = (1.0 + m) * (2.0 * n - d - 2.0 * k - 4.0 * p) >= 0.5 * (d + 1) + k + p;
    const bool c2 = m + n - k - 2.0 * p >= 0.5 * (d - 1);
    if (c1 && c2) return n;
  }
}

std::vector<std::filesystem::path> figure1(const std::filesystem::path& dir) {
  constexpr int d = 2;
  std::vector<Curve> curves;
  for (int p = 0; p <= 1; ++p)
    for (int k = 0; k <= 2; ++k)
      for (int m : {1, 3}) {
        const int n = smallest_admissible_n(d, k, p, m);
        curves.push_back({"k" + std::to_string(k) + "_p" + std::to_string(p) + "_M" + std::to_string(m) + "_N" +
                              std::to_string(n),
                          nk::Kernel::truncated_polynomial(1.0, 0.5 * (d + 1) + k + p, d, k, m, n)});
      }
  return {write_curves(dir / "fig1_truncated_polynomial.csv", nk::uniform_grid(0.0, 1.0, 201), curves)};
}

std::vector<std::filesystem::path> figure2(const std::filesystem::path& dir) {
  const auto grid = nk::uniform_grid(0.0, 1.0, 201);
  std::vector<std::filesystem::path> files;
  for (const auto& [xi, name] : {std::pair{0.0, "askey"}, std::pair{1.0, "wendland"}}) {
    std::vector<Curve> curves;
    for (int k = 0; k <= 2; ++k)
      curves.push_back({"k" + std::to_string(k), nk::Kernel::wendland({1.0, xi, 6.0, 2, k})});
    files.push_back(write_curves(dir / ("fig2_" + std::string(name) + ".csv"), grid, curves));
  }
  return files;
}

std::vector<std::filesystem::path> figure3(const std::filesystem::path& dir) {
  const auto grid = nk::uniform_grid(0.0, 4.0, 401);
  std::vector<std::filesystem::path> files;
  for (int k : {0, 2}) {
    std::vector<Curve> curves;
    for (double mu : {10.0, 50.0})
      curves.push_back({"wendland_mu" + std::to_string(static_cast<int>(mu)),
                        nk::Kernel::wendland({mu, 1.0, mu, 2, k})});
    curves.push_back({"matern", nk::Kernel::matern(1.0, 1.5, 2, k)});
    files.push_back(write_curves(dir / ("fig3_k" + std::to_string(k) + ".csv"), grid, curves));
  }
  return files;
}

std::vector<std::filesystem::path> figure4(const std::filesystem::path& dir) {
  std::vector<Curve> curves;
  for (int k : {5, 10, 100})
    curves.push_back({"matern_k" + std::to_string(k), nk::Kernel::matern(1.0, k + 0.5, 2, k)});
  curves.push_back({"schoenberg", nk::Kernel::schoenberg(1.0, 2)});
  return {write_curves(dir / "fig4_hole_matern.csv", nk::uniform_grid(0.0, 3.0, 301), curves)};
}

}  // namespace

std::vector<std::filesystem::path> write_figure(int id, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  switch (id) {
    case 1: return figure1(dir);
    case 2: return figure2(dir);
    case 3: return figure3(dir);
    case 4: return figure4(dir);
    default: throw UsageError("figure id must be 1, 2, 3 or 4");
  }
}

}  // namespace nkcli
