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

// nkcli: batch front end for the native_kernels library.
//
// Exit status: 0 success, 1 validity/evaluation failure (or a failed check
// under --strict), 2 malformed input.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "figures.hpp"
#include "kernel_spec.hpp"
#include "nk/analysis.hpp"
#include "nk/covmat.hpp"
#include "nk/errors.hpp"
#include "nk/format.hpp"
#include "nk/hyperkernel.hpp"
#include "nk/limits.hpp"
#include "nk/parallel.hpp"
#include "nk/spectral.hpp"
#include "table.hpp"

namespace nkcli {
namespace {

// Signals a failure that should end the run with status 1 after the
// output already written has been flushed.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  KernelSpec kernel;
  std::string grid = "0:1:101";
  std::string out;
  std::string format = "csv";
  bool strict = false;

  // limits
  std::string experiment = "all";
  std::string schedule;

  // covmat
  std::string points_file;
  std::size_t random_n = 0;
  std::uint64_t seed = 1;
  std::optional<int> point_dim;
  std::string box = "0:1";
  std::string export_path;
  std::string export_format = "csv";
  std::size_t dense_limit = 5000;
  double pd_tolerance = 1e-10;

  // figures
  int figure_id = 0;
  std::string out_dir = ".";
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Format parse_format(const std::string& s) { return s == "jsonl" ? Format::JsonLines : Format::Csv; }

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double x = 0.0;
    const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc() || p != item.data() + item.size()) throw UsageError("bad schedule value '" + item + "'");
    v.push_back(x);
  }
  if (v.empty()) throw UsageError("empty schedule");
  return v;
}

// Evaluates fn on every grid point in parallel; the first failing point in
// grid order aborts the run with its abscissa in the message.
std::vector<double> evaluate_grid(const std::vector<double>& grid, const std::function<double(double)>& fn,
                                  const char* var) {
  std::vector<double> values(grid.size());
  std::vector<std::string> errors(grid.size());
  nk::parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        values[i] = fn(grid[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  });
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (!errors[i].empty())
      throw nk::Error(std::string("evaluation failed at ") + var + "=" + nk::format_double(grid[i]) + ": " +
                      errors[i]);
  return values;
}

void write_series(const Options& o, const char* var, const char* value_name, const std::vector<double>& grid,
                  const std::vector<double>& values) {
  Output out(o.out);
  TableWriter t(out.stream(), parse_format(o.format), {var, value_name});
  for (std::size_t i = 0; i < grid.size(); ++i) t.row({Cell::number(grid[i]), Cell::number(values[i])});
}

const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

int cmd_validate(const Options& o) {
  Output out(o.out);
  TableWriter t(out.stream(), parse_format(o.format), {"check", "result"});
  std::optional<nk::HyperParams> theta;
  if (o.kernel.family == "hypergeometric") {
    theta = hyper_params(o.kernel);
  } else {
    try {
      theta = make_kernel(o.kernel).hyper_params();
    } catch (const nk::InvalidParameters& e) {
      t.row({Cell::str("parameters"), Cell::str(std::string("FAIL: ") + e.what())});
      return 1;
    }
    t.row({Cell::str("parameters"), Cell::str("PASS")});
    if (!theta) {
      t.row({Cell::str("class"), Cell::str("outside the hypergeometric class")});
      return 0;
    }
  }
  const nk::ValidityReport r = nk::validate(*theta);
  t.row({Cell::str("A.1"), Cell::str(pass_fail(r.a1))});
  t.row({Cell::str("A.2"), Cell::str(pass_fail(r.a2))});
  t.row({Cell::str("A.3"), Cell::str(pass_fail(r.a3))});
  t.row({Cell::str("A.4"), Cell::str(pass_fail(r.a4))});
  t.row({Cell::str("strict_a3"), Cell::boolean(r.strict_a3)});
  t.row({Cell::str("continuation_required"), Cell::boolean(r.continuation_required)});
  t.row({Cell::str("near_integer_warning"), Cell::boolean(r.near_integer_warning)});
  t.row({Cell::str("sobolev_exponent"),
         r.sobolev_exponent ? Cell::number(*r.sobolev_exponent) : Cell::str("none")});
  return r.all_pass() ? 0 : 1;
}

int cmd_eval(const Options& o) {
  const nk::Kernel kernel = make_kernel(o.kernel);
  const auto grid = parse_grid(o.grid).points();
  const auto values = evaluate_grid(grid, [&](double h) { return kernel(h); }, "h");
  write_series(o, "h", "value", grid, values);
  return 0;
}

int cmd_spectrum(const Options& o) {
  const nk::Kernel kernel = make_kernel(o.kernel);
  const auto grid = parse_grid(o.grid).points();
  std::function<double(double)> density;
  const auto theta = kernel.hyper_params();
  if (theta && nk::validate(*theta).all_pass()) {
    density = [t = *theta](double u) { return nk::spectral_density(t, u); };
  } else {
    const int d = kernel.dimension().value_or(o.kernel.dim());
    // Hole-effect densities carry a factor u^{2k}; quadrature would return
    // rounding noise at the origin instead of the exact zero.
    const bool hole = kernel.hole_order() > 0;
    density = [&kernel, d, hole](double u) {
      if (u == 0.0 && hole) return 0.0;
      return nk::hankel_forward(kernel, d, u).value;
    };
  }
  const auto values = evaluate_grid(grid, density, "u");
  write_series(o, "u", "density", grid, values);
  return 0;
}

int cmd_report(const Options& o) {
  const nk::Kernel kernel = make_kernel(o.kernel);
  const auto theta = kernel.hyper_params();
  if (!theta) throw nk::InvalidParameters("report needs a kernel in the hypergeometric class");
  const nk::SmoothnessReport s = nk::smoothness_report(*theta);
  // One decade starting well inside the asymptotic regime, where the
  // oscillating contribution of the range is already small.
  const nk::TailFit tail = nk::tail_fit(*theta, 200.0 / theta->a, 2000.0 / theta->a, 41);
  const nk::HoleDiagnostics hole = nk::hole_diagnostics(kernel, 2000);

  Output out(o.out);
  TableWriter t(out.stream(), parse_format(o.format), {"quantity", "value"});
  auto opt = [](const std::optional<double>& v) { return v ? Cell::number(*v) : Cell::str("none"); };
  t.row({Cell::str("family"), Cell::str(kernel.name())});
  t.row({Cell::str("sobolev_exponent"), opt(s.sobolev_exponent)});
  t.row({Cell::str("msd_order"), Cell::integer(s.msd_order)});
  t.row({Cell::str("fractal_dimension"), opt(s.fractal_dimension)});
  t.row({Cell::str("theta_exponent"), Cell::number(s.theta_exponent)});
  t.row({Cell::str("origin_first_kind"), Cell::str(nk::to_string(s.origin_first_kind))});
  t.row({Cell::str("origin_first_derivative"),
         s.origin_first_kind == nk::FirstDerivativeKind::NegativeInfinity ? Cell::number(-INFINITY)
                                                                          : Cell::number(s.origin_first_derivative)});
  t.row({Cell::str("origin_second_kind"), Cell::str(nk::to_string(s.origin_second_kind))});
  t.row({Cell::str("origin_second_derivative"),
         s.origin_second_kind == nk::SecondDerivativeKind::Finite
             ? Cell::number(s.origin_second_derivative)
             : Cell::number(s.origin_second_kind == nk::SecondDerivativeKind::PositiveInfinity ? INFINITY
                                                                                                : -INFINITY)});
  t.row({Cell::str("range_diff_order"), Cell::integer(s.range_diff_order)});
  t.row({Cell::str("range_exponent"), Cell::number(s.range_exponent)});
  t.row({Cell::str("range_caveat_beta_gamma_integer"), Cell::boolean(s.range_caveat_beta_gamma_integer)});
  t.row({Cell::str("range_caveat_shifted_integer"), Cell::boolean(s.range_caveat_shifted_integer)});
  t.row({Cell::str("tail_exponent_theory"), Cell::number(2.0 * theta->k - 2.0 * theta->alpha)});
  t.row({Cell::str("tail_exponent_fit"), Cell::number(tail.exponent_estimate)});
  t.row({Cell::str("tail_constant_fit"), Cell::number(tail.constant_estimate)});
  t.row({Cell::str("tail_fit_residual"), Cell::number(tail.residual)});
  t.row({Cell::str("hole_min_value"), Cell::number(hole.min_value)});
  t.row({Cell::str("hole_argmin"), Cell::number(hole.argmin)});
  t.row({Cell::str("hole_sign_changes"), Cell::integer(hole.sign_changes)});
  t.row({Cell::str("nonincreasing"), Cell::boolean(hole.nonincreasing)});
  for (const auto& w : tail.warnings) t.row({Cell::str("warning"), Cell::str(w)});
  return 0;
}

int cmd_limits(const Options& o) {
  std::vector<nk::LimitExperiment> experiments;
  if (o.experiment == "all") {
    experiments = nk::builtin_experiments();
  } else {
    auto e = nk::find_experiment(o.experiment);
    if (!e) throw UsageError("unknown experiment '" + o.experiment + "'");
    experiments.push_back(std::move(*e));
  }
  if (!o.schedule.empty()) {
    if (experiments.size() != 1) throw UsageError("--schedule needs a single --experiment");
    experiments.front().schedule = parse_list(o.schedule);
  }

  Output out(o.out);
  TableWriter t(out.stream(), parse_format(o.format), {"experiment", "row", "rate", "sup_error", "monotone_pass"});
  bool all_monotone = true;
  for (const auto& e : experiments) {
    const nk::ConvergenceResult r = nk::run_limit(e);
    for (std::size_t i = 0; i < r.rates.size(); ++i)
      t.row({Cell::str(r.id), Cell::str("point"), Cell::number(r.rates[i]), Cell::number(r.errors[i]),
             Cell::empty()});
    t.row({Cell::str(r.id), Cell::str("summary"), Cell::number(r.rates.back()), Cell::number(r.final_error),
           Cell::boolean(r.monotone_pass)});
    all_monotone = all_monotone && r.monotone_pass;
  }
  if (o.strict && !all_monotone) throw CheckFailed("a convergence trace is not monotone");
  return 0;
}

nk::PointSet read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read points file " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (char& c : line)
      if (c == ',' || c == '\t' || c == ';' || c == '\r') c = ' ';
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      double x = 0.0;
      const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw UsageError(path + ":" + std::to_string(lineno) + ": bad coordinate '" + tok + "'");
      row.push_back(x);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return nk::PointSet::from_rows(rows);
}

int cmd_covmat(const Options& o) {
  const nk::Kernel kernel = make_kernel(o.kernel);
  if (o.points_file.empty() == (o.random_n == 0)) throw UsageError("covmat needs exactly one of --points or --random");
  const nk::PointSet pts = [&] {
    if (!o.points_file.empty()) return read_points(o.points_file);
    const GridSpec box = parse_grid(o.box + ":2");
    return nk::PointSet::uniform(o.random_n, o.point_dim.value_or(o.kernel.dim()), box.start, box.stop, o.seed);
  }();
  nk::BuildOptions bo;
  bo.dense_limit = o.dense_limit;
  const nk::CovMatrix m = nk::build(kernel, pts, bo);
  const nk::PdCheck pd = nk::pd_check(m, o.pd_tolerance);

  if (!o.export_path.empty()) {
    std::ofstream ex(o.export_path, std::ios::binary);
    if (!ex) throw UsageError("cannot open " + o.export_path + " for writing");
    if (o.export_format == "triplets")
      nk::write_triplets(m, ex);
    else
      nk::write_csv(m, ex);
  }

  Output out(o.out);
  TableWriter t(out.stream(), parse_format(o.format), {"quantity", "value"});
  t.row({Cell::str("kernel"), Cell::str(kernel.name())});
  t.row({Cell::str("points"), Cell::integer(static_cast<long long>(pts.size()))});
  t.row({Cell::str("dimension"), Cell::integer(pts.dim())});
  t.row({Cell::str("storage"), Cell::str(m.is_sparse() ? "sparse" : "dense")});
  t.row({Cell::str("sparsity"), Cell::number(m.sparsity())});
  t.row({Cell::str("max_abs_entry"), Cell::number(m.max_abs_entry())});
  t.row({Cell::str("cholesky_succeeded"), Cell::boolean(pd.cholesky_succeeded)});
  t.row({Cell::str("min_eigenvalue"), Cell::number(pd.min_eigenvalue)});
  t.row({Cell::str("tolerance"), Cell::number(pd.tolerance)});
  t.row({Cell::str("is_pd"), Cell::boolean(pd.is_pd)});
  if (o.strict && !pd.is_pd) throw CheckFailed("covariance matrix is not positive definite");
  return 0;
}

int cmd_figures(const Options& o) {
  for (const auto& p : write_figure(o.figure_id, o.out_dir)) std::cout << p.string() << '\n';
  return 0;
}

void add_kernel_options(CLI::App& app, Options& o) {
  auto* fam = app.add_option("--family", o.kernel.family, "kernel family")->capture_default_str();
  fam->check(CLI::IsMember(family_names()));
  app.add_option("--a", o.kernel.a, "range / scale parameter (default 1)");
  app.add_option("--alpha", o.kernel.alpha, "class parameter alpha");
  app.add_option("--beta", o.kernel.beta, "class parameter beta");
  app.add_option("--gamma", o.kernel.gamma, "class parameter gamma");
  app.add_option("--d", o.kernel.d, "space dimension (default 1)");
  app.add_option("--k", o.kernel.k, "hole-effect order (default 0)");
  app.add_option("--xi", o.kernel.xi, "Wendland smoothness xi (default 0)");
  app.add_option("--nu", o.kernel.nu, "Wendland exponent or Matern smoothness nu");
  app.add_option("--M", o.kernel.M, "truncated polynomial: beta = 1 + alpha + M");
  app.add_option("--N", o.kernel.N, "truncated polynomial: gamma = 1 + d/2 + k + N");
  app.add_option("--grid", o.grid, "evaluation grid start:stop:count")->capture_default_str();
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--format", o.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  app.add_flag("--strict", o.strict, "exit 1 when a diagnostic check fails");
}

int run(int argc, char** argv) {
  CLI::App app{"Evaluate, validate and analyse hypergeometric covariance kernels.", "nkcli"};
  app.set_config("--config", "", "flat key=value file mirroring the long flag names; flags override it");
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  add_kernel_options(app, o);

  auto* validate = app.add_subcommand("validate", "check the parameter restrictions; exit 0 iff all pass");
  auto* eval = app.add_subcommand("eval", "kernel values on the grid (h,value)");
  auto* spectrum = app.add_subcommand("spectrum", "d-radial spectral density on the grid (u,density)");
  auto* report = app.add_subcommand("report", "smoothness, tail and hole-effect report");

  auto* limits = app.add_subcommand("limits", "run parametric limit experiments");
  limits->add_option("--experiment", o.experiment, "experiment id or 'all'")->capture_default_str();
  limits->add_option("--schedule", o.schedule, "comma-separated rate values overriding the built-in schedule");

  auto* covmat = app.add_subcommand("covmat", "covariance matrix diagnostics");
  covmat->add_option("--points", o.points_file, "text file with one point per line");
  covmat->add_option("--random", o.random_n, "number of uniformly drawn points");
  covmat->add_option("--seed", o.seed, "seed of the point generator")->capture_default_str();
  covmat->add_option("--dim", o.point_dim, "dimension of random points (default --d)");
  covmat->add_option("--box", o.box, "coordinate range lo:hi of random points")->capture_default_str();
  covmat->add_option("--export", o.export_path, "write the matrix to this file");
  covmat->add_option("--export-format", o.export_format, "csv or triplets")
      ->check(CLI::IsMember({"csv", "triplets"}))
      ->capture_default_str();
  covmat->add_option("--dense-limit", o.dense_limit, "largest n stored densely for compact kernels")
      ->capture_default_str();
  covmat->add_option("--pd-tolerance", o.pd_tolerance, "relative eigenvalue tolerance")->capture_default_str();

  auto* figures = app.add_subcommand("figures", "write the CSV data for the reference plots (ids 1 to 4)");
  figures->add_option("--id", o.figure_id, "plot id")->required()->check(CLI::Range(1, 4));
  figures->add_option("--out-dir", o.out_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (eval->parsed()) return cmd_eval(o);
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (report->parsed()) return cmd_report(o);
    if (limits->parsed()) return cmd_limits(o);
    if (covmat->parsed()) return cmd_covmat(o);
    if (figures->parsed()) return cmd_figures(o);
  } catch (const UsageError& e) {
    std::cerr << "nkcli: " << e.what() << '\n';
    return 2;
  } catch (const CheckFailed& e) {
    std::cerr << "nkcli: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "nkcli: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace
}  // namespace nkcli

int main(int argc, char** argv) { return nkcli::run(argc, argv); }
