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

#include <benchmark/benchmark.h>

#include "nk/covmat.hpp"
#include "nk/families.hpp"
#include "nk/hyperkernel.hpp"
#include "nk/limits.hpp"
#include "nk/specfun.hpp"
#include "nk/spectral.hpp"

namespace {

const nk::HyperParams kHole{1.0, 3.5, 7.0, 5.0, 2, 1};
const nk::HyperParams kCusp{2.0, 1.7, 3.1, 4.2, 1, 0};

void BM_Pfq1F2(benchmark::State& state) {
  const double x = -static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nk::pfq({{2.5}, {4.0, 5.0}}, x));
}
BENCHMARK(BM_Pfq1F2)->Arg(1)->Arg(100)->Arg(400);

void BM_Pfq3F2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nk::pfq({{1.2, 2.3, 0.7}, {3.1, 4.4}}, 0.97));
}
BENCHMARK(BM_Pfq3F2);

void BM_Evaluate(benchmark::State& state) {
  const double h = state.range(0) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(nk::evaluate(kHole, h));
}
BENCHMARK(BM_Evaluate)->Arg(5)->Arg(50)->Arg(95);

void BM_SpectralDensity(benchmark::State& state) {
  const double u = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nk::spectral_density(kHole, u));
}
BENCHMARK(BM_SpectralDensity)->Arg(1)->Arg(20)->Arg(500);

void BM_HankelForward(benchmark::State& state) {
  const nk::Kernel k = nk::Kernel::hypergeometric(kCusp);
  const double u = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nk::hankel_forward(k, kCusp.d, u).value);
}
BENCHMARK(BM_HankelForward)->Arg(1)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CovmatBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const nk::Kernel k = nk::Kernel::spherical(0.5);
  const auto pts = nk::PointSet::uniform(n, 3, 0.0, 2.0, 7);
  for (auto _ : state) benchmark::DoNotOptimize(nk::build(k, pts));
}
BENCHMARK(BM_CovmatBuild)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_PdCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = nk::build(nk::Kernel::spherical(0.5), nk::PointSet::uniform(n, 3, 0.0, 2.0, 7));
  for (auto _ : state) benchmark::DoNotOptimize(nk::pd_check(m));
}
BENCHMARK(BM_PdCheck)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_LimitWendlandMatern(benchmark::State& state) {
  const auto& experiments = nk::builtin_experiments();
  for (auto _ : state) {
    for (const auto& e : experiments)
      if (e.id == "wendland-matern") benchmark::DoNotOptimize(nk::run_limit(e).final_error);
  }
}
BENCHMARK(BM_LimitWendlandMatern)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
