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

#include <gtest/gtest.h>

#include <set>

#include "nk/errors.hpp"
#include "nk/limits.hpp"

namespace {

TEST(Limits, BuiltinIdsAreUniqueAndFindable) {
  const auto all = nk::builtin_experiments();
  EXPECT_EQ(all.size(), 9u);
  std::set<std::string> ids;
  for (const auto& e : all) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_TRUE(nk::find_experiment(e.id).has_value());
    EXPECT_GE(e.schedule.size(), 4u);
  }
  EXPECT_TRUE(nk::find_experiment("wendland-gaussian-decoupled").has_value());
  EXPECT_FALSE(nk::find_experiment("no-such-experiment").has_value());
}

TEST(Limits, WendlandToMaternDecreasesStrictly) {
  const auto r = nk::run_limit(*nk::find_experiment("wendland-matern"));
  ASSERT_EQ(r.errors.size(), 4u);
  for (std::size_t i = 1; i < r.errors.size(); ++i) EXPECT_LT(r.errors[i], r.errors[i - 1]);
  EXPECT_TRUE(r.monotone_pass);
  EXPECT_LE(r.final_error, 0.02);
}

TEST(Limits, HoleGaussianToSchoenberg) {
  const auto r = nk::run_limit(*nk::find_experiment("hole-gaussian-schoenberg"));
  EXPECT_TRUE(r.monotone_pass);
  EXPECT_LE(r.final_error, 0.02);
}

TEST(Limits, DecoupledControlDoesNotConverge) {
  const auto r = nk::run_limit(nk::wendland_gaussian_decoupled_control());
  EXPECT_GT(r.final_error, 0.1);
}

TEST(Limits, SinglePointScheduleIsVacuouslyMonotone) {
  auto e = *nk::find_experiment("wendland-matern");
  e.schedule = {50.0};
  const auto r = nk::run_limit(e);
  EXPECT_TRUE(r.monotone_pass);
  EXPECT_EQ(r.errors.size(), 1u);
}

TEST(Limits, NonIncreasingScheduleIsRejected) {
  auto e = *nk::find_experiment("wendland-matern");
  e.schedule = {50.0, 10.0};
  EXPECT_THROW(nk::run_limit(e), nk::DomainError);
}

TEST(Limits, SourceFailureNamesTheRate) {
  auto e = *nk::find_experiment("wendland-matern");
  e.schedule = {0.5};  // ν below the admissible minimum
  try {
    nk::run_limit(e);
    FAIL() << "expected an exception";
  } catch (const nk::Error& ex) {
    EXPECT_NE(std::string(ex.what()).find("mu=0.5"), std::string::npos) << ex.what();
  }
}

TEST(Limits, UniformGrid) {
  const auto g = nk::uniform_grid(0.0, 2.0, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g[2], 1.0);
  EXPECT_EQ(g.back(), 2.0);
  EXPECT_THROW(nk::uniform_grid(0.0, 1.0, 1), nk::DomainError);
}

}  // namespace
