// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "hlsdse/result_cache.hpp"

#include <gtest/gtest.h>

#include "algorithm_checks.hpp"
#include "hlsdse/ds_generator.hpp"
#include "hlsdse/dsl.hpp"
#include "hlsdse/mock_hls.hpp"
#include "random_kernel.hpp"
#include "random_space.hpp"

namespace hlsdse {
namespace {

Budget random_budget(std::mt19937_64& rng) {
  Budget b;
  switch (rng() % 3) {
    case 0:
      break;
    case 1:
      b.evaluations = rng() % 40;
      break;
    default:
      b.seconds = static_cast<double>(rng() % 20000);
      break;
  }
  return b;
}

TEST(ExplorerProperty, InvariantsOnMockKernels) {
  std::mt19937_64 rng(11);
  testing::RandomKernelOptions ko;
  ko.max_valid_points = 512;
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    const auto k = testing::random_kernel(seed, ko);
    ASSERT_TRUE(k.has_value()) << seed;
    const DesignSpace ds = generate_design_space(*k);
    MockHlsEvaluator mock(*k, ds);
    const Budget budget = random_budget(rng);
    const auto check = testing::check_bottleneck_run(ds, mock, budget);
    ASSERT_EQ(check.failure, "") << "kernel seed " << seed;
    if (check.result.feasible && !budget.evaluations && !budget.seconds) {
      const auto oracle = explore_exhaustive(ds, mock, 4096);
      ASSERT_GE(check.result.best_result.cycles, oracle.best_result.cycles);
    }
  }
}

TEST(ExplorerProperty, InvariantsOnGeneratedSpaces) {
  std::mt19937_64 rng(12);
  testing::RandomSpaceOptions so;
  so.division = false;
  so.max_params = 6;
  for (int t = 0; t < 500; ++t) {
    const DesignSpace ds = parse_design_space(testing::random_space_text(rng, so));
    testing::SyntheticEvaluator ev(ds, static_cast<std::uint64_t>(t));
    const auto check = testing::check_bottleneck_run(ds, ev, random_budget(rng));
    ASSERT_EQ(check.failure, "") << "trial " << t << "\n" << serialize_design_space(ds);
  }
}

TEST(ExplorerProperty, WarmCacheReplaysIdentically) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto k = testing::random_kernel(seed);
    const DesignSpace ds = generate_design_space(*k);
    MockHlsEvaluator mock(*k, ds);
    ResultCache cache;
    CachedEvaluator cold(mock, cache);
    ExploreOptions opts;
    opts.budget.evaluations = 60;
    const ExploreResult a = explore_bottleneck(ds, cold, opts);
    CachedEvaluator warm(mock, cache);
    const ExploreResult b = explore_bottleneck(ds, warm, opts);
    ASSERT_EQ(warm.backend_calls(), 0U);
    ASSERT_EQ(a.best, b.best);
    ASSERT_EQ(a.trace, b.trace);
  }
}

TEST(ExplorerProperty, CoordinateDescentAndRandomRespectBudgets) {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto k = testing::random_kernel(seed);
    const DesignSpace ds = generate_design_space(*k);
    MockHlsEvaluator mock(*k, ds);
    ExploreOptions opts;
    opts.budget.evaluations = 1 + rng() % 30;
    const auto cd = explore_coordinate_descent(ds, mock, opts);
    ASSERT_LE(cd.trace.size(), *opts.budget.evaluations);
    const auto rnd = explore_random(ds, mock, seed, opts);
    ASSERT_LE(rnd.trace.size(), *opts.budget.evaluations);
    for (const auto* r : {&cd, &rnd}) {
      for (std::size_t i = 1; i < r->trace.size(); ++i) ASSERT_LE(r->trace[i].best_so_far, r->trace[i - 1].best_so_far);
    }
  }
}

}  // namespace
}  // namespace hlsdse
