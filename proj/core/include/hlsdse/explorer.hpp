// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlsdse/design_space.hpp"
#include "hlsdse/eval_result.hpp"
#include "hlsdse/evaluator.hpp"
#include "hlsdse/quality.hpp"

namespace hlsdse {

enum class BudgetClock : std::uint8_t {
  /// Sum of EvalResult::eval_seconds; reproducible across runs.
  kSimulated,
  kWall,
};

/// Exploration limits. Checked before every new evaluation, so a run
/// overshoots by at most one evaluation.
struct Budget {
  std::optional<double> seconds;
  std::optional<std::uint64_t> evaluations;
  BudgetClock clock = BudgetClock::kSimulated;
};

struct TraceEntry {
  std::uint64_t eval_index = 0;
  double elapsed_seconds = 0.0;
  std::string config_key;
  EvalStatus status = EvalStatus::kInvalid;
  std::uint64_t cycles = kInfiniteCycles;
  /// kInfiniteCycles until the first OK result.
  std::uint64_t best_so_far = kInfiniteCycles;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct DesignPoint {
  Config config;
  std::vector<std::pair<std::string, OptionValue>> tuned;
  EvalResult result;
  Quality quality;
  /// Parameters still to sweep from here; the most promising is at the back.
  std::vector<std::string> children;
};

/// Emitted once per sweep of explore_bottleneck, before its evaluations.
struct ExpandEvent {
  std::size_t level = 0;
  /// Number of tuned parameters for every pending point, per level.
  std::vector<std::vector<std::size_t>> heap_tuned_sizes;
  const DesignPoint* point = nullptr;
  std::string focused;
  /// One per option of the focused parameter; invalid ones are dropped.
  std::vector<Config> candidates;
};

struct ExploreOptions {
  Budget budget;
  /// Polled before each evaluation; set by another thread to stop early.
  const std::atomic<bool>* stop = nullptr;
  std::function<void(const TraceEntry&)> on_evaluation;
  std::function<void(const ExpandEvent&)> on_expand;
};

struct ExploreResult {
  /// Feasible argmin of cycles (ties by config key); the starting config
  /// when nothing feasible was found.
  Config best;
  EvalResult best_result;
  bool feasible = false;
  std::vector<TraceEntry> trace;
  double elapsed_seconds = 0.0;
  /// True when the search ran out of work rather than budget.
  bool completed = false;
};

/// Throws NoFeasiblePoint unless `r.feasible`.
void require_feasible(const ExploreResult& r);

/// Bottleneck-guided coordinate optimizer over `ds` (typically a partition
/// view).
ExploreResult explore_bottleneck(const DesignSpace& ds, Evaluator& evaluator, const ExploreOptions& opts = {});

/// Coordinate descent: each step evaluates every one-parameter advance of
/// the current point and moves to the best finite-difference candidate.
ExploreResult explore_coordinate_descent(const DesignSpace& ds, Evaluator& evaluator,
                                         const ExploreOptions& opts = {});

/// Rejection sampling from the grid. Each distinct config counts once
/// against the evaluation budget.
ExploreResult explore_random(const DesignSpace& ds, Evaluator& evaluator, std::uint64_t seed,
                             const ExploreOptions& opts = {});

/// Evaluates every valid config. Throws SpaceTooLarge above `cap` valid
/// points and NoFeasiblePoint when none is feasible.
ExploreResult explore_exhaustive(const DesignSpace& ds, Evaluator& evaluator, std::uint64_t cap,
                                 const ExploreOptions& opts = {});

}  // namespace hlsdse
