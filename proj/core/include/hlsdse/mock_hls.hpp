// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

#include "hlsdse/design_space.hpp"
#include "hlsdse/eval_result.hpp"
#include "hlsdse/evaluator.hpp"
#include "hlsdse/kernel_model.hpp"

namespace hlsdse {

/// Simulated synthesis time of the smallest design and the per-evaluation
/// time budget reached exactly at the effort limit.
inline constexpr double kMockBaseSeconds = 60.0;
inline constexpr double kMockTimeBudgetSeconds = 3600.0;

struct MockOptions {
  double util_threshold = kDefaultUtilThreshold;
  /// Overrides KernelModel::hls_effort_limit.
  std::optional<std::int64_t> effort_limit;
  /// Real sleep per call; only for exercising concurrency.
  std::chrono::milliseconds delay{0};
};

/// Analytical stand-in for an HLS run (see docs/mock-cost-model.md).
/// Pure: the same inputs always give the same result. Throws ModelError when
/// a parameter of `ds` is scoped to a loop `k` does not have.
EvalResult mock_hls_evaluate(const KernelModel& k, const DesignSpace& ds, const Config& cfg,
                             const MockOptions& opts = {});

class MockHlsEvaluator final : public Evaluator {
 public:
  MockHlsEvaluator(KernelModel k, DesignSpace ds, MockOptions opts = {});

  EvalResult evaluate(const Config& cfg) override;
  std::uint64_t calls() const { return calls_.load(); }

 private:
  KernelModel k_;
  DesignSpace ds_;
  MockOptions opts_;
  std::atomic<std::uint64_t> calls_{0};
};

}  // namespace hlsdse
