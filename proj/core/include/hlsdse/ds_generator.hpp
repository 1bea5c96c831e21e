// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlsdse/design_space.hpp"
#include "hlsdse/kernel_model.hpp"

namespace hlsdse {

/// Parameter names the generator uses for a loop.
std::string pipeline_param_name(const std::string& loop_id);
std::string parallel_param_name(const std::string& loop_id);
std::string tiling_param_name(const std::string& loop_id);

/// Innermost loops at or below this trip count get no parameters.
inline constexpr std::int64_t kSmallLoopTripCount = 16;
/// Largest parallel factor offered, apart from the trip count itself.
inline constexpr std::int64_t kMaxParallelFactor = 128;

/// Builds the pruned design space for `k`:
///  - innermost loops with TC <= 16 are left alone;
///  - other innermost loops get PARALLEL (proper divisors up to 128) and
///    PIPELINE {off, fg};
///  - loops with sub-loops get PIPELINE {off, cg, fg}, PARALLEL (divisors up
///    to min(128, TC) plus TC) and TILING (proper divisors);
/// with conditions that disable PARALLEL under cg, pin everything below an
/// fg-pipelined loop to its default, and keep TF * PF <= TC.
/// The result carries the kernel's loop hierarchy. Throws ModelError.
DesignSpace generate_design_space(const KernelModel& k);

/// Divisors d of n with lo <= d <= hi, ascending.
std::vector<std::int64_t> divisors_in(std::int64_t n, std::int64_t lo, std::int64_t hi);

struct SpaceSize {
  std::uint64_t grid_points = 0;
  /// Exact count, or a sampled estimate when the space is above the cap.
  double valid_points = 0.0;
  bool exact = true;
};

/// `cap` bounds the exhaustive count; above it the valid fraction is
/// estimated from `samples` uniform grid draws.
SpaceSize space_size(const DesignSpace& ds, std::uint64_t cap = 1'000'000, std::uint64_t samples = 20'000,
                     std::uint64_t seed = 1);

}  // namespace hlsdse
