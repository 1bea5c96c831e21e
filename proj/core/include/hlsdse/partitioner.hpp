// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hlsdse/design_space.hpp"
#include "hlsdse/eval_result.hpp"
#include "hlsdse/evaluator.hpp"

namespace hlsdse {

inline constexpr std::uint64_t kDefaultPartitionCap = 4096;

/// The two halves of a non-innermost loop's pipeline domain.
enum class ModeHalf : std::uint8_t { kFg, kOffCg };
std::string_view to_string(ModeHalf h);

struct Partition {
  std::uint64_t id = 0;
  /// Loop id -> half. Bit i of `id` is set when the i-th split loop is kFg.
  std::map<std::string, ModeHalf> mode_split;
  DesignSpace space;
};

/// PIPELINE parameters that take part in the split, in declaration order:
/// those scoped to non-innermost loops, or, without a loop tree, those that
/// offer cg.
std::vector<std::string> split_parameters(const DesignSpace& ds);

/// All 2^m partitions in id order. Throws TooManyPartitions above `cap`.
std::vector<Partition> enumerate_partitions(const DesignSpace& ds, std::uint64_t cap = kDefaultPartitionCap);

struct PartitionProfile {
  std::uint64_t partition_id = 0;
  bool feasible = false;
  /// +inf when infeasible.
  double cycles = 0.0;
  double penalty = 0.0;
  EvalStatus status = EvalStatus::kInvalid;
  /// Empty when the partition has no valid configuration.
  Config config;
};

/// The partition's cheapest point: factors at their minimum, PIPELINE at the
/// first option of its half. Nullopt when the partition is empty.
std::optional<Config> minimized_config(const DesignSpace& partition_space);

/// One evaluation. Evaluator exceptions become infeasible profiles.
PartitionProfile profile_partition(const Partition& p, Evaluator& evaluator);

struct KMeansResult {
  std::vector<std::size_t> assignment;
  /// In the original (unnormalized) feature units.
  std::vector<std::array<double, 2>> centroids;
  /// Within-cluster sum of squares (normalized units) after each iteration.
  std::vector<double> wcss;
};

inline constexpr int kKMeansMaxIterations = 100;

/// Lloyd's algorithm on z-scored features with k-means++ seeding. `k` is
/// clamped to the number of distinct points.
KMeansResult kmeans(const std::vector<std::array<double, 2>>& points, std::size_t k, std::uint64_t seed);

/// At most `t` partition ids, one per cluster, ascending.
std::vector<std::uint64_t> select_representatives(const std::vector<PartitionProfile>& profiles, std::size_t t,
                                                  std::uint64_t seed);

}  // namespace hlsdse
