// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hlsdse/design_space.hpp"

namespace hlsdse {

enum class StreamDirection : std::uint8_t { kLoad, kStore };

struct MemStream {
  std::string array_id;
  std::int64_t bytes_per_iter = 1;
  StreamDirection direction = StreamDirection::kLoad;

  friend bool operator==(const MemStream&, const MemStream&) = default;
};

/// Logic cost of one hardware copy of a loop body.
struct AreaCost {
  double lut = 0.0;
  double ff = 0.0;
  double dsp = 0.0;

  friend bool operator==(const AreaCost&, const AreaCost&) = default;
};

struct LoopNode {
  std::string id;
  std::int64_t trip_count = 1;
  /// Cycles per iteration of straight-line body work, excluding sub-loops.
  std::int64_t compute_cycles = 0;
  std::vector<MemStream> mem_streams;
  /// Parallel factor -> initiation interval under fine-grained pipelining.
  std::map<std::int64_t, std::int64_t> quirks;
  /// Parallel factor -> multiplier on the per-copy area (logic sharing or
  /// routing blowup the linear model misses).
  std::map<std::int64_t, double> area_scale;
  /// Defaults to a cost proportional to compute_cycles when absent.
  std::optional<AreaCost> area;
  std::vector<LoopNode> children;

  bool innermost() const { return children.empty(); }

  friend bool operator==(const LoopNode&, const LoopNode&) = default;
};

struct ResourceBudget {
  double lut = 1.0;
  double ff = 1.0;
  double dsp = 1.0;
  double bram = 1.0;

  friend bool operator==(const ResourceBudget&, const ResourceBudget&) = default;
};

/// A kernel described by its loop hierarchy. `top` is the kernel function
/// itself (trip count 1); its children are the top-level loops.
struct KernelModel {
  std::string name;
  LoopNode top;
  ResourceBudget resource_budget;
  std::int64_t bus_bytes_per_cycle = 64;
  /// Unroll volume at which the simulated synthesis exceeds its time budget.
  std::int64_t hls_effort_limit = 4096;
  /// Bytes held by one BRAM block.
  std::int64_t bram_block_bytes = 2304;

  /// Loops only (the function node is excluded).
  LoopHierarchy hierarchy() const;
  /// Null if `id` is not a loop of this model.
  const LoopNode* find_loop(std::string_view id) const;

  friend bool operator==(const KernelModel&, const KernelModel&) = default;
};

inline constexpr std::string_view kKernelModelHeader = "autodse-kernel-model v1";

/// Throws ModelError for zero trip counts, duplicate ids, or non-positive
/// capacities.
void check_model(const KernelModel& k);

/// Parses the versioned kernel-model text format (docs/kernel-model-format.md).
/// Throws SyntaxError or ModelError.
KernelModel parse_kernel_model(std::string_view text);
std::string serialize_kernel_model(const KernelModel& k);

/// Body cost used when a loop carries no explicit `area` entry.
AreaCost effective_area(const LoopNode& loop);

}  // namespace hlsdse
