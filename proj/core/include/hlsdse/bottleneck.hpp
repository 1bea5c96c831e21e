// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hlsdse/design_space.hpp"
#include "hlsdse/eval_result.hpp"

namespace hlsdse {

/// Root-to-leaf walk through the cycle report.
struct CriticalPath {
  std::vector<std::string> nodes;
  /// Latency and bottleneck of the last node.
  std::uint64_t latency = 0;
  Bottleneck bottleneck = Bottleneck::kCompute;

  friend bool operator==(const CriticalPath&, const CriticalPath&) = default;
};

/// One path per leaf, from a DFS that visits children by descending latency
/// (ties by stmt_id). The first path follows the hottest child at every level.
std::vector<CriticalPath> build_paths(const HierarchyNode& report);

/// Loop id -> parameters scoped to it, in declaration order.
std::map<std::string, std::vector<std::string>, std::less<>> stmt_param_map(const DesignSpace& ds);

/// Priority of one statement's parameters for a bottleneck kind. A PIPELINE
/// parameter counts as its fg facet or its cg facet, whichever comes first
/// for `kind`. Parameters matching no priority slot keep their relative
/// order at the end.
std::vector<std::string> order_for_type(Bottleneck kind, const DesignSpace& ds, const std::vector<std::string>& params);

struct RankedParam {
  std::string name;
  std::size_t rank = 0;

  friend bool operator==(const RankedParam&, const RankedParam&) = default;
};
using ParamOrder = std::vector<RankedParam>;

/// Untuned parameters, most impactful first: paths in criticality order,
/// statements innermost-out, zero-latency statements skipped.
ParamOrder analyze(const HierarchyNode& report, const DesignSpace& ds, const std::set<std::string>& tuned);

}  // namespace hlsdse
