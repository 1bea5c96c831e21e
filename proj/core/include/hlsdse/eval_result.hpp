// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace hlsdse {

inline constexpr double kDefaultUtilThreshold = 0.8;

/// Fraction of the budget used per resource. May exceed 1.
struct ResourceUtil {
  double lut = 0.0;
  double ff = 0.0;
  double dsp = 0.0;
  double bram = 0.0;

  std::array<double, 4> values() const { return {lut, ff, dsp, bram}; }
  double max() const;

  friend bool operator==(const ResourceUtil&, const ResourceUtil&) = default;
};

enum class Bottleneck : std::uint8_t { kCompute, kMemory };
std::string_view to_string(Bottleneck b);

/// One statement of the hierarchical cycle report.
struct HierarchyNode {
  std::string stmt_id;
  std::uint64_t latency = 0;
  Bottleneck bottleneck = Bottleneck::kCompute;
  std::vector<HierarchyNode> children;

  const HierarchyNode* find(std::string_view id) const;

  friend bool operator==(const HierarchyNode&, const HierarchyNode&) = default;
};

enum class EvalStatus : std::uint8_t { kOk, kTimeout, kOverUtil, kInvalid };
std::string_view to_string(EvalStatus s);
std::optional<EvalStatus> parse_eval_status(std::string_view s);

inline constexpr std::uint64_t kInfiniteCycles = std::numeric_limits<std::uint64_t>::max();

struct EvalResult {
  EvalStatus status = EvalStatus::kInvalid;
  /// kInfiniteCycles unless status is kOk.
  std::uint64_t cycles = kInfiniteCycles;
  ResourceUtil util;
  /// Present for kOk results.
  std::optional<HierarchyNode> report;
  /// Duration of the evaluation (simulated for the mock backend).
  double eval_seconds = 0.0;
  /// Human-readable cause for non-OK results.
  std::string message;

  bool ok() const { return status == EvalStatus::kOk; }

  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

void to_json(nlohmann::json& j, const ResourceUtil& u);
void from_json(const nlohmann::json& j, ResourceUtil& u);
void to_json(nlohmann::json& j, const HierarchyNode& n);
void from_json(const nlohmann::json& j, HierarchyNode& n);
void to_json(nlohmann::json& j, const EvalResult& r);
void from_json(const nlohmann::json& j, EvalResult& r);

}  // namespace hlsdse
