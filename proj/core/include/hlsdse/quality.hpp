// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "hlsdse/eval_result.hpp"

namespace hlsdse {

/// Σ 2^(1/(1-u)). Every term is at least 2 and diverges as u -> 1.
/// Throws DomainError if some u is >= 1 or negative.
double util_penalty(std::span<const double> utils);
double util_penalty(const ResourceUtil& u);

/// How a candidate relates to the point it was derived from.
enum class FdKind : std::uint8_t {
  /// Fewer cycles at no extra penalty (includes the zero-denominator case).
  kPureGain,
  /// Fewer cycles for more penalty; ranked by g.
  kTradeOff,
  /// No cycle reduction.
  kNoGain,
};

struct FiniteDifference {
  FdKind kind = FdKind::kNoGain;
  /// Δcycles / Δpenalty. Zero when the denominator is zero.
  double g = 0.0;
  double delta_cycles = 0.0;
  double delta_penalty = 0.0;
};

/// Coordinate value of moving from `curr` to `cand`. Both must be OK;
/// throws DomainError otherwise.
FiniteDifference finite_difference(const EvalResult& curr, const EvalResult& cand);

enum class QualityTarget : std::uint8_t { kPerformance, kResource, kFiniteDifference };
std::string_view to_string(QualityTarget t);

/// Rank key of a candidate. Lower is better under compare().
struct Quality {
  QualityTarget target = QualityTarget::kFiniteDifference;
  /// 0 pure gain, 1 trade-off, 2 no gain, 3 infeasible. Performance and
  /// resource targets use 0 and 3 only.
  int tier = 0;
  /// g, cycles, or penalty depending on target.
  double value = 0.0;
  std::uint64_t cycles = kInfiniteCycles;
  std::string config_key;
};

Quality performance_quality(const EvalResult& cand, std::string config_key);
Quality resource_quality(const EvalResult& cand, std::string config_key);
Quality fd_quality(const EvalResult& curr, const EvalResult& cand, std::string config_key);
Quality make_quality(QualityTarget target, const EvalResult& curr, const EvalResult& cand, std::string config_key);

/// Total order: tier, then value, then cycles, then config key.
/// Throws TargetMismatch when targets differ.
std::weak_ordering compare(const Quality& a, const Quality& b);
inline bool better(const Quality& a, const Quality& b) { return compare(a, b) < 0; }

}  // namespace hlsdse
