// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/quality.hpp"

#include <cmath>

#include "hlsdse/errors.hpp"

namespace hlsdse {

namespace {

constexpr int kPureGainTier = 0;
constexpr int kTradeOffTier = 1;
constexpr int kNoGainTier = 2;
constexpr int kInfeasibleTier = 3;

Quality infeasible(QualityTarget target, std::string key) {
  Quality q;
  q.target = target;
  q.tier = kInfeasibleTier;
  q.value = 0.0;
  q.config_key = std::move(key);
  return q;
}

}  // namespace

double util_penalty(std::span<const double> utils) {
  double sum = 0.0;
  for (double u : utils) {
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("utilization " + std::to_string(u) + " outside [0, 1)");
    sum += std::exp2(1.0 / (1.0 - u));
  }
  return sum;
}

double util_penalty(const ResourceUtil& u) {
  const auto v = u.values();
  return util_penalty(std::span<const double>(v));
}

FiniteDifference finite_difference(const EvalResult& curr, const EvalResult& cand) {
  if (!curr.ok() || !cand.ok()) throw DomainError("finite difference needs two OK results");
  FiniteDifference fd;
  fd.delta_cycles = static_cast<double>(cand.cycles) - static_cast<double>(curr.cycles);
  fd.delta_penalty = util_penalty(cand.util) - util_penalty(curr.util);
  fd.g = fd.delta_penalty == 0.0 ? 0.0 : fd.delta_cycles / fd.delta_penalty;
  if (fd.delta_cycles >= 0.0) {
    fd.kind = FdKind::kNoGain;
  } else if (fd.delta_penalty <= 0.0) {
    fd.kind = FdKind::kPureGain;
  } else {
    fd.kind = FdKind::kTradeOff;
  }
  return fd;
}

std::string_view to_string(QualityTarget t) {
  switch (t) {
    case QualityTarget::kPerformance:
      return "performance";
    case QualityTarget::kResource:
      return "resource";
    case QualityTarget::kFiniteDifference:
      return "finite-difference";
  }
  return "?";
}

Quality performance_quality(const EvalResult& cand, std::string config_key) {
  if (!cand.ok()) return infeasible(QualityTarget::kPerformance, std::move(config_key));
  Quality q;
  q.target = QualityTarget::kPerformance;
  q.value = static_cast<double>(cand.cycles);
  q.cycles = cand.cycles;
  q.config_key = std::move(config_key);
  return q;
}

Quality resource_quality(const EvalResult& cand, std::string config_key) {
  if (!cand.ok()) return infeasible(QualityTarget::kResource, std::move(config_key));
  Quality q;
  q.target = QualityTarget::kResource;
  q.value = util_penalty(cand.util);
  q.cycles = cand.cycles;
  q.config_key = std::move(config_key);
  return q;
}

Quality fd_quality(const EvalResult& curr, const EvalResult& cand, std::string config_key) {
  if (!cand.ok()) return infeasible(QualityTarget::kFiniteDifference, std::move(config_key));
  const auto fd = finite_difference(curr, cand);
  Quality q;
  q.target = QualityTarget::kFiniteDifference;
  q.cycles = cand.cycles;
  q.config_key = std::move(config_key);
  switch (fd.kind) {
    case FdKind::kPureGain:
      q.tier = kPureGainTier;
      break;
    case FdKind::kTradeOff:
      q.tier = kTradeOffTier;
      q.value = fd.g;
      break;
    case FdKind::kNoGain:
      q.tier = kNoGainTier;
      break;
  }
  return q;
}

Quality make_quality(QualityTarget target, const EvalResult& curr, const EvalResult& cand, std::string config_key) {
  switch (target) {
    case QualityTarget::kPerformance:
      return performance_quality(cand, std::move(config_key));
    case QualityTarget::kResource:
      return resource_quality(cand, std::move(config_key));
    case QualityTarget::kFiniteDifference:
      break;
  }
  return fd_quality(curr, cand, std::move(config_key));
}

std::weak_ordering compare(const Quality& a, const Quality& b) {
  if (a.target != b.target) {
    throw TargetMismatch("cannot compare " + std::string(to_string(a.target)) + " and " +
                         std::string(to_string(b.target)) + " qualities");
  }
  if (auto c = a.tier <=> b.tier; c != 0) return c;
  if (a.value < b.value) return std::weak_ordering::less;
  if (b.value < a.value) return std::weak_ordering::greater;
  if (auto c = a.cycles <=> b.cycles; c != 0) return c;
  return a.config_key <=> b.config_key;
}

}  // namespace hlsdse
