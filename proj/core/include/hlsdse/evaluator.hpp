// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdint>
#include <future>
#include <mutex>
#include <string>
#include <unordered_map>

#include "hlsdse/design_space.hpp"
#include "hlsdse/eval_result.hpp"
#include "hlsdse/result_cache.hpp"

namespace hlsdse {

/// Black-box synthesis backend: config in, QoR out.
///
/// Implementations must be callable concurrently and must report
/// infeasibility through EvalResult::status rather than by throwing.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual EvalResult evaluate(const Config& cfg) = 0;
};

/// Puts a ResultCache in front of a backend. Concurrent requests for the
/// same config share one backend call.
class CachedEvaluator final : public Evaluator {
 public:
  struct Lookup {
    EvalResult result;
    bool from_backend = false;
  };

  CachedEvaluator(Evaluator& backend, ResultCache& cache) : backend_(backend), cache_(cache) {}

  EvalResult evaluate(const Config& cfg) override { return lookup(cfg).result; }
  Lookup lookup(const Config& cfg);

  std::uint64_t backend_calls() const { return backend_calls_.load(); }
  std::uint64_t cache_hits() const { return cache_hits_.load(); }
  ResultCache& cache() { return cache_; }

 private:
  Evaluator& backend_;
  ResultCache& cache_;
  std::mutex inflight_mutex_;
  std::unordered_map<std::string, std::shared_future<EvalResult>> inflight_;
  std::atomic<std::uint64_t> backend_calls_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
};

}  // namespace hlsdse
