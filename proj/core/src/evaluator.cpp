// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/evaluator.hpp"

namespace hlsdse {

CachedEvaluator::Lookup CachedEvaluator::lookup(const Config& cfg) {
  const std::string key = cfg.key();
  if (auto hit = cache_.get(key)) {
    ++cache_hits_;
    return {std::move(*hit), false};
  }

  std::promise<EvalResult> promise;
  {
    std::unique_lock lock(inflight_mutex_);
    if (auto it = inflight_.find(key); it != inflight_.end()) {
      auto shared = it->second;
      lock.unlock();
      ++cache_hits_;
      return {shared.get(), false};
    }
    // Re-check under the lock: the owner of a finished flight has already
    // stored the result and removed its entry.
    if (auto hit = cache_.get(key)) {
      ++cache_hits_;
      return {std::move(*hit), false};
    }
    inflight_.emplace(key, promise.get_future().share());
  }

  auto finish = [&] {
    std::lock_guard lock(inflight_mutex_);
    inflight_.erase(key);
  };
  try {
    ++backend_calls_;
    EvalResult stored = cache_.put(cfg, backend_.evaluate(cfg));
    promise.set_value(stored);
    finish();
    return {std::move(stored), true};
  } catch (...) {
    promise.set_exception(std::current_exception());
    finish();
    throw;
  }
}

}  // namespace hlsdse
