// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "algorithm_checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hlsdse::testing {

namespace {

class KeyCounter final : public Evaluator {
 public:
  explicit KeyCounter(Evaluator& inner) : inner_(inner) {}
  EvalResult evaluate(const Config& cfg) override {
    ++counts_[cfg.key()];
    ++calls_;
    return inner_.evaluate(cfg);
  }
  const std::unordered_map<std::string, int>& counts() const { return counts_; }
  std::uint64_t calls() const { return calls_; }

 private:
  Evaluator& inner_;
  std::unordered_map<std::string, int> counts_;
  std::uint64_t calls_ = 0;
};

std::set<std::string> expected_sweep(const DesignSpace& ds, const Config& point, const std::string& focused) {
  std::set<std::string> out;
  for (const auto& v : eval_options(ds, focused, point)) {
    Config c = point;
    c.set(focused, v);
    if (!repair(ds, c) || c.at(focused) != v || !validate(ds, c).valid()) continue;
    out.insert(c.key());
  }
  return out;
}

std::uint64_t fnv(const std::string& s, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

TrialCheck check_bottleneck_run(const DesignSpace& ds, Evaluator& backend, const Budget& budget) {
  TrialCheck out;
  auto fail = [&](const std::string& msg) {
    if (out.failure.empty()) out.failure = msg;
  };

  KeyCounter counter(backend);
  std::vector<std::set<std::string>> sweeps;
  std::uint64_t running_best = kInfiniteCycles;
  std::uint64_t next_index = 0;
  double max_eval_seconds = 0;
  double prev_elapsed = 0;

  ExploreOptions opts;
  opts.budget = budget;
  opts.on_expand = [&](const ExpandEvent& ev) {
    ++out.expansions;
    for (std::size_t n = 0; n < ev.heap_tuned_sizes.size(); ++n) {
      for (auto size : ev.heap_tuned_sizes[n]) {
        if (size != n) {
          fail("level heap " + std::to_string(n) + " holds a point with " + std::to_string(size) + " tuned");
        }
      }
    }
    std::size_t deepest = 0;
    for (std::size_t n = 0; n < ev.heap_tuned_sizes.size(); ++n) {
      if (!ev.heap_tuned_sizes[n].empty()) deepest = n;
    }
    if (ev.level != deepest) {
      fail("expanded level " + std::to_string(ev.level) + " but deepest is " + std::to_string(deepest));
    }
    if (ev.point->tuned.size() != ev.level) fail("expanded point's tuned count differs from its level");
    for (const auto& [name, value] : ev.point->tuned) {
      if (name == ev.focused) fail("focused parameter " + name + " is already tuned");
    }
    std::set<std::string> offered;
    for (const auto& c : ev.candidates) {
      if (!offered.insert(c.key()).second) fail("sweep offers " + c.key() + " twice");
    }
    if (offered != expected_sweep(ds, ev.point->config, ev.focused)) fail("sweep of " + ev.focused + " is incomplete");
    sweeps.push_back(std::move(offered));
  };
  opts.on_evaluation = [&](const TraceEntry& e) {
    if (e.eval_index != next_index++) fail("trace index gap");
    if (e.status == EvalStatus::kOk) running_best = std::min(running_best, e.cycles);
    if (e.best_so_far != running_best) fail("best-so-far " + std::to_string(e.best_so_far) + " != running minimum");
    max_eval_seconds = std::max(max_eval_seconds, e.elapsed_seconds - prev_elapsed);
    prev_elapsed = e.elapsed_seconds;
  };

  out.result = explore_bottleneck(ds, counter, opts);
  out.backend_calls = counter.calls();

  for (const auto& [key, n] : counter.counts()) {
    if (n > 1) fail("config " + key + " reached the backend " + std::to_string(n) + " times");
  }
  std::unordered_set<std::string> evaluated;
  for (const auto& e : out.result.trace) evaluated.insert(e.config_key);
  if (evaluated.size() != out.result.trace.size()) fail("duplicate config in trace");
  for (std::size_t i = 1; i < out.result.trace.size(); ++i) {
    if (out.result.trace[i].best_so_far > out.result.trace[i - 1].best_so_far) fail("best-so-far increased");
  }
  // Every sweep is fully evaluated, except the one cut short by the budget.
  const std::size_t full = out.result.completed || sweeps.empty() ? sweeps.size() : sweeps.size() - 1;
  for (std::size_t i = 0; i < full; ++i) {
    for (const auto& k : sweeps[i]) {
      if (!evaluated.contains(k)) fail("swept candidate " + k + " was never evaluated");
    }
  }
  if (budget.evaluations && out.result.trace.size() > std::max<std::uint64_t>(*budget.evaluations, 1)) {
    fail("evaluation budget overshot by more than one");
  }
  if (budget.seconds && budget.clock == BudgetClock::kSimulated &&
      out.result.elapsed_seconds > std::max(*budget.seconds, 0.0) + max_eval_seconds + 1e-9) {
    fail("time budget overshot by more than one evaluation");
  }
  if (out.result.feasible) {
    if (out.result.best_result.cycles != running_best) fail("reported best differs from trace minimum");
  } else if (running_best != kInfiniteCycles) {
    fail("feasible evaluation seen but result flagged infeasible");
  }
  return out;
}

SyntheticEvaluator::SyntheticEvaluator(const DesignSpace& ds, std::uint64_t seed) : seed_(seed) {
  std::set<std::string> scopes;
  for (const auto& p : ds.params()) scopes.insert(p.scope);
  scopes_.assign(scopes.begin(), scopes.end());
}

EvalResult SyntheticEvaluator::evaluate(const Config& cfg) {
  const std::string key = cfg.key();
  const std::uint64_t h = fnv(key, seed_);
  EvalResult r;
  r.eval_seconds = 60.0 + static_cast<double>(h % 600);
  if (h % 9 == 0) {
    r.status = (h / 9) % 2 == 0 ? EvalStatus::kTimeout : EvalStatus::kOverUtil;
    return r;
  }
  r.status = EvalStatus::kOk;
  r.util = {static_cast<double>(h % 70) / 100.0, static_cast<double>((h >> 8) % 70) / 100.0,
            static_cast<double>((h >> 16) % 70) / 100.0, static_cast<double>((h >> 24) % 70) / 100.0};
  HierarchyNode top{"top", 0, Bottleneck::kCompute, {}};
  for (const auto& s : scopes_) {
    const std::uint64_t hs = fnv(s, h);
    // Some statements report zero latency; the analysis must skip them.
    const std::uint64_t lat = hs % 11 == 0 ? 0 : 1 + hs % 5000;
    top.children.push_back({s, lat, (hs >> 20) % 2 ? Bottleneck::kMemory : Bottleneck::kCompute, {}});
    top.latency += lat;
  }
  top.latency = std::max<std::uint64_t>(top.latency, 1);
  r.cycles = top.latency;
  r.report = std::move(top);
  return r;
}

}  // namespace hlsdse::testing
