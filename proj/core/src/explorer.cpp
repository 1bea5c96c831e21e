// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/explorer.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hlsdse/bottleneck.hpp"
#include "hlsdse/errors.hpp"

namespace hlsdse {

namespace {

/// Bookkeeping shared by all search strategies: run-local memo, budget,
/// trace, and the incumbent.
class Session {
 public:
  Session(Evaluator& evaluator, const ExploreOptions& opts)
      : evaluator_(evaluator), opts_(opts), start_(std::chrono::steady_clock::now()) {}

  /// Result for `cfg`, or nullopt when the budget or the stop flag forbids
  /// a new evaluation. Configs already seen in this run are free.
  std::optional<EvalResult> evaluate(const Config& cfg, bool force = false) {
    std::string key = cfg.key();
    if (auto it = seen_.find(key); it != seen_.end()) return it->second;
    if (!force && exhausted()) return std::nullopt;

    EvalResult r = evaluator_.evaluate(cfg);
    simulated_ += r.eval_seconds;
    if (r.ok() && (!best_ || r.cycles < best_result_.cycles ||
                   (r.cycles == best_result_.cycles && key < best_->key()))) {
      best_ = cfg;
      best_result_ = r;
    }
    TraceEntry e;
    e.eval_index = trace_.size();
    e.elapsed_seconds = elapsed();
    e.config_key = key;
    e.status = r.status;
    e.cycles = r.cycles;
    e.best_so_far = best_ ? best_result_.cycles : kInfiniteCycles;
    trace_.push_back(e);
    if (opts_.on_evaluation) opts_.on_evaluation(trace_.back());
    seen_.emplace(std::move(key), r);
    return r;
  }

  bool exhausted() const {
    if (opts_.stop != nullptr && opts_.stop->load()) return true;
    const Budget& b = opts_.budget;
    if (b.evaluations && trace_.size() >= *b.evaluations) return true;
    if (b.seconds && elapsed() >= *b.seconds) return true;
    return false;
  }

  double elapsed() const {
    if (opts_.budget.clock == BudgetClock::kSimulated) return simulated_;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  ExploreResult finish(const Config& fallback, const EvalResult& fallback_result, bool completed) {
    ExploreResult out;
    out.feasible = best_.has_value();
    out.best = best_ ? *best_ : fallback;
    out.best_result = best_ ? best_result_ : fallback_result;
    out.trace = std::move(trace_);
    out.elapsed_seconds = elapsed();
    out.completed = completed;
    return out;
  }

 private:
  Evaluator& evaluator_;
  const ExploreOptions& opts_;
  std::chrono::steady_clock::time_point start_;
  double simulated_ = 0.0;
  std::unordered_map<std::string, EvalResult> seen_;
  std::vector<TraceEntry> trace_;
  std::optional<Config> best_;
  EvalResult best_result_;
};

Config starting_point(const DesignSpace& ds) {
  auto cfg = default_config(ds);
  if (!cfg) throw NoFeasiblePoint("design space has no valid starting configuration");
  return *cfg;
}

Quality step_quality(const EvalResult& parent, const EvalResult& cand, std::string key) {
  if (parent.ok() || !cand.ok()) return fd_quality(parent, cand, std::move(key));
  // No finite difference from an infeasible parent; any feasible step is a
  // gain and cycles decide among them.
  Quality q;
  q.target = QualityTarget::kFiniteDifference;
  q.tier = 0;
  q.cycles = cand.cycles;
  q.config_key = std::move(key);
  return q;
}

Quality root_quality(const EvalResult& r, std::string key) {
  Quality q;
  q.target = QualityTarget::kFiniteDifference;
  q.tier = r.ok() ? 0 : 3;
  q.cycles = r.cycles;
  q.config_key = std::move(key);
  return q;
}

/// Parameter names most important first. Without a report (infeasible
/// point) every untuned parameter is offered in evaluation order.
std::vector<std::string> parameter_order(const DesignSpace& ds, const EvalResult& r,
                                         const std::set<std::string>& tuned) {
  std::vector<std::string> out;
  if (r.report) {
    for (auto& p : analyze(*r.report, ds, tuned)) out.push_back(std::move(p.name));
  } else {
    for (auto i : ds.eval_order()) {
      if (!tuned.contains(ds.params()[i].name)) out.push_back(ds.params()[i].name);
    }
  }
  return out;
}

std::vector<std::string> as_stack(std::vector<std::string> order) {
  std::reverse(order.begin(), order.end());
  return order;
}

/// Copy of `base` with `name` set to `value` and dependents repaired;
/// nullopt if no valid config results.
std::optional<Config> manipulate(const DesignSpace& ds, const Config& base, const std::string& name,
                                 const OptionValue& value) {
  Config c = base;
  c.set(name, value);
  if (!repair(ds, c)) return std::nullopt;
  if (c.at(name) != value) return std::nullopt;
  if (!validate(ds, c).valid()) return std::nullopt;
  return c;
}

struct HeapEntry {
  std::shared_ptr<DesignPoint> point;
  std::uint64_t seq = 0;
};

struct HeapOrder {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (auto c = compare(a.point->quality, b.point->quality); c != 0) return c < 0;
    return a.seq < b.seq;
  }
};

using LevelHeap = std::set<HeapEntry, HeapOrder>;

std::string point_identity(const DesignPoint& p) {
  std::vector<std::string> names;
  for (const auto& [name, value] : p.tuned) names.push_back(name);
  std::sort(names.begin(), names.end());
  std::string id = p.config.key();
  for (const auto& n : names) id += "|" + n;
  return id;
}

}  // namespace

void require_feasible(const ExploreResult& r) {
  if (!r.feasible) throw NoFeasiblePoint("no evaluated configuration was feasible");
}

ExploreResult explore_bottleneck(const DesignSpace& ds, Evaluator& evaluator, const ExploreOptions& opts) {
  Session session(evaluator, opts);
  const Config start = starting_point(ds);
  const EvalResult start_result = *session.evaluate(start, /*force=*/true);

  std::vector<LevelHeap> levels(1);
  std::unordered_set<std::string> pushed;
  std::uint64_t seq = 0;
  {
    auto root = std::make_shared<DesignPoint>();
    root->config = start;
    root->result = start_result;
    root->quality = root_quality(start_result, start.key());
    root->children = as_stack(parameter_order(ds, start_result, {}));
    pushed.insert(point_identity(*root));
    levels[0].insert({std::move(root), seq++});
  }

  bool completed = false;
  while (true) {
    std::size_t level = levels.size();
    while (level > 0 && levels[level - 1].empty()) --level;
    if (level == 0) {
      completed = true;
      break;
    }
    --level;
    LevelHeap& heap = levels[level];
    auto top = heap.begin();
    DesignPoint& point = *top->point;
    if (point.children.empty()) {
      heap.erase(top);
      continue;
    }
    const std::string focused = point.children.back();
    point.children.pop_back();

    std::vector<Config> candidates;
    std::unordered_set<std::string> keys;
    for (const auto& option : eval_options(ds, focused, point.config)) {
      auto c = manipulate(ds, point.config, focused, option);
      if (c && keys.insert(c->key()).second) candidates.push_back(std::move(*c));
    }

    if (opts.on_expand) {
      ExpandEvent ev;
      ev.level = level;
      for (const auto& h : levels) {
        auto& sizes = ev.heap_tuned_sizes.emplace_back();
        for (const auto& e : h) sizes.push_back(e.point->tuned.size());
      }
      ev.point = &point;
      ev.focused = focused;
      ev.candidates = candidates;
      opts.on_expand(ev);
    }

    bool stopped = false;
    for (const auto& cand : candidates) {
      auto r = session.evaluate(cand);
      if (!r) {
        stopped = true;
        break;
      }
      // Infeasible candidates end this branch; the parameter stays tuned
      // for it.
      if (!r->ok()) continue;
      auto child = std::make_shared<DesignPoint>();
      child->config = cand;
      child->tuned = point.tuned;
      child->tuned.emplace_back(focused, cand.at(focused));
      child->result = *r;
      child->quality = step_quality(point.result, *r, cand.key());
      std::set<std::string> tuned;
      for (const auto& [name, value] : child->tuned) tuned.insert(name);
      child->children = as_stack(parameter_order(ds, *r, tuned));
      if (child->children.empty() || !pushed.insert(point_identity(*child)).second) continue;
      if (levels.size() <= level + 1) levels.resize(level + 2);
      levels[level + 1].insert({std::move(child), seq++});
    }
    if (stopped) break;
    if (point.children.empty()) levels[level].erase(top);
  }
  return session.finish(start, start_result, completed);
}

ExploreResult explore_coordinate_descent(const DesignSpace& ds, Evaluator& evaluator, const ExploreOptions& opts) {
  Session session(evaluator, opts);
  const Config start = starting_point(ds);
  const EvalResult start_result = *session.evaluate(start, /*force=*/true);

  Config cur = start;
  EvalResult cur_result = start_result;
  while (true) {
    std::vector<Config> candidates;
    std::unordered_set<std::string> keys{cur.key()};
    for (auto i : ds.eval_order()) {
      const std::string& name = ds.params()[i].name;
      auto next = next_value(ds, cur, name);
      if (!next) continue;
      auto c = manipulate(ds, cur, name, *next);
      if (c && keys.insert(c->key()).second) candidates.push_back(std::move(*c));
    }
    if (candidates.empty()) return session.finish(start, start_result, true);

    std::optional<Quality> best_q;
    std::optional<std::pair<Config, EvalResult>> best;
    for (const auto& cand : candidates) {
      auto r = session.evaluate(cand);
      if (!r) return session.finish(start, start_result, false);
      if (!r->ok()) continue;
      Quality q = step_quality(cur_result, *r, cand.key());
      if (!best_q || better(q, *best_q)) {
        best_q = std::move(q);
        best = std::make_pair(cand, *r);
      }
    }
    // Move only on a cycle reduction; otherwise this is a local optimum.
    if (!best_q || best_q->tier > 1) return session.finish(start, start_result, true);
    cur = std::move(best->first);
    cur_result = std::move(best->second);
  }
}

ExploreResult explore_random(const DesignSpace& ds, Evaluator& evaluator, std::uint64_t seed,
                             const ExploreOptions& opts) {
  Session session(evaluator, opts);
  const Config start = starting_point(ds);

  std::vector<std::vector<OptionValue>> axes;
  for (const auto& p : ds.params()) {
    auto values = p.options.items;
    if (std::find(values.begin(), values.end(), p.default_value) == values.end()) values.push_back(p.default_value);
    if (const auto* allowed = ds.restriction(p.name)) {
      std::erase_if(values, [&](const OptionValue& v) {
        return std::find(allowed->begin(), allowed->end(), v) == allowed->end();
      });
    }
    if (values.empty()) return session.finish(start, EvalResult{}, true);
    axes.push_back(std::move(values));
  }

  const std::uint64_t max_attempts =
      opts.budget.evaluations ? std::max<std::uint64_t>(10000, 200 * *opts.budget.evaluations) : 200000;
  std::mt19937_64 rng(seed);
  bool stopped = false;
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    Config cfg;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, axes[i].size() - 1);
      cfg.set(ds.params()[i].name, axes[i][pick(rng)]);
    }
    if (!validate(ds, cfg).valid()) continue;
    if (!session.evaluate(cfg)) {
      stopped = true;
      break;
    }
  }
  return session.finish(start, EvalResult{}, !stopped);
}

ExploreResult explore_exhaustive(const DesignSpace& ds, Evaluator& evaluator, std::uint64_t cap,
                                 const ExploreOptions& opts) {
  auto n = count_valid(ds, cap);
  if (!n) throw SpaceTooLarge("more than " + std::to_string(cap) + " valid configurations");
  Session session(evaluator, opts);
  for_each_valid(ds, [&](const Config& cfg) {
    session.evaluate(cfg, /*force=*/true);
    return true;
  });
  auto out = session.finish(Config{}, EvalResult{}, true);
  require_feasible(out);
  return out;
}

}  // namespace hlsdse
