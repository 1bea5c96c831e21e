// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/design_space.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "hlsdse/errors.hpp"

namespace hlsdse {

std::string_view to_string(PragmaKind kind) {
  switch (kind) {
    case PragmaKind::kPipeline:
      return "PIPELINE";
    case PragmaKind::kParallel:
      return "PARALLEL";
    case PragmaKind::kTiling:
      return "TILING";
  }
  return "?";
}

std::optional<PragmaKind> parse_pragma_kind(std::string_view token) {
  std::string upper(token);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "PIPELINE") return PragmaKind::kPipeline;
  if (upper == "PARALLEL") return PragmaKind::kParallel;
  if (upper == "TILING" || upper == "TILE") return PragmaKind::kTiling;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// LoopHierarchy

void LoopHierarchy::add(Loop loop) {
  if (loops_.count(loop.id) != 0) throw ModelError("duplicate loop id '" + loop.id + "'");
  if (!loop.parent.empty()) {
    auto parent = loops_.find(loop.parent);
    if (parent == loops_.end()) throw ModelError("loop '" + loop.id + "' has unknown parent '" + loop.parent + "'");
    parent->second.children.push_back(loop.id);
  }
  order_.push_back(loop.id);
  std::string id = loop.id;
  loops_.emplace(std::move(id), std::move(loop));
}

bool LoopHierarchy::contains(std::string_view id) const { return loops_.find(id) != loops_.end(); }

const LoopHierarchy::Loop& LoopHierarchy::at(std::string_view id) const {
  auto it = loops_.find(id);
  if (it == loops_.end()) throw ModelError("unknown loop '" + std::string(id) + "'");
  return it->second;
}

std::vector<std::string> LoopHierarchy::ancestors(std::string_view id) const {
  std::vector<std::string> out;
  for (const Loop* l = &at(id); !l->parent.empty(); l = &at(l->parent)) out.push_back(l->parent);
  return out;
}

std::vector<std::string> LoopHierarchy::descendants(std::string_view id) const {
  std::vector<std::string> out;
  std::vector<std::string> stack(at(id).children.rbegin(), at(id).children.rend());
  while (!stack.empty()) {
    std::string cur = std::move(stack.back());
    stack.pop_back();
    const auto& children = at(cur).children;
    stack.insert(stack.end(), children.rbegin(), children.rend());
    out.push_back(std::move(cur));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Config

const OptionValue& Config::at(std::string_view name) const {
  const auto* v = find(name);
  if (v == nullptr) throw InvalidConfig("config has no value for '" + std::string(name) + "'");
  return *v;
}

const OptionValue* Config::find(std::string_view name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

std::string Config::key() const {
  std::string out;
  for (const auto& [name, value] : values_) {
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += value.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// DesignSpace

namespace {

dsl::Sort sort_of(const OptionValue& v) { return v.is_factor() ? dsl::Sort::kInt : dsl::Sort::kMode; }

void check_param_values(const ParamSpec& p) {
  const bool wants_mode = p.kind == PragmaKind::kPipeline;
  auto check = [&](const OptionValue& v, const char* what) {
    if (v.is_mode() != wants_mode) {
      throw ModelError("parameter '" + p.name + "': " + what + " '" + v.to_string() + "' does not fit a " +
                       std::string(to_string(p.kind)) + " pragma");
    }
    if (v.is_factor() && v.factor() < 1) {
      throw ModelError("parameter '" + p.name + "': factor " + v.to_string() + " is below 1");
    }
  };
  check(p.default_value, "default");
  for (const auto& item : p.options.items) check(item, "option");
  if (p.options.items.empty()) throw ModelError("parameter '" + p.name + "' has an empty option list");
}

/// Returns one dependency cycle (in dependency direction) if any exists.
std::vector<std::string> find_cycle(const std::vector<ParamSpec>& params,
                                    const std::unordered_map<std::string, std::size_t>& index) {
  enum class Mark : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<Mark> mark(params.size(), Mark::kWhite);
  std::vector<std::size_t> stack;
  std::vector<std::string> cycle;

  std::function<bool(std::size_t)> visit = [&](std::size_t i) {
    mark[i] = Mark::kGrey;
    stack.push_back(i);
    for (const auto& dep : params[i].deps) {
      const std::size_t j = index.at(dep);
      if (mark[j] == Mark::kGrey) {
        auto start = std::find(stack.begin(), stack.end(), j);
        for (auto it = start; it != stack.end(); ++it) cycle.push_back(params[*it].name);
        return true;
      }
      if (mark[j] == Mark::kWhite && visit(j)) return true;
    }
    stack.pop_back();
    mark[i] = Mark::kBlack;
    return false;
  };
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (mark[i] == Mark::kWhite && visit(i)) return cycle;
  }
  return {};
}

}  // namespace

DesignSpace DesignSpace::build(std::vector<ParamSpec> params) {
  DesignSpace ds;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!ds.index_.emplace(params[i].name, i).second) {
      throw ModelError("duplicate parameter name '" + params[i].name + "'");
    }
  }

  for (auto& p : params) {
    check_param_values(p);
    auto deps = p.options.dependencies();
    for (const auto& d : deps) {
      if (ds.index_.count(d) == 0) throw UnknownIdentifier(d);
    }
    p.deps.assign(deps.begin(), deps.end());
  }

  if (auto cycle = find_cycle(params, ds.index_); !cycle.empty()) throw CyclicDependency(std::move(cycle));

  // Sort check: conditions must be boolean, elements must produce the
  // parameter's own sort.
  for (const auto& p : params) {
    const auto item_sort = sort_of(p.default_value);
    auto sort_of_name = [&](std::string_view name) -> std::optional<dsl::Sort> {
      if (name == p.options.variable) return item_sort;
      auto it = ds.index_.find(std::string(name));
      if (it == ds.index_.end()) return std::nullopt;
      return sort_of(params[it->second].default_value);
    };
    if (p.options.condition && p.options.condition->infer(sort_of_name) != dsl::Sort::kBool) {
      throw EvalError("condition of '" + p.name + "' is not boolean");
    }
    if (p.options.element.infer(sort_of_name) != item_sort) {
      throw EvalError("element expression of '" + p.name + "' does not produce a " +
                      std::string(dsl::to_string(item_sort)));
    }
  }

  // Kahn's algorithm, smallest declaration index first.
  std::vector<std::size_t> indegree(params.size(), 0);
  std::vector<std::vector<std::size_t>> dependents(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (const auto& d : params[i].deps) {
      dependents[ds.index_.at(d)].push_back(i);
      ++indegree[i];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    ds.eval_order_.push_back(i);
    for (std::size_t j : dependents[i]) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }

  ds.params_ = std::move(params);
  return ds;
}

const ParamSpec* DesignSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &params_[it->second];
}

const ParamSpec& DesignSpace::param(std::string_view name) const {
  const auto* p = find(name);
  if (p == nullptr) throw InvalidConfig("unknown parameter '" + std::string(name) + "'");
  return *p;
}

std::size_t DesignSpace::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InvalidConfig("unknown parameter '" + std::string(name) + "'");
  return it->second;
}

DesignSpace DesignSpace::with_loop_tree(LoopHierarchy tree) const {
  for (const auto& p : params_) {
    if (!tree.contains(p.scope)) {
      throw ModelError("parameter '" + p.name + "' is scoped to unknown loop '" + p.scope + "'");
    }
  }
  DesignSpace out = *this;
  out.loop_tree_ = std::move(tree);
  return out;
}

DesignSpace DesignSpace::restricted(std::string_view name, std::vector<OptionValue> allowed) const {
  (void)param(name);
  DesignSpace out = *this;
  out.restrictions_[std::string(name)] = std::move(allowed);
  return out;
}

const std::vector<OptionValue>* DesignSpace::restriction(std::string_view name) const {
  auto it = restrictions_.find(name);
  return it == restrictions_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Operations

namespace {

class BoundEnv final : public dsl::Env {
 public:
  BoundEnv(const Config& ctx, std::string_view variable) : ctx_(ctx), variable_(variable) {}

  void bind(const OptionValue& value) { value_ = value; }

  std::optional<OptionValue> lookup(std::string_view name) const override {
    if (name == variable_) return value_;
    if (const auto* v = ctx_.find(name)) return *v;
    return std::nullopt;
  }

 private:
  const Config& ctx_;
  std::string_view variable_;
  OptionValue value_;
};

OptionValue to_option(const ParamSpec& p, const dsl::Value& v) {
  if (std::holds_alternative<std::int64_t>(v)) {
    const auto f = std::get<std::int64_t>(v);
    if (p.kind == PragmaKind::kPipeline) throw EvalError("'" + p.name + "' produced an integer");
    if (f < 1) throw EvalError("'" + p.name + "' produced factor " + std::to_string(f) + " below 1");
    return OptionValue(f);
  }
  if (std::holds_alternative<PipelineMode>(v)) {
    if (p.kind != PragmaKind::kPipeline) throw EvalError("'" + p.name + "' produced a pipeline mode");
    return OptionValue(std::get<PipelineMode>(v));
  }
  throw EvalError("'" + p.name + "' produced a boolean option");
}

bool contains(const std::vector<OptionValue>& list, const OptionValue& v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

}  // namespace

std::vector<OptionValue> eval_options(const DesignSpace& ds, std::string_view name, const Config& ctx) {
  const ParamSpec& p = ds.param(name);
  BoundEnv env(ctx, p.options.variable);
  std::vector<OptionValue> out;
  out.reserve(p.options.items.size() + 1);
  for (const auto& item : p.options.items) {
    env.bind(item);
    if (p.options.condition) {
      const auto keep = p.options.condition->evaluate(env);
      if (!std::holds_alternative<bool>(keep)) throw EvalError("condition of '" + p.name + "' is not boolean");
      if (!std::get<bool>(keep)) continue;
    }
    const OptionValue value = to_option(p, p.options.element.evaluate(env));
    if (!contains(out, value)) out.push_back(value);
  }
  if (!contains(out, p.default_value)) out.insert(out.begin(), p.default_value);

  if (const auto* allowed = ds.restriction(name)) {
    std::erase_if(out, [&](const OptionValue& v) { return !contains(*allowed, v); });
  }
  return out;
}

std::optional<OptionValue> next_value(const DesignSpace& ds, const Config& cfg, std::string_view name) {
  const auto options = eval_options(ds, name, cfg);
  const auto& current = cfg.at(name);
  auto it = std::find(options.begin(), options.end(), current);
  if (it == options.end()) {
    throw InvalidConfig("value " + current.to_string() + " of '" + std::string(name) + "' is not a current option");
  }
  if (++it == options.end()) return std::nullopt;
  return *it;
}

Validation validate(const DesignSpace& ds, const Config& cfg) {
  Validation verdict;
  for (const auto& [name, value] : cfg) {
    if (ds.find(name) == nullptr) verdict.violations.push_back({name, "not a parameter of the design space"});
  }
  for (std::size_t idx : ds.eval_order()) {
    const auto& p = ds.params()[idx];
    const auto* value = cfg.find(p.name);
    if (value == nullptr) {
      verdict.violations.push_back({p.name, "missing"});
      continue;
    }
    try {
      const auto options = eval_options(ds, p.name, cfg);
      if (!contains(options, *value)) {
        verdict.violations.push_back({p.name, "value " + value->to_string() + " is not a current option"});
      }
    } catch (const EvalError& e) {
      verdict.violations.push_back({p.name, e.what()});
    }
  }
  return verdict;
}

namespace {

std::optional<OptionValue> pick_reset_value(const ParamSpec& p, const std::vector<OptionValue>& options) {
  if (options.empty()) return std::nullopt;
  if (contains(options, p.default_value)) return p.default_value;
  return options.front();
}

}  // namespace

std::optional<Config> default_config(const DesignSpace& ds) {
  Config cfg;
  for (std::size_t idx : ds.eval_order()) {
    const auto& p = ds.params()[idx];
    auto value = pick_reset_value(p, eval_options(ds, p.name, cfg));
    if (!value) return std::nullopt;
    cfg.set(p.name, *value);
  }
  return cfg;
}

bool repair(const DesignSpace& ds, Config& cfg) {
  for (std::size_t idx : ds.eval_order()) {
    const auto& p = ds.params()[idx];
    const auto options = eval_options(ds, p.name, cfg);
    const auto* current = cfg.find(p.name);
    if (current != nullptr && contains(options, *current)) continue;
    auto value = pick_reset_value(p, options);
    if (!value) return false;
    cfg.set(p.name, *value);
  }
  return true;
}

std::uint64_t grid_points(const DesignSpace& ds) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto& p : ds.params()) {
    std::vector<OptionValue> values = p.options.items;
    if (!contains(values, p.default_value)) values.push_back(p.default_value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (const auto* allowed = ds.restriction(p.name)) {
      std::erase_if(values, [&](const OptionValue& v) { return !contains(*allowed, v); });
    }
    const std::uint64_t n = values.size();
    if (n == 0) return 0;
    total = total > kMax / n ? kMax : total * n;
  }
  return total;
}

void for_each_valid(const DesignSpace& ds, const std::function<bool(const Config&)>& visit) {
  const auto& order = ds.eval_order();
  Config cfg;
  std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return visit(cfg);
    const auto& p = ds.params()[order[depth]];
    for (const auto& option : eval_options(ds, p.name, cfg)) {
      cfg.set(p.name, option);
      if (!descend(depth + 1)) return false;
    }
    return true;
  };
  descend(0);
}

std::vector<Config> enumerate_valid(const DesignSpace& ds, std::size_t limit, bool exhaustive) {
  if (limit == 0) throw SpaceTooLarge("enumeration limit must be positive");
  if (exhaustive && grid_points(ds) > limit) {
    throw SpaceTooLarge("grid of " + std::to_string(grid_points(ds)) + " points exceeds limit " +
                        std::to_string(limit));
  }
  std::vector<Config> out;
  for_each_valid(ds, [&](const Config& cfg) {
    out.push_back(cfg);
    return out.size() < limit;
  });
  return out;
}

std::optional<std::uint64_t> count_valid(const DesignSpace& ds, std::uint64_t cap) {
  std::uint64_t count = 0;
  bool over = false;
  for_each_valid(ds, [&](const Config&) {
    if (++count > cap) {
      over = true;
      return false;
    }
    return true;
  });
  if (over) return std::nullopt;
  return count;
}

}  // namespace hlsdse
