// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hlsdse/expr.hpp"
#include "hlsdse/option_value.hpp"

namespace hlsdse {

enum class PragmaKind : std::uint8_t { kPipeline, kParallel, kTiling };

std::string_view to_string(PragmaKind kind);
std::optional<PragmaKind> parse_pragma_kind(std::string_view token);

/// Parent/child structure of the kernel's loops, as far as the design space
/// needs it. Top-level loops have an empty parent.
class LoopHierarchy {
 public:
  struct Loop {
    std::string id;
    std::string parent;
    std::vector<std::string> children;
    std::int64_t trip_count = 1;
  };

  void add(Loop loop);

  bool contains(std::string_view id) const;
  const Loop& at(std::string_view id) const;
  bool is_innermost(std::string_view id) const { return at(id).children.empty(); }

  /// Nearest first.
  std::vector<std::string> ancestors(std::string_view id) const;
  /// Pre-order, declaration order.
  std::vector<std::string> descendants(std::string_view id) const;
  const std::vector<std::string>& order() const { return order_; }

  friend bool operator==(const LoopHierarchy&, const LoopHierarchy&) = default;

 private:
  std::map<std::string, Loop, std::less<>> loops_;
  std::vector<std::string> order_;
};

/// One pragma slot of the design space.
struct ParamSpec {
  std::string name;
  PragmaKind kind = PragmaKind::kParallel;
  std::string scope;
  dsl::Comprehension options;
  OptionValue default_value;
  /// Parameter names referenced by the comprehension, sorted.
  std::vector<std::string> deps;

  friend bool operator==(const ParamSpec&, const ParamSpec&) = default;
};

/// Total assignment of one option per parameter. Keys are kept sorted, so
/// iteration order is the canonical order.
class Config {
 public:
  Config() = default;
  Config(std::initializer_list<std::pair<const std::string, OptionValue>> values) : values_(values) {}

  const OptionValue& at(std::string_view name) const;
  const OptionValue* find(std::string_view name) const;
  void set(const std::string& name, OptionValue value) { values_[name] = value; }
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::size_t size() const { return values_.size(); }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  /// Canonical key: "name=value" pairs joined by ',' in name order. Injective
  /// over assignments because names are identifiers and values never contain
  /// ',' or '='.
  std::string key() const;

  friend bool operator==(const Config&, const Config&) = default;
  friend auto operator<=>(const Config&, const Config&) = default;

 private:
  std::map<std::string, OptionValue, std::less<>> values_;
};

/// Verdict of `validate`.
struct Validation {
  struct Violation {
    std::string param;
    std::string reason;
  };
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

/// The set of tuning parameters and their evaluation order.
///
/// Immutable once built. A restricted view narrows selected parameters to a
/// subset of their options (used for partitions); restrictions are not part
/// of the serialized form.
class DesignSpace {
 public:
  DesignSpace() = default;

  /// Checks names, resolves dependencies, and computes the evaluation order.
  /// Throws UnknownIdentifier, CyclicDependency, or EvalError (ill-sorted
  /// conditions).
  static DesignSpace build(std::vector<ParamSpec> params);

  const std::vector<ParamSpec>& params() const { return params_; }
  std::size_t size() const { return params_.size(); }
  const ParamSpec& param(std::string_view name) const;
  const ParamSpec* find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  /// Indices into params(), dependencies before dependents; ties keep
  /// declaration order.
  const std::vector<std::size_t>& eval_order() const { return eval_order_; }

  const std::optional<LoopHierarchy>& loop_tree() const { return loop_tree_; }
  /// Throws ModelError if a parameter's scope is not a loop of `tree`.
  DesignSpace with_loop_tree(LoopHierarchy tree) const;

  DesignSpace restricted(std::string_view name, std::vector<OptionValue> allowed) const;
  const std::vector<OptionValue>* restriction(std::string_view name) const;

  /// Structural equality: parameters, deps, order and restrictions.
  friend bool operator==(const DesignSpace& a, const DesignSpace& b) {
    return a.params_ == b.params_ && a.eval_order_ == b.eval_order_ && a.restrictions_ == b.restrictions_;
  }

 private:
  std::vector<ParamSpec> params_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> eval_order_;
  std::optional<LoopHierarchy> loop_tree_;
  std::map<std::string, std::vector<OptionValue>, std::less<>> restrictions_;
};

/// Options of `name` under `ctx`, in written order. The declared default is
/// inserted at the front when the filter removed it, so the list is never
/// empty in an unrestricted space. Throws EvalError if a dependency is not
/// assigned in `ctx` or the comprehension misbehaves.
std::vector<OptionValue> eval_options(const DesignSpace& ds, std::string_view name, const Config& ctx);

/// The option after cfg[name] in its current list; nullopt when exhausted.
/// Throws InvalidConfig if cfg[name] is not in its own list.
std::optional<OptionValue> next_value(const DesignSpace& ds, const Config& cfg, std::string_view name);

Validation validate(const DesignSpace& ds, const Config& cfg);

/// All-defaults point. In a restricted view a parameter whose default was
/// filtered out takes its first remaining option; nullopt if the view is
/// empty along the default path.
std::optional<Config> default_config(const DesignSpace& ds);

/// Walks parameters in eval order and resets every value that fell out of
/// its option list (the default, or the first option in a restricted view).
/// Returns false when some parameter has no option left.
bool repair(const DesignSpace& ds, Config& cfg);

/// Product of per-parameter unfiltered option counts (saturating).
std::uint64_t grid_points(const DesignSpace& ds);

/// Visits every valid config in eval-order lexicographic order (option list
/// order per parameter). Stops early when `visit` returns false.
void for_each_valid(const DesignSpace& ds, const std::function<bool(const Config&)>& visit);

/// First `limit` valid configs. With `exhaustive`, throws SpaceTooLarge when
/// the unpruned grid exceeds `limit`.
std::vector<Config> enumerate_valid(const DesignSpace& ds, std::size_t limit, bool exhaustive = false);

/// Number of valid configs, or nullopt once it exceeds `cap`.
std::optional<std::uint64_t> count_valid(const DesignSpace& ds, std::uint64_t cap);

}  // namespace hlsdse
