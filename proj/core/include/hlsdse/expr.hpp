// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hlsdse/option_value.hpp"

namespace hlsdse::dsl {

enum class BinaryOp : std::uint8_t {
  kOr,
  kAnd,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kAdd,
  kSub,
  kMul,
  kFloorDiv,
  kMod,
};

std::string_view to_string(BinaryOp op);

/// Runtime value of a condition subexpression.
using Value = std::variant<std::int64_t, PipelineMode, bool>;

enum class Sort : std::uint8_t { kInt, kMode, kBool };
std::string_view to_string(Sort sort);

/// Resolves identifiers during evaluation.
class Env {
 public:
  virtual ~Env() = default;
  virtual std::optional<OptionValue> lookup(std::string_view name) const = 0;
};

/// Immutable expression tree. Copies share nodes.
class Expr {
 public:
  static Expr literal(OptionValue value);
  static Expr identifier(std::string name);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

  /// Throws EvalError on sort mismatch, division by zero, or an unbound name.
  Value evaluate(const Env& env) const;

  /// Infers the result sort given the sort of every free identifier.
  /// Throws EvalError when operands have incompatible sorts.
  Sort infer(const std::function<std::optional<Sort>(std::string_view)>& sort_of) const;

  void collect_identifiers(std::set<std::string>& out) const;

  /// Renders with the minimum parentheses needed to re-parse to the same tree.
  std::string to_string() const;

  friend bool operator==(const Expr& a, const Expr& b);

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::string render(int parent_precedence, bool right_operand) const;

  std::shared_ptr<const Node> node_;
};

/// `[element for variable in [items...] if condition]`
struct Comprehension {
  Expr element = Expr::identifier("x");
  std::string variable = "x";
  std::vector<OptionValue> items;
  std::optional<Expr> condition;

  /// Free identifiers other than the bound variable.
  std::set<std::string> dependencies() const;

  friend bool operator==(const Comprehension&, const Comprehension&) = default;
};

}  // namespace hlsdse::dsl
