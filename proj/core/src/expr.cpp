// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/expr.hpp"

#include "hlsdse/errors.hpp"

namespace hlsdse::dsl {

struct Expr::Node {
  enum class Kind : std::uint8_t { kLiteral, kIdentifier, kBinary };
  Kind kind;
  OptionValue literal;
  std::string name;
  BinaryOp op = BinaryOp::kAdd;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr:
      return 1;
    case BinaryOp::kAnd:
      return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      return 3;
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
      return 4;
    case BinaryOp::kMul:
    case BinaryOp::kFloorDiv:
    case BinaryOp::kMod:
      return 5;
  }
  return 6;
}

constexpr int kComparisonPrecedence = 3;
constexpr int kAtomPrecedence = 6;

Sort sort_of(const Value& v) {
  if (std::holds_alternative<std::int64_t>(v)) return Sort::kInt;
  if (std::holds_alternative<PipelineMode>(v)) return Sort::kMode;
  return Sort::kBool;
}

[[noreturn]] void sort_mismatch(BinaryOp op, Sort a, Sort b) {
  throw EvalError("operator '" + std::string(to_string(op)) + "' cannot combine " +
                  std::string(to_string(a)) + " and " + std::string(to_string(b)));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw EvalError("integer division by zero");
  if (a == INT64_MIN && b == -1) throw EvalError("integer overflow");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  if (b == 0) throw EvalError("integer modulo by zero");
  if (b == -1) return 0;
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

Value apply_arith(BinaryOp op, std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  bool overflow = false;
  switch (op) {
    case BinaryOp::kAdd:
      overflow = __builtin_add_overflow(a, b, &out);
      break;
    case BinaryOp::kSub:
      overflow = __builtin_sub_overflow(a, b, &out);
      break;
    case BinaryOp::kMul:
      overflow = __builtin_mul_overflow(a, b, &out);
      break;
    case BinaryOp::kFloorDiv:
      out = floor_div(a, b);
      break;
    case BinaryOp::kMod:
      out = floor_mod(a, b);
      break;
    default:
      break;
  }
  if (overflow) throw EvalError("integer overflow");
  return out;
}

Value evaluate_node(const Expr::Node& node, const Env& env);

bool expect_bool(BinaryOp op, const Value& v) {
  if (!std::holds_alternative<bool>(v)) sort_mismatch(op, sort_of(v), Sort::kBool);
  return std::get<bool>(v);
}

}  // namespace

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr:
      return "or";
    case BinaryOp::kAnd:
      return "and";
    case BinaryOp::kEq:
      return "==";
    case BinaryOp::kNe:
      return "!=";
    case BinaryOp::kLt:
      return "<";
    case BinaryOp::kLe:
      return "<=";
    case BinaryOp::kGt:
      return ">";
    case BinaryOp::kGe:
      return ">=";
    case BinaryOp::kAdd:
      return "+";
    case BinaryOp::kSub:
      return "-";
    case BinaryOp::kMul:
      return "*";
    case BinaryOp::kFloorDiv:
      return "//";
    case BinaryOp::kMod:
      return "%";
  }
  return "?";
}

std::string_view to_string(Sort sort) {
  switch (sort) {
    case Sort::kInt:
      return "integer";
    case Sort::kMode:
      return "mode";
    case Sort::kBool:
      return "boolean";
  }
  return "?";
}

Expr Expr::literal(OptionValue value) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::kLiteral;
  node->literal = value;
  return Expr(std::move(node));
}

Expr Expr::identifier(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::kIdentifier;
  node->name = std::move(name);
  return Expr(std::move(node));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::kBinary;
  node->op = op;
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return Expr(std::move(node));
}

namespace {

Value evaluate_node(const Expr::Node& node, const Env& env) {
  using Kind = Expr::Node::Kind;
  switch (node.kind) {
    case Kind::kLiteral:
      if (node.literal.is_factor()) return node.literal.factor();
      return node.literal.mode();
    case Kind::kIdentifier: {
      auto value = env.lookup(node.name);
      if (!value) throw EvalError("identifier '" + node.name + "' is not bound");
      if (value->is_factor()) return value->factor();
      return value->mode();
    }
    case Kind::kBinary:
      break;
  }

  const BinaryOp op = node.op;
  if (op == BinaryOp::kOr || op == BinaryOp::kAnd) {
    const bool lhs = expect_bool(op, evaluate_node(*node.lhs, env));
    if (op == BinaryOp::kOr && lhs) return true;
    if (op == BinaryOp::kAnd && !lhs) return false;
    return expect_bool(op, evaluate_node(*node.rhs, env));
  }

  const Value lhs = evaluate_node(*node.lhs, env);
  const Value rhs = evaluate_node(*node.rhs, env);
  const Sort ls = sort_of(lhs);
  const Sort rs = sort_of(rhs);
  if (ls != rs) sort_mismatch(op, ls, rs);

  switch (op) {
    case BinaryOp::kEq:
      return lhs == rhs;
    case BinaryOp::kNe:
      return lhs != rhs;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: {
      if (ls != Sort::kInt) sort_mismatch(op, ls, rs);
      const auto a = std::get<std::int64_t>(lhs);
      const auto b = std::get<std::int64_t>(rhs);
      if (op == BinaryOp::kLt) return a < b;
      if (op == BinaryOp::kLe) return a <= b;
      if (op == BinaryOp::kGt) return a > b;
      return a >= b;
    }
    default:
      if (ls != Sort::kInt) sort_mismatch(op, ls, rs);
      return apply_arith(op, std::get<std::int64_t>(lhs), std::get<std::int64_t>(rhs));
  }
}

Sort infer_node(const Expr::Node& node,
                const std::function<std::optional<Sort>(std::string_view)>& sort_of_name) {
  using Kind = Expr::Node::Kind;
  switch (node.kind) {
    case Kind::kLiteral:
      return node.literal.is_factor() ? Sort::kInt : Sort::kMode;
    case Kind::kIdentifier: {
      auto s = sort_of_name(node.name);
      if (!s) throw UnknownIdentifier(node.name);
      return *s;
    }
    case Kind::kBinary:
      break;
  }
  const Sort ls = infer_node(*node.lhs, sort_of_name);
  const Sort rs = infer_node(*node.rhs, sort_of_name);
  switch (node.op) {
    case BinaryOp::kOr:
    case BinaryOp::kAnd:
      if (ls != Sort::kBool || rs != Sort::kBool) sort_mismatch(node.op, ls, rs);
      return Sort::kBool;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      if (ls != rs) sort_mismatch(node.op, ls, rs);
      return Sort::kBool;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      if (ls != Sort::kInt || rs != Sort::kInt) sort_mismatch(node.op, ls, rs);
      return Sort::kBool;
    default:
      if (ls != Sort::kInt || rs != Sort::kInt) sort_mismatch(node.op, ls, rs);
      return Sort::kInt;
  }
}

void collect(const Expr::Node& node, std::set<std::string>& out) {
  switch (node.kind) {
    case Expr::Node::Kind::kLiteral:
      return;
    case Expr::Node::Kind::kIdentifier:
      out.insert(node.name);
      return;
    case Expr::Node::Kind::kBinary:
      collect(*node.lhs, out);
      collect(*node.rhs, out);
      return;
  }
}

bool equal_nodes(const Expr::Node* a, const Expr::Node* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr || a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Node::Kind::kLiteral:
      return a->literal == b->literal;
    case Expr::Node::Kind::kIdentifier:
      return a->name == b->name;
    case Expr::Node::Kind::kBinary:
      return a->op == b->op && equal_nodes(a->lhs.get(), b->lhs.get()) &&
             equal_nodes(a->rhs.get(), b->rhs.get());
  }
  return false;
}

}  // namespace

Value Expr::evaluate(const Env& env) const { return evaluate_node(*node_, env); }

Sort Expr::infer(const std::function<std::optional<Sort>(std::string_view)>& sort_of_name) const {
  return infer_node(*node_, sort_of_name);
}

void Expr::collect_identifiers(std::set<std::string>& out) const { collect(*node_, out); }

bool operator==(const Expr& a, const Expr& b) { return equal_nodes(a.node_.get(), b.node_.get()); }

std::string Expr::to_string() const { return render(0, false); }

std::string Expr::render(int parent_precedence, bool right_operand) const {
  switch (node_->kind) {
    case Node::Kind::kLiteral:
      return node_->literal.to_string();
    case Node::Kind::kIdentifier:
      return node_->name;
    case Node::Kind::kBinary:
      break;
  }
  const int prec = precedence(node_->op);
  const bool spaced = node_->op == BinaryOp::kAnd || node_->op == BinaryOp::kOr;
  const std::string sep = spaced ? " " + std::string(dsl::to_string(node_->op)) + " "
                                 : std::string(dsl::to_string(node_->op));
  // Comparisons do not chain, so a comparison operand of a comparison needs parentheses.
  const int lhs_ctx = prec == kComparisonPrecedence ? prec + 1 : prec;
  std::string text = Expr(node_->lhs).render(lhs_ctx, false) + sep +
                     Expr(node_->rhs).render(prec + 1, true);
  const bool needs_parens =
      prec < parent_precedence || (right_operand && prec == parent_precedence && prec < kAtomPrecedence);
  return needs_parens ? "(" + text + ")" : text;
}

std::set<std::string> Comprehension::dependencies() const {
  std::set<std::string> ids;
  element.collect_identifiers(ids);
  if (condition) condition->collect_identifiers(ids);
  ids.erase(variable);
  return ids;
}

}  // namespace hlsdse::dsl
