// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/expr.hpp"

#include <map>

#include <gtest/gtest.h>

#include "hlsdse/errors.hpp"

namespace hlsdse::dsl {
namespace {

class MapEnv : public Env {
 public:
  explicit MapEnv(std::map<std::string, OptionValue, std::less<>> m) : m_(std::move(m)) {}
  std::optional<OptionValue> lookup(std::string_view name) const override {
    auto it = m_.find(name);
    if (it == m_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::string, OptionValue, std::less<>> m_;
};

Expr lit(std::int64_t v) { return Expr::literal(OptionValue(v)); }
Expr id(std::string n) { return Expr::identifier(std::move(n)); }
Expr bin(BinaryOp op, Expr a, Expr b) { return Expr::binary(op, std::move(a), std::move(b)); }

TEST(Expr, ArithmeticFollowsFloorSemantics) {
  const MapEnv env({{"a", OptionValue(-7)}, {"b", OptionValue(2)}});
  EXPECT_EQ(std::get<std::int64_t>(bin(BinaryOp::kFloorDiv, id("a"), id("b")).evaluate(env)), -4);
  EXPECT_EQ(std::get<std::int64_t>(bin(BinaryOp::kMod, id("a"), id("b")).evaluate(env)), 1);
  EXPECT_EQ(std::get<std::int64_t>(bin(BinaryOp::kMul, id("a"), id("b")).evaluate(env)), -14);
  EXPECT_EQ(std::get<std::int64_t>(bin(BinaryOp::kSub, lit(3), id("b")).evaluate(env)), 1);
}

TEST(Expr, ComparesModes) {
  const MapEnv env({{"P", OptionValue(PipelineMode::kCg)}});
  const Expr e = bin(BinaryOp::kNe, id("P"), Expr::literal(OptionValue(PipelineMode::kCg)));
  EXPECT_FALSE(std::get<bool>(e.evaluate(env)));
}

TEST(Expr, Errors) {
  const MapEnv env({{"a", OptionValue(1)}, {"m", OptionValue(PipelineMode::kFg)}});
  EXPECT_THROW(bin(BinaryOp::kFloorDiv, id("a"), lit(0)).evaluate(env), EvalError);
  EXPECT_THROW(bin(BinaryOp::kMod, id("a"), lit(0)).evaluate(env), EvalError);
  EXPECT_THROW(bin(BinaryOp::kAdd, id("a"), id("m")).evaluate(env), EvalError);
  EXPECT_THROW(bin(BinaryOp::kLt, id("m"), id("m")).evaluate(env), EvalError);
  EXPECT_THROW(id("missing").evaluate(env), EvalError);
  EXPECT_THROW(bin(BinaryOp::kAnd, id("a"), id("a")).evaluate(env), EvalError);
}

TEST(Expr, InfersSorts) {
  auto sort_of = [](std::string_view n) -> std::optional<Sort> {
    if (n == "P") return Sort::kMode;
    if (n == "F") return Sort::kInt;
    return std::nullopt;
  };
  EXPECT_EQ(bin(BinaryOp::kMul, id("F"), lit(2)).infer(sort_of), Sort::kInt);
  EXPECT_EQ(bin(BinaryOp::kEq, id("P"), Expr::literal(OptionValue(PipelineMode::kOff))).infer(sort_of), Sort::kBool);
  EXPECT_THROW(bin(BinaryOp::kEq, id("P"), id("F")).infer(sort_of), EvalError);
  EXPECT_THROW(bin(BinaryOp::kOr, id("F"), id("F")).infer(sort_of), EvalError);
}

TEST(Expr, RendersMinimalParentheses) {
  EXPECT_EQ(bin(BinaryOp::kMul, bin(BinaryOp::kAdd, id("a"), lit(1)), id("b")).to_string(), "(a+1)*b");
  EXPECT_EQ(bin(BinaryOp::kSub, id("a"), bin(BinaryOp::kSub, id("b"), id("c"))).to_string(), "a-(b-c)");
  EXPECT_EQ(bin(BinaryOp::kSub, bin(BinaryOp::kSub, id("a"), id("b")), id("c")).to_string(), "a-b-c");
}

TEST(Expr, CollectsIdentifiers) {
  std::set<std::string> ids;
  bin(BinaryOp::kAnd, bin(BinaryOp::kLe, bin(BinaryOp::kMul, id("x"), id("PF")), lit(32)),
      bin(BinaryOp::kNe, id("P"), Expr::literal(OptionValue(PipelineMode::kCg))))
      .collect_identifiers(ids);
  EXPECT_EQ(ids, (std::set<std::string>{"P", "PF", "x"}));

  Comprehension c;
  c.items = {OptionValue(1), OptionValue(2)};
  c.condition = bin(BinaryOp::kLe, bin(BinaryOp::kMul, id("x"), id("PF")), lit(32));
  EXPECT_EQ(c.dependencies(), (std::set<std::string>{"PF"}));
}

}  // namespace
}  // namespace hlsdse::dsl
