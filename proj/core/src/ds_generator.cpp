// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/ds_generator.hpp"

#include <algorithm>
#include <random>

#include "hlsdse/errors.hpp"

namespace hlsdse {

std::string pipeline_param_name(const std::string& loop_id) { return "PIPE_" + loop_id; }
std::string parallel_param_name(const std::string& loop_id) { return "PF_" + loop_id; }
std::string tiling_param_name(const std::string& loop_id) { return "TF_" + loop_id; }

std::vector<std::int64_t> divisors_in(std::int64_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  lo = std::max<std::int64_t>(lo, 1);
  hi = std::min(hi, n);
  for (std::int64_t d = lo; d <= hi; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

namespace {

using dsl::BinaryOp;
using dsl::Expr;

std::optional<Expr> conjoin(std::optional<Expr> a, std::optional<Expr> b) {
  if (!a) return b;
  if (!b) return a;
  return Expr::binary(BinaryOp::kAnd, *a, *b);
}

Expr not_equal(const std::string& name, OptionValue v) {
  return Expr::binary(BinaryOp::kNe, Expr::identifier(name), Expr::literal(v));
}

ParamSpec make_param(std::string name, PragmaKind kind, const std::string& scope, std::vector<OptionValue> items,
                     std::optional<Expr> condition) {
  ParamSpec p;
  p.name = std::move(name);
  p.kind = kind;
  p.scope = scope;
  p.default_value = kind == PragmaKind::kPipeline ? OptionValue(PipelineMode::kOff) : OptionValue(1);
  p.options.items = std::move(items);
  p.options.condition = std::move(condition);
  return p;
}

std::vector<OptionValue> factors(const std::vector<std::int64_t>& values) {
  std::vector<OptionValue> out{OptionValue(1)};
  for (auto v : values) {
    if (v != 1) out.emplace_back(v);
  }
  return out;
}

void emit(const LoopNode& loop, std::optional<Expr> guard, std::vector<ParamSpec>& out) {
  const std::int64_t tc = loop.trip_count;
  if (loop.innermost()) {
    if (tc <= kSmallLoopTripCount) return;
    out.push_back(make_param(pipeline_param_name(loop.id), PragmaKind::kPipeline, loop.id,
                             {PipelineMode::kOff, PipelineMode::kFg}, guard));
    auto pf = factors(divisors_in(tc, 2, std::min(kMaxParallelFactor, tc - 1)));
    if (pf.size() > 1) {
      out.push_back(make_param(parallel_param_name(loop.id), PragmaKind::kParallel, loop.id, std::move(pf), guard));
    }
    return;
  }

  const std::string pipe = pipeline_param_name(loop.id);
  out.push_back(make_param(pipe, PragmaKind::kPipeline, loop.id,
                           {PipelineMode::kOff, PipelineMode::kCg, PipelineMode::kFg}, guard));

  auto pf_values = divisors_in(tc, 2, std::min(kMaxParallelFactor, tc));
  if (tc > kMaxParallelFactor) pf_values.push_back(tc);
  auto pf = factors(pf_values);
  const bool has_pf = pf.size() > 1;
  if (has_pf) {
    out.push_back(make_param(parallel_param_name(loop.id), PragmaKind::kParallel, loop.id, std::move(pf),
                             conjoin(not_equal(pipe, PipelineMode::kCg), guard)));
  }

  auto tf = factors(divisors_in(tc, 2, tc - 1));
  if (tf.size() > 1) {
    std::optional<Expr> fits;
    if (has_pf) {
      fits = Expr::binary(BinaryOp::kLe,
                          Expr::binary(BinaryOp::kMul, Expr::identifier("x"), Expr::identifier(parallel_param_name(loop.id))),
                          Expr::literal(OptionValue(tc)));
    }
    out.push_back(make_param(tiling_param_name(loop.id), PragmaKind::kTiling, loop.id, std::move(tf),
                             conjoin(fits, guard)));
  }

  // Everything below an fg-pipelined loop is fully unrolled.
  const auto child_guard = conjoin(guard, not_equal(pipe, PipelineMode::kFg));
  for (const auto& child : loop.children) emit(child, child_guard, out);
}

}  // namespace

DesignSpace generate_design_space(const KernelModel& k) {
  check_model(k);
  std::vector<ParamSpec> params;
  for (const auto& loop : k.top.children) emit(loop, std::nullopt, params);
  return DesignSpace::build(std::move(params)).with_loop_tree(k.hierarchy());
}

SpaceSize space_size(const DesignSpace& ds, std::uint64_t cap, std::uint64_t samples, std::uint64_t seed) {
  SpaceSize out;
  out.grid_points = grid_points(ds);
  if (auto n = count_valid(ds, cap)) {
    out.valid_points = static_cast<double>(*n);
    return out;
  }

  out.exact = false;
  std::vector<std::vector<OptionValue>> axes;
  for (const auto& p : ds.params()) {
    auto values = p.options.items;
    if (std::find(values.begin(), values.end(), p.default_value) == values.end()) values.push_back(p.default_value);
    if (const auto* allowed = ds.restriction(p.name)) {
      std::erase_if(values, [&](const OptionValue& v) {
        return std::find(allowed->begin(), allowed->end(), v) == allowed->end();
      });
    }
    axes.push_back(std::move(values));
  }
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Config cfg;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, axes[i].size() - 1);
      cfg.set(ds.params()[i].name, axes[i][pick(rng)]);
    }
    if (validate(ds, cfg).valid()) ++hits;
  }
  out.valid_points = static_cast<double>(out.grid_points) * static_cast<double>(hits) / static_cast<double>(samples);
  return out;
}

}  // namespace hlsdse
