// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/ds_generator.hpp"

#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hlsdse/dsl.hpp"
#include "hlsdse/errors.hpp"

namespace hlsdse {
namespace {

constexpr auto kOff = PipelineMode::kOff;
constexpr auto kCg = PipelineMode::kCg;
constexpr auto kFg = PipelineMode::kFg;

std::vector<OptionValue> ints(std::initializer_list<std::int64_t> v) { return {v.begin(), v.end()}; }

LoopNode loop(std::string id, std::int64_t tc, std::vector<LoopNode> children = {}) {
  LoopNode n;
  n.id = std::move(id);
  n.trip_count = tc;
  n.compute_cycles = 1;
  n.children = std::move(children);
  return n;
}

KernelModel kernel(std::vector<LoopNode> loops) {
  KernelModel k;
  k.name = "k";
  k.top.id = "top";
  k.top.children = std::move(loops);
  return k;
}

// Table fixture: non-innermost TC 32 and 200, innermost TC 10 and 20.
KernelModel table_fixture() { return kernel({loop("a", 32, {loop("a0", 10)}), loop("b", 200, {loop("b0", 20)})}); }

const std::vector<OptionValue>& items(const DesignSpace& ds, const std::string& name) {
  return ds.param(name).options.items;
}

TEST(DsGenerator, HandEnumeratedSets) {
  const DesignSpace ds = generate_design_space(table_fixture());
  EXPECT_EQ(items(ds, "PIPE_a"), (std::vector<OptionValue>{kOff, kCg, kFg}));
  EXPECT_EQ(items(ds, "PF_a"), ints({1, 2, 4, 8, 16, 32}));
  EXPECT_EQ(items(ds, "TF_a"), ints({1, 2, 4, 8, 16}));
  EXPECT_EQ(items(ds, "PF_b"), ints({1, 2, 4, 5, 8, 10, 20, 25, 40, 50, 100, 200}));
  EXPECT_EQ(items(ds, "TF_b"), ints({1, 2, 4, 5, 8, 10, 20, 25, 40, 50, 100}));
  EXPECT_EQ(ds.find("PIPE_a0"), nullptr);
  EXPECT_EQ(ds.find("PF_a0"), nullptr);
  EXPECT_EQ(items(ds, "PIPE_b0"), (std::vector<OptionValue>{kOff, kFg}));
  EXPECT_EQ(items(ds, "PF_b0"), ints({1, 2, 4, 5, 10}));
  EXPECT_EQ(ds.find("TF_b0"), nullptr);
  EXPECT_EQ(ds.size(), 8U);
  for (const auto& p : ds.params()) EXPECT_TRUE(p.default_value.is_off()) << p.name;
}

// Independent statement of the emission rules, per loop.
std::map<std::string, std::vector<OptionValue>> expected_params(const LoopNode& n) {
  std::map<std::string, std::vector<OptionValue>> out;
  const std::int64_t tc = n.trip_count;
  auto divs = [&](auto keep) {
    std::vector<OptionValue> v{1};
    for (std::int64_t d = 2; d <= tc; ++d)
      if (tc % d == 0 && keep(d)) v.emplace_back(d);
    return v;
  };
  if (n.children.empty()) {
    if (tc <= 16) return out;
    out["PIPE_" + n.id] = {kOff, kFg};
    auto pf = divs([&](std::int64_t d) { return d < tc && d <= 128; });
    if (pf.size() > 1) out["PF_" + n.id] = pf;
  } else {
    out["PIPE_" + n.id] = {kOff, kCg, kFg};
    auto pf = divs([&](std::int64_t d) { return d <= 128 || d == tc; });
    if (pf.size() > 1) out["PF_" + n.id] = pf;
    auto tf = divs([&](std::int64_t d) { return d < tc; });
    if (tf.size() > 1) out["TF_" + n.id] = tf;
  }
  for (const auto& c : n.children) out.merge(expected_params(c));
  return out;
}

TEST(DsGenerator, MatchesRuleOracleOnRandomTrees) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> tc_dist(1, 400);
  for (int trial = 0; trial < 200; ++trial) {
    int next_id = 0;
    std::function<LoopNode(int)> make = [&](int depth) {
      LoopNode n = loop("L" + std::to_string(next_id++), tc_dist(rng));
      const int kids = depth < 2 ? static_cast<int>(rng() % 3) : 0;
      for (int i = 0; i < kids; ++i) n.children.push_back(make(depth + 1));
      return n;
    };
    KernelModel k = kernel({make(0), make(0)});
    const DesignSpace ds = generate_design_space(k);
    std::map<std::string, std::vector<OptionValue>> want;
    for (const auto& top : k.top.children) want.merge(expected_params(top));
    std::map<std::string, std::vector<OptionValue>> got;
    for (const auto& p : ds.params()) got[p.name] = p.options.items;
    ASSERT_EQ(got, want) << "trial " << trial;
  }
}

// Validity oracle: cg disables PF, TF*PF <= TC, everything under an fg loop
// stays at its default.
bool oracle_valid(const KernelModel& k, const Config& c) {
  std::function<bool(const LoopNode&, bool)> ok = [&](const LoopNode& n, bool under_fg) {
    const auto* pipe = c.find("PIPE_" + n.id);
    const auto* pf = c.find("PF_" + n.id);
    const auto* tf = c.find("TF_" + n.id);
    const std::int64_t pfv = pf ? pf->factor() : 1;
    const std::int64_t tfv = tf ? tf->factor() : 1;
    const PipelineMode mode = pipe ? pipe->mode() : kOff;
    if (under_fg && (mode != kOff || pfv != 1 || tfv != 1)) return false;
    if (mode == kCg && pfv != 1) return false;
    if (tfv * pfv > n.trip_count) return false;
    for (const auto& ch : n.children)
      if (!ok(ch, under_fg || mode == kFg)) return false;
    return true;
  };
  for (const auto& l : k.top.children)
    if (!ok(l, false)) return false;
  return true;
}

TEST(DsGenerator, ValidityMatchesOracleOnFullGrid) {
  const KernelModel k = kernel({loop("o", 12, {loop("m", 6, {loop("i", 24)})}), loop("s", 18)});
  const DesignSpace ds = generate_design_space(k);
  std::vector<const ParamSpec*> ps;
  for (const auto& p : ds.params()) ps.push_back(&p);
  std::uint64_t grid = 0, valid = 0;
  Config c;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == ps.size()) {
      ++grid;
      const bool v = validate(ds, c).valid();
      valid += v ? 1 : 0;
      ASSERT_EQ(v, oracle_valid(k, c)) << c.key();
      return;
    }
    for (const auto& o : ps[i]->options.items) {
      c.set(ps[i]->name, o);
      walk(i + 1);
    }
  };
  walk(0);
  EXPECT_EQ(grid, grid_points(ds));
  EXPECT_EQ(count_valid(ds, 1'000'000), valid);
}

TEST(DsGenerator, AttachesLoopTreeAndIsDeterministic) {
  const KernelModel k = testing::load_kernel("gemm.kernel");
  const DesignSpace a = generate_design_space(k);
  const DesignSpace b = generate_design_space(k);
  EXPECT_EQ(a, b);
  ASSERT_TRUE(a.loop_tree().has_value());
  EXPECT_TRUE(a.loop_tree()->is_innermost("k"));
}

TEST(DsGenerator, RejectsBadModels) {
  EXPECT_THROW(generate_design_space(kernel({loop("a", 0)})), ModelError);
  EXPECT_THROW(generate_design_space(kernel({loop("a", 4), loop("a", 4)})), ModelError);
}

TEST(DsGenerator, DivisorsIn) {
  EXPECT_EQ(divisors_in(12, 2, 11), (std::vector<std::int64_t>{2, 3, 4, 6}));
  EXPECT_EQ(divisors_in(7, 2, 6), std::vector<std::int64_t>{});
  EXPECT_EQ(divisors_in(12, 0, 100), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
}

TEST(SpaceSize, SmallExamples) {
  const DesignSpace grid = parse_design_space(testing::kFilteredGridSpace);
  const SpaceSize s = space_size(grid);
  EXPECT_EQ(s.grid_points, 6U);
  EXPECT_EQ(s.valid_points, 5.0);
  EXPECT_TRUE(s.exact);

  const DesignSpace one = parse_design_space(
      "loop: L\n#pragma ACCEL PARALLEL auto{ options: F=[x for x in [1,2,3,4,5]]; default: 1 }\n");
  EXPECT_EQ(space_size(one).grid_points, 5U);
  EXPECT_EQ(space_size(one).valid_points, 5.0);

  const DesignSpace excl = parse_design_space(
      "loop: L\n#pragma ACCEL PIPELINE auto{ options: A=[x for x in [off,fg]]; default: off }\n"
      "#pragma ACCEL PIPELINE auto{ options: B=[x for x in [off,fg] if A==off or x==off]; default: off }\n");
  EXPECT_EQ(space_size(excl).grid_points, 4U);
  EXPECT_EQ(space_size(excl).valid_points, 3.0);
}

TEST(SpaceSize, EstimatesAboveCap) {
  const DesignSpace ds = generate_design_space(testing::load_kernel("gemm.kernel"));
  const auto exact = count_valid(ds, 10'000'000);
  ASSERT_TRUE(exact.has_value());
  const SpaceSize s = space_size(ds, 10, 20000, 3);
  EXPECT_FALSE(s.exact);
  EXPECT_NEAR(s.valid_points, static_cast<double>(*exact), 0.15 * static_cast<double>(*exact));
}

}  // namespace
}  // namespace hlsdse
