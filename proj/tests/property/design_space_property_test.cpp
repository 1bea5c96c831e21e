// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hlsdse/ds_generator.hpp"
#include "hlsdse/dsl.hpp"
#include "hlsdse/errors.hpp"
#include "random_kernel.hpp"
#include "random_space.hpp"

namespace hlsdse {
namespace {

constexpr int kTrials = 300;

DesignSpace random_space(std::mt19937_64& rng) {
  testing::RandomSpaceOptions opts;
  opts.division = false;
  opts.transform_elements = false;
  opts.max_params = 4;
  return parse_design_space(testing::random_space_text(rng, opts));
}

// Every combination of written options and defaults, validated one by one.
std::set<std::string> brute_force_valid(const DesignSpace& ds) {
  std::set<std::string> out;
  Config c;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == ds.size()) {
      if (validate(ds, c).valid()) out.insert(c.key());
      return;
    }
    const ParamSpec& p = ds.params()[i];
    std::vector<OptionValue> axis = p.options.items;
    axis.push_back(p.default_value);
    for (const auto& v : std::set<OptionValue>(axis.begin(), axis.end())) {
      c.set(p.name, v);
      walk(i + 1);
    }
  };
  walk(0);
  return out;
}

std::set<std::string> dependents_of(const DesignSpace& ds, const std::string& name) {
  std::set<std::string> out;
  for (const auto& p : ds.params())
    if (std::find(p.deps.begin(), p.deps.end(), name) != p.deps.end()) out.insert(p.name);
  return out;
}

TEST(DesignSpaceProperty, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < kTrials; ++t) {
    const DesignSpace ds = random_space(rng);
    const auto oracle = brute_force_valid(ds);
    std::vector<std::string> seen;
    for_each_valid(ds, [&](const Config& c) {
      seen.push_back(c.key());
      return true;
    });
    ASSERT_EQ(std::set<std::string>(seen.begin(), seen.end()), oracle) << serialize_design_space(ds);
    ASSERT_EQ(seen.size(), oracle.size()) << "duplicates in enumeration";
    ASSERT_EQ(count_valid(ds, 1'000'000), oracle.size());
    const auto def = default_config(ds);
    ASSERT_TRUE(def.has_value());
    ASSERT_TRUE(validate(ds, *def).valid());
    // Pure: a second enumeration is identical.
    const auto again = enumerate_valid(ds, 1'000'000);
    ASSERT_EQ(again.size(), seen.size());
    for (std::size_t i = 0; i < again.size(); ++i) ASSERT_EQ(again[i].key(), seen[i]);
  }
}

TEST(DesignSpaceProperty, GridPreservationUnderRepair) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < kTrials; ++t) {
    const DesignSpace ds = random_space(rng);
    for (const Config& cfg : enumerate_valid(ds, 200)) {
      for (const auto& p : ds.params()) {
        const bool leaf = dependents_of(ds, p.name).empty();
        for (const auto& v : eval_options(ds, p.name, cfg)) {
          Config next = cfg;
          next.set(p.name, v);
          // Without dependents plain substitution stays valid; otherwise
          // dependents may need to fall back to their defaults.
          if (leaf) {
            ASSERT_TRUE(validate(ds, next).valid()) << next.key();
          }
          ASSERT_TRUE(repair(ds, next)) << next.key();
          ASSERT_TRUE(validate(ds, next).valid()) << next.key();
          ASSERT_EQ(next.at(p.name), v);
        }
      }
    }
  }
}

TEST(DesignSpaceProperty, NextValueChainVisitsEachOptionOnce) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < kTrials; ++t) {
    const DesignSpace ds = random_space(rng);
    const Config def = *default_config(ds);
    for (const auto& p : ds.params()) {
      const auto options = eval_options(ds, p.name, def);
      Config c = def;
      c.set(p.name, options.front());
      std::vector<OptionValue> visited{options.front()};
      while (auto n = next_value(ds, c, p.name)) {
        visited.push_back(*n);
        c.set(p.name, *n);
        ASSERT_LE(visited.size(), options.size());
      }
      ASSERT_EQ(visited, options);
      // From the default the chain covers the suffix starting at it.
      c = def;
      std::size_t steps = 0;
      while (auto n = next_value(ds, c, p.name)) {
        c.set(p.name, *n);
        ++steps;
      }
      const auto pos = std::find(options.begin(), options.end(), def.at(p.name)) - options.begin();
      ASSERT_EQ(steps, options.size() - 1 - static_cast<std::size_t>(pos));
    }
  }
}

TEST(GeneratorProperty, InvariantsOnRandomKernels) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto k = testing::random_kernel(seed);
    ASSERT_TRUE(k.has_value());
    const DesignSpace ds = generate_design_space(*k);
    ASSERT_EQ(ds, generate_design_space(*k));
    for (const auto& p : ds.params()) {
      if (p.kind == PragmaKind::kPipeline) continue;
      const auto tc = k->find_loop(p.scope)->trip_count;
      for (const auto& v : p.options.items) {
        ASSERT_EQ(tc % v.factor(), 0) << p.name;
        if (p.kind == PragmaKind::kParallel) {
          ASSERT_TRUE(v.factor() <= std::min<std::int64_t>(128, tc) || v.factor() == tc);
        }
      }
    }
    const LoopHierarchy h = k->hierarchy();
    for_each_valid(ds, [&](const Config& c) {
      for (const auto& id : h.order()) {
        const auto* pf = c.find("PF_" + id);
        const auto* tf = c.find("TF_" + id);
        EXPECT_LE((pf ? pf->factor() : 1) * (tf ? tf->factor() : 1), h.at(id).trip_count);
        const auto* pipe = c.find("PIPE_" + id);
        if (pipe && pipe->mode() == PipelineMode::kFg) {
          for (const auto& d : h.descendants(id)) {
            for (const char* prefix : {"PIPE_", "PF_", "TF_"}) {
              if (const auto* v = c.find(prefix + d)) {
                EXPECT_TRUE(v->is_off()) << c.key();
              }
            }
          }
        }
      }
      return !::testing::Test::HasFailure();
    });
  }
}

}  // namespace
}  // namespace hlsdse
