// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "random_kernel.hpp"

#include <random>

#include "hlsdse/design_space.hpp"
#include "hlsdse/ds_generator.hpp"

namespace hlsdse::testing {

namespace {

constexpr std::int64_t kTripCounts[] = {4, 8, 12, 16, 24, 32, 48, 64};

template <class T>
T pick(std::mt19937_64& rng, std::initializer_list<T> xs) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return *(xs.begin() + d(rng));
}

int roll(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LoopNode make_loop(std::mt19937_64& rng, int depth, int max_depth, int& next_id) {
  LoopNode n;
  n.id = "L" + std::to_string(next_id++);
  n.trip_count = kTripCounts[roll(rng, 0, std::size(kTripCounts) - 1)];
  n.compute_cycles = roll(rng, 0, 6);
  const int streams = roll(rng, 0, 2);
  for (int s = 0; s < streams; ++s) {
    MemStream m;
    m.array_id = n.id + "_m" + std::to_string(s);
    m.bytes_per_iter = pick<std::int64_t>(rng, {4, 8, 16});
    m.direction = roll(rng, 0, 1) == 0 ? StreamDirection::kLoad : StreamDirection::kStore;
    n.mem_streams.push_back(std::move(m));
  }
  if (roll(rng, 0, 2) == 0) {
    n.area = AreaCost{static_cast<double>(roll(rng, 50, 900)), static_cast<double>(roll(rng, 50, 1200)),
                      static_cast<double>(roll(rng, 0, 8))};
  }
  if (depth + 1 < max_depth && roll(rng, 0, 2) != 0) {
    const int kids = roll(rng, 1, 2);
    for (int c = 0; c < kids; ++c) n.children.push_back(make_loop(rng, depth + 1, max_depth, next_id));
  }
  if (n.innermost() && n.compute_cycles == 0) n.compute_cycles = 1;
  return n;
}

}  // namespace

std::optional<KernelModel> random_kernel(std::uint64_t seed, const RandomKernelOptions& opts) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    KernelModel k;
    k.name = "rand" + std::to_string(seed);
    k.top.id = "top";
    int next_id = 0;
    const int tops = roll(rng, 1, opts.max_top_loops);
    for (int t = 0; t < tops; ++t) k.top.children.push_back(make_loop(rng, 0, opts.max_depth, next_id));
    k.bus_bytes_per_cycle = pick<std::int64_t>(rng, {16, 32, 64});
    k.hls_effort_limit = pick<std::int64_t>(rng, {256, 1024, 4096});
    k.resource_budget = {static_cast<double>(roll(rng, 4, 80)) * 1000, static_cast<double>(roll(rng, 8, 160)) * 1000,
                         static_cast<double>(roll(rng, 40, 800)), static_cast<double>(roll(rng, 20, 400))};

    const DesignSpace ds = generate_design_space(k);
    const auto n = count_valid(ds, opts.max_valid_points);
    if (n && *n >= opts.min_valid_points) return k;
  }
  return std::nullopt;
}

std::optional<KernelModel> hot_nest_kernel(std::uint64_t seed, const RandomKernelOptions& opts) {
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  for (int attempt = 0; attempt < 500; ++attempt) {
    KernelModel k;
    k.name = "hot" + std::to_string(seed);
    k.top.id = "top";

    LoopNode inner;
    inner.id = "inner";
    inner.trip_count = pick<std::int64_t>(rng, {32, 64});
    inner.compute_cycles = roll(rng, 6, 16);
    inner.mem_streams.push_back({"a", pick<std::int64_t>(rng, {4, 8}), StreamDirection::kLoad});
    inner.area = AreaCost{static_cast<double>(roll(rng, 200, 600)), static_cast<double>(roll(rng, 200, 800)),
                          static_cast<double>(roll(rng, 1, 4))};

    LoopNode outer;
    outer.id = "outer";
    outer.trip_count = pick<std::int64_t>(rng, {8, 16, 32});
    outer.compute_cycles = roll(rng, 1, 3);
    outer.mem_streams.push_back({"c", 4, StreamDirection::kStore});
    outer.children.push_back(std::move(inner));

    LoopNode side;
    side.id = "side";
    side.trip_count = pick<std::int64_t>(rng, {32, 64});
    side.compute_cycles = 1;
    side.mem_streams.push_back({"d", 4, StreamDirection::kStore});

    k.top.children.push_back(std::move(outer));
    k.top.children.push_back(std::move(side));
    k.bus_bytes_per_cycle = 64;
    k.hls_effort_limit = pick<std::int64_t>(rng, {1024, 4096});
    k.resource_budget = {static_cast<double>(roll(rng, 20, 120)) * 1000, static_cast<double>(roll(rng, 40, 240)) * 1000,
                         static_cast<double>(roll(rng, 100, 900)), static_cast<double>(roll(rng, 100, 400))};

    const DesignSpace ds = generate_design_space(k);
    const auto n = count_valid(ds, opts.max_valid_points);
    if (n && *n >= opts.min_valid_points) return k;
  }
  return std::nullopt;
}

}  // namespace hlsdse::testing
