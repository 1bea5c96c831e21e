// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/mock_hls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <unordered_map>

#include "hlsdse/errors.hpp"

namespace hlsdse {

namespace {

using u64 = std::uint64_t;
constexpr u64 kMax = std::numeric_limits<u64>::max();

u64 add(u64 a, u64 b) { return a > kMax - b ? kMax : a + b; }
u64 mul(u64 a, u64 b) { return (a != 0 && b > kMax / a) ? kMax : a * b; }
u64 ceil_div(u64 a, u64 b) { return a / b + (a % b != 0 ? 1 : 0); }

struct Pragmas {
  PipelineMode mode = PipelineMode::kOff;
  u64 pf = 1;
  u64 tf = 1;
};

struct Totals {
  double lut = 0, ff = 0, dsp = 0, bram = 0;
  double volume = 0;
};

struct Visit {
  u64 latency = 0;
  /// Portion of `latency` spent waiting on memory.
  u64 transfer = 0;
  HierarchyNode node;
};

class Model {
 public:
  Model(const KernelModel& k, std::unordered_map<std::string, Pragmas> pragmas)
      : k_(k), pragmas_(std::move(pragmas)) {}

  Visit root() {
    Visit v;
    v.node.stmt_id = k_.top.id;
    add_area(k_.top, 1.0);
    u64 body = static_cast<u64>(k_.top.compute_cycles);
    for (const auto& c : k_.top.children) {
      auto cv = loop(c, 1.0, 1.0, false);
      body = add(body, cv.latency);
      v.transfer = add(v.transfer, cv.transfer);
      v.node.children.push_back(std::move(cv.node));
    }
    v.latency = body;
    v.node.latency = body;
    v.node.bottleneck = classify(v.transfer, body - v.transfer);
    return v;
  }

  const Totals& totals() const { return totals_; }

 private:
  static Bottleneck classify(u64 transfer, u64 compute) {
    return transfer > compute ? Bottleneck::kMemory : Bottleneck::kCompute;
  }

  Pragmas pragmas_of(const LoopNode& n) const {
    auto it = pragmas_.find(n.id);
    return it == pragmas_.end() ? Pragmas{} : it->second;
  }

  /// Body latency with every nested loop fully unrolled.
  static u64 depth(const LoopNode& n) {
    u64 d = static_cast<u64>(n.compute_cycles);
    for (const auto& c : n.children) d = add(d, depth(c));
    return d;
  }

  static u64 own_bytes(const LoopNode& n) {
    u64 b = 0;
    for (const auto& s : n.mem_streams) b = add(b, static_cast<u64>(s.bytes_per_iter));
    return b;
  }

  /// Bytes moved per iteration of `n`, nested loops included.
  static u64 subtree_bytes(const LoopNode& n) {
    u64 b = own_bytes(n);
    for (const auto& c : n.children) b = add(b, mul(static_cast<u64>(c.trip_count), subtree_bytes(c)));
    return b;
  }

  u64 transfer_cycles(u64 bytes) const { return ceil_div(bytes, static_cast<u64>(k_.bus_bytes_per_cycle)); }

  void add_area(const LoopNode& n, double weight) {
    const AreaCost a = effective_area(n);
    totals_.lut += a.lut * weight;
    totals_.ff += a.ff * weight;
    totals_.dsp += a.dsp * weight;
  }

  /// Double-buffered tile storage for every stream below a cg loop. `scale`
  /// is the number of `n` iterations one tile covers.
  void add_buffers(const LoopNode& n, u64 scale, double copies) {
    for (const auto& s : n.mem_streams) {
      const u64 bytes = mul(2, mul(scale, static_cast<u64>(s.bytes_per_iter)));
      totals_.bram += static_cast<double>(ceil_div(bytes, static_cast<u64>(k_.bram_block_bytes))) * copies;
    }
    for (const auto& c : n.children) add_buffers(c, mul(scale, static_cast<u64>(c.trip_count)), copies);
  }

  /// `copies`: hardware instances of the parent body. `area_factor`: product
  /// of area_scale multipliers along the path. `hoisted`: an enclosing cg
  /// loop already moves this loop's data.
  Visit loop(const LoopNode& n, double copies, double area_factor, bool hoisted) {
    const Pragmas p = pragmas_of(n);
    const u64 tc = static_cast<u64>(n.trip_count);
    const double my_copies = copies * static_cast<double>(p.pf);
    const double factor = area_factor * (n.area_scale.contains(static_cast<std::int64_t>(p.pf))
                                             ? n.area_scale.at(static_cast<std::int64_t>(p.pf))
                                             : 1.0);
    add_area(n, my_copies * factor);
    totals_.volume += my_copies;

    Visit v;
    v.node.stmt_id = n.id;
    const u64 iters = ceil_div(tc, p.pf);

    if (p.mode == PipelineMode::kFg) {
      for (const auto& c : n.children) v.node.children.push_back(unrolled(c, my_copies, factor));
      const auto ii_it = n.quirks.find(static_cast<std::int64_t>(p.pf));
      const u64 ii = ii_it == n.quirks.end() ? 1 : static_cast<u64>(ii_it->second);
      const u64 compute = add(depth(n), mul(iters - 1, ii));
      v.transfer = hoisted ? 0 : transfer_cycles(mul(tc, subtree_bytes(n)));
      v.latency = add(compute, v.transfer);
      v.node.bottleneck = classify(v.transfer, compute);
    } else {
      const bool cg = p.mode == PipelineMode::kCg;
      u64 body = static_cast<u64>(n.compute_cycles);
      u64 body_transfer = 0;
      for (const auto& c : n.children) {
        auto cv = loop(c, my_copies, factor, hoisted || cg);
        body = add(body, cv.latency);
        body_transfer = add(body_transfer, cv.transfer);
        v.node.children.push_back(std::move(cv.node));
      }
      if (cg) {
        const u64 tiles = ceil_div(tc, p.tf);
        const u64 tile_compute = mul(ceil_div(p.tf, p.pf), body);
        const u64 tile_transfer = hoisted ? 0 : transfer_cycles(mul(p.tf, subtree_bytes(n)));
        v.latency = add(tile_transfer, mul(tiles, std::max(tile_transfer, tile_compute)));
        v.transfer = v.latency - std::min(v.latency, mul(tiles, tile_compute));
        v.node.bottleneck = classify(tile_transfer, tile_compute);
        if (!hoisted) add_buffers(n, p.tf, copies);
      } else {
        const u64 own = hoisted ? 0 : transfer_cycles(mul(tc, own_bytes(n)));
        v.latency = add(mul(iters, body), own);
        v.transfer = add(mul(iters, body_transfer), own);
        v.node.bottleneck = classify(v.transfer, v.latency - std::min(v.latency, v.transfer));
      }
    }
    v.node.latency = v.latency;
    return v;
  }

  /// A loop nested in an fg-pipelined loop: every iteration becomes its own
  /// copy of the body. Reports the latency of one unrolled instance.
  HierarchyNode unrolled(const LoopNode& n, double copies, double area_factor) {
    const double my_copies = copies * static_cast<double>(n.trip_count);
    add_area(n, my_copies * area_factor);
    totals_.volume += my_copies;
    HierarchyNode node;
    node.stmt_id = n.id;
    node.latency = depth(n);
    for (const auto& c : n.children) node.children.push_back(unrolled(c, my_copies, area_factor));
    return node;
  }

  const KernelModel& k_;
  std::unordered_map<std::string, Pragmas> pragmas_;
  Totals totals_;
};

}  // namespace

EvalResult mock_hls_evaluate(const KernelModel& k, const DesignSpace& ds, const Config& cfg,
                             const MockOptions& opts) {
  for (const auto& p : ds.params()) {
    if (k.find_loop(p.scope) == nullptr) {
      throw ModelError("parameter '" + p.name + "' is scoped to loop '" + p.scope + "', which kernel '" + k.name +
                       "' does not have");
    }
  }

  EvalResult r;
  if (auto v = validate(ds, cfg); !v.valid()) {
    r.status = EvalStatus::kInvalid;
    r.message = v.violations.front().param + ": " + v.violations.front().reason;
    return r;
  }

  std::unordered_map<std::string, Pragmas> pragmas;
  for (const auto& p : ds.params()) {
    const OptionValue& value = cfg.at(p.name);
    Pragmas& slot = pragmas[p.scope];
    switch (p.kind) {
      case PragmaKind::kPipeline:
        slot.mode = value.mode();
        break;
      case PragmaKind::kParallel:
        slot.pf = static_cast<u64>(value.factor());
        break;
      case PragmaKind::kTiling:
        slot.tf = static_cast<u64>(value.factor());
        break;
    }
  }

  Model model(k, std::move(pragmas));
  Visit top = model.root();
  const Totals& t = model.totals();
  const auto& b = k.resource_budget;
  r.util = {t.lut / b.lut, t.ff / b.ff, t.dsp / b.dsp, t.bram / b.bram};

  const double limit = static_cast<double>(opts.effort_limit.value_or(k.hls_effort_limit));
  r.eval_seconds =
      kMockBaseSeconds + (kMockTimeBudgetSeconds - kMockBaseSeconds) * std::min(t.volume, limit) / limit;

  if (t.volume > limit) {
    r.status = EvalStatus::kTimeout;
    r.message = "unroll volume exceeds the synthesis effort limit";
  } else if (r.util.max() >= opts.util_threshold) {
    r.status = EvalStatus::kOverUtil;
    r.message = "resource utilization at or above threshold";
  } else if (top.latency == kInfiniteCycles) {
    // Saturated arithmetic; treat as a design the tool could not finish.
    r.status = EvalStatus::kTimeout;
    r.message = "cycle count overflow";
  } else {
    r.status = EvalStatus::kOk;
    r.cycles = top.latency;
    r.report = std::move(top.node);
  }
  return r;
}

MockHlsEvaluator::MockHlsEvaluator(KernelModel k, DesignSpace ds, MockOptions opts)
    : k_(std::move(k)), ds_(std::move(ds)), opts_(opts) {
  check_model(k_);
}

EvalResult MockHlsEvaluator::evaluate(const Config& cfg) {
  ++calls_;
  if (opts_.delay.count() > 0) std::this_thread::sleep_for(opts_.delay);
  return mock_hls_evaluate(k_, ds_, cfg, opts_);
}

}  // namespace hlsdse
