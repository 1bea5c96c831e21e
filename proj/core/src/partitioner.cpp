// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/partitioner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "hlsdse/errors.hpp"
#include "hlsdse/quality.hpp"

namespace hlsdse {

namespace {

using Point = std::array<double, 2>;

double sq_dist(const Point& a, const Point& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

/// Uniform in [0, 1), independent of the standard library's distributions.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t nearest(const Point& p, const std::vector<Point>& centers) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < centers.size(); ++c) {
    if (sq_dist(p, centers[c]) < sq_dist(p, centers[best])) best = c;
  }
  return best;
}

/// Per-feature z-score; a constant feature maps to 0.
struct Scaler {
  Point mean{0, 0};
  Point sd{0, 0};

  explicit Scaler(const std::vector<Point>& pts) {
    const auto n = static_cast<double>(pts.size());
    for (int f = 0; f < 2; ++f) {
      for (const auto& p : pts) mean[f] += p[f];
      mean[f] /= n;
      for (const auto& p : pts) sd[f] += (p[f] - mean[f]) * (p[f] - mean[f]);
      sd[f] = std::sqrt(sd[f] / n);
    }
  }

  Point apply(const Point& p) const {
    return {sd[0] > 0 ? (p[0] - mean[0]) / sd[0] : 0.0, sd[1] > 0 ? (p[1] - mean[1]) / sd[1] : 0.0};
  }
  Point invert(const Point& p) const { return {p[0] * sd[0] + mean[0], p[1] * sd[1] + mean[1]}; }
};

}  // namespace

std::string_view to_string(ModeHalf h) { return h == ModeHalf::kFg ? "fg" : "off|cg"; }

std::vector<std::string> split_parameters(const DesignSpace& ds) {
  std::vector<std::string> out;
  const auto& tree = ds.loop_tree();
  for (const auto& p : ds.params()) {
    if (p.kind != PragmaKind::kPipeline) continue;
    if (tree) {
      if (tree->contains(p.scope) && !tree->is_innermost(p.scope)) out.push_back(p.name);
    } else if (std::find(p.options.items.begin(), p.options.items.end(), OptionValue(PipelineMode::kCg)) !=
               p.options.items.end()) {
      out.push_back(p.name);
    }
  }
  return out;
}

std::vector<Partition> enumerate_partitions(const DesignSpace& ds, std::uint64_t cap) {
  const auto split = split_parameters(ds);
  if (split.size() >= 63 || (std::uint64_t{1} << split.size()) > cap) {
    throw TooManyPartitions("2^" + std::to_string(split.size()) + " partitions exceed the cap of " +
                            std::to_string(cap));
  }
  const std::uint64_t count = std::uint64_t{1} << split.size();
  std::vector<Partition> out;
  out.reserve(count);
  for (std::uint64_t id = 0; id < count; ++id) {
    Partition p;
    p.id = id;
    p.space = ds;
    for (std::size_t i = 0; i < split.size(); ++i) {
      const bool fg = (id >> i) & 1U;
      const ParamSpec& spec = ds.param(split[i]);
      p.mode_split[spec.scope] = fg ? ModeHalf::kFg : ModeHalf::kOffCg;
      p.space = fg ? p.space.restricted(spec.name, {PipelineMode::kFg})
                   : p.space.restricted(spec.name, {PipelineMode::kOff, PipelineMode::kCg});
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<Config> minimized_config(const DesignSpace& ds) {
  Config cfg;
  for (auto i : ds.eval_order()) {
    const ParamSpec& p = ds.params()[i];
    auto options = eval_options(ds, p.name, cfg);
    if (options.empty()) return std::nullopt;
    if (p.kind == PragmaKind::kPipeline) {
      // The half's first option in the {off, cg} | {fg} reading.
      auto pick = options.front();
      for (PipelineMode m : {PipelineMode::kOff, PipelineMode::kCg, PipelineMode::kFg}) {
        if (std::find(options.begin(), options.end(), OptionValue(m)) != options.end()) {
          pick = m;
          break;
        }
      }
      cfg.set(p.name, pick);
    } else {
      cfg.set(p.name, *std::min_element(options.begin(), options.end(),
                                        [](const OptionValue& a, const OptionValue& b) { return a < b; }));
    }
  }
  if (!validate(ds, cfg).valid()) return std::nullopt;
  return cfg;
}

PartitionProfile profile_partition(const Partition& p, Evaluator& evaluator) {
  PartitionProfile out;
  out.partition_id = p.id;
  out.cycles = std::numeric_limits<double>::infinity();
  out.penalty = std::numeric_limits<double>::infinity();
  auto cfg = minimized_config(p.space);
  if (!cfg) return out;
  out.config = *cfg;
  try {
    const EvalResult r = evaluator.evaluate(*cfg);
    out.status = r.status;
    if (r.ok()) {
      out.feasible = true;
      out.cycles = static_cast<double>(r.cycles);
      out.penalty = util_penalty(r.util);
    }
  } catch (const Error&) {
    out.status = EvalStatus::kInvalid;
  }
  return out;
}

KMeansResult kmeans(const std::vector<Point>& raw, std::size_t k, std::uint64_t seed) {
  KMeansResult out;
  const std::size_t n = raw.size();
  if (n == 0) return out;

  const Scaler scaler(raw);
  std::vector<Point> pts;
  for (const auto& p : raw) pts.push_back(scaler.apply(p));

  const std::size_t distinct = std::set<Point>(pts.begin(), pts.end()).size();
  k = std::clamp<std::size_t>(k, 1, distinct);

  std::mt19937_64 rng(seed);
  std::vector<Point> centers{pts[rng() % n]};
  while (centers.size() < k) {
    std::vector<double> d2(n);
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = sq_dist(pts[i], centers[nearest(pts[i], centers)]);
      total += d2[i];
    }
    double target = unit(rng) * total;
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (d2[i] <= 0) continue;
      pick = i;
      if (target < d2[i]) break;
      target -= d2[i];
    }
    centers.push_back(pts[pick]);
  }

  std::vector<std::size_t> assign(n, k);
  for (int iter = 0; iter < kKMeansMaxIterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t c = nearest(pts[i], centers);
      if (c != assign[i]) {
        assign[i] = c;
        changed = true;
      }
    }
    std::vector<Point> sums(k, Point{0, 0});
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      sums[assign[i]][0] += pts[i][0];
      sums[assign[i]][1] += pts[i][1];
      ++counts[assign[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) centers[c] = {sums[c][0] / counts[c], sums[c][1] / counts[c]};
    }
    double wcss = 0;
    for (std::size_t i = 0; i < n; ++i) wcss += sq_dist(pts[i], centers[assign[i]]);
    out.wcss.push_back(wcss);
    if (!changed) break;
  }

  out.assignment = assign;
  for (const auto& c : centers) out.centroids.push_back(scaler.invert(c));
  return out;
}

std::vector<std::uint64_t> select_representatives(const std::vector<PartitionProfile>& profiles, std::size_t t,
                                                  std::uint64_t seed) {
  std::vector<const PartitionProfile*> pool;
  for (const auto& p : profiles) {
    if (p.feasible) pool.push_back(&p);
  }
  std::vector<std::uint64_t> out;
  if (pool.empty()) {
    // Nothing feasible to cluster; fall back to the lowest ids.
    for (const auto& p : profiles) out.push_back(p.partition_id);
    std::sort(out.begin(), out.end());
    out.resize(std::min(out.size(), t));
    return out;
  }
  std::sort(pool.begin(), pool.end(), [](auto* a, auto* b) { return a->partition_id < b->partition_id; });

  std::vector<Point> features;
  for (const auto* p : pool) features.push_back({p->cycles, p->penalty});
  const auto km = kmeans(features, std::max<std::size_t>(t, 1), seed);

  // Distances in the same normalized space the clustering used.
  const Scaler scaler(features);
  for (std::size_t c = 0; c < km.centroids.size(); ++c) {
    const Point centre = scaler.apply(km.centroids[c]);
    std::optional<std::size_t> best;
    double best_d = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (km.assignment[i] != c) continue;
      const double d = sq_dist(scaler.apply(features[i]), centre);
      if (!best || d < best_d) {
        best = i;
        best_d = d;
      }
    }
    if (best) out.push_back(pool[*best]->partition_id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hlsdse
