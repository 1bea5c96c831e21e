// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/bottleneck.hpp"

#include <algorithm>
#include <unordered_map>

namespace hlsdse {

namespace {

void walk(const HierarchyNode& node, std::vector<std::string>& prefix, std::vector<CriticalPath>& out) {
  prefix.push_back(node.stmt_id);
  if (node.children.empty()) {
    out.push_back({prefix, node.latency, node.bottleneck});
  } else {
    std::vector<const HierarchyNode*> kids;
    for (const auto& c : node.children) kids.push_back(&c);
    std::sort(kids.begin(), kids.end(), [](const HierarchyNode* a, const HierarchyNode* b) {
      if (a->latency != b->latency) return a->latency > b->latency;
      return a->stmt_id < b->stmt_id;
    });
    for (const auto* c : kids) walk(*c, prefix, out);
  }
  prefix.pop_back();
}

void index_nodes(const HierarchyNode& node, std::unordered_map<std::string, const HierarchyNode*>& out) {
  out.emplace(node.stmt_id, &node);
  for (const auto& c : node.children) index_nodes(c, out);
}

bool has_option(const ParamSpec& p, PipelineMode mode) {
  const auto& items = p.options.items;
  return std::find(items.begin(), items.end(), OptionValue(mode)) != items.end();
}

/// Slot of `p` in the priority list for `kind`; -1 when it has none.
int slot(Bottleneck kind, const ParamSpec& p) {
  if (kind == Bottleneck::kCompute) {
    switch (p.kind) {
      case PragmaKind::kPipeline:
        if (has_option(p, PipelineMode::kFg)) return 0;
        if (has_option(p, PipelineMode::kCg)) return 2;
        return -1;
      case PragmaKind::kParallel:
        return 1;
      case PragmaKind::kTiling:
        return -1;
    }
    return -1;
  }
  switch (p.kind) {
    case PragmaKind::kPipeline:
      return has_option(p, PipelineMode::kCg) ? 0 : -1;
    case PragmaKind::kTiling:
      return 1;
    case PragmaKind::kParallel:
      return -1;
  }
  return -1;
}

}  // namespace

std::vector<CriticalPath> build_paths(const HierarchyNode& report) {
  std::vector<CriticalPath> out;
  std::vector<std::string> prefix;
  walk(report, prefix, out);
  return out;
}

std::map<std::string, std::vector<std::string>, std::less<>> stmt_param_map(const DesignSpace& ds) {
  std::map<std::string, std::vector<std::string>, std::less<>> out;
  for (const auto& p : ds.params()) out[p.scope].push_back(p.name);
  return out;
}

std::vector<std::string> order_for_type(Bottleneck kind, const DesignSpace& ds, const std::vector<std::string>& params) {
  constexpr int kUnranked = 3;
  std::vector<std::pair<int, std::string>> keyed;
  for (const auto& name : params) {
    const int s = slot(kind, ds.param(name));
    keyed.emplace_back(s < 0 ? kUnranked : s, name);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (auto& [s, name] : keyed) out.push_back(std::move(name));
  return out;
}

ParamOrder analyze(const HierarchyNode& report, const DesignSpace& ds, const std::set<std::string>& tuned) {
  const auto by_stmt = stmt_param_map(ds);
  std::unordered_map<std::string, const HierarchyNode*> nodes;
  index_nodes(report, nodes);

  ParamOrder out;
  std::set<std::string> seen;
  for (const auto& path : build_paths(report)) {
    for (auto it = path.nodes.rbegin(); it != path.nodes.rend(); ++it) {
      const HierarchyNode& node = *nodes.at(*it);
      if (node.latency == 0) continue;
      auto params = by_stmt.find(node.stmt_id);
      if (params == by_stmt.end()) continue;
      std::vector<std::string> untuned;
      for (const auto& name : params->second) {
        if (!tuned.contains(name) && !seen.contains(name)) untuned.push_back(name);
      }
      for (auto& name : order_for_type(node.bottleneck, ds, untuned)) {
        seen.insert(name);
        out.push_back({std::move(name), out.size()});
      }
    }
  }
  return out;
}

}  // namespace hlsdse
