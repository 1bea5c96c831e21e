// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/eval_result.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "hlsdse/errors.hpp"

namespace hlsdse {

double ResourceUtil::max() const {
  const auto v = values();
  return *std::max_element(v.begin(), v.end());
}

std::string_view to_string(Bottleneck b) { return b == Bottleneck::kMemory ? "MEMORY" : "COMPUTE"; }

const HierarchyNode* HierarchyNode::find(std::string_view id) const {
  if (stmt_id == id) return this;
  for (const auto& c : children) {
    if (const auto* hit = c.find(id)) return hit;
  }
  return nullptr;
}

std::string_view to_string(EvalStatus s) {
  switch (s) {
    case EvalStatus::kOk:
      return "OK";
    case EvalStatus::kTimeout:
      return "TIMEOUT";
    case EvalStatus::kOverUtil:
      return "OVER_UTIL";
    case EvalStatus::kInvalid:
      return "INVALID";
  }
  return "INVALID";
}

std::optional<EvalStatus> parse_eval_status(std::string_view s) {
  if (s == "OK") return EvalStatus::kOk;
  if (s == "TIMEOUT") return EvalStatus::kTimeout;
  if (s == "OVER_UTIL") return EvalStatus::kOverUtil;
  if (s == "INVALID") return EvalStatus::kInvalid;
  return std::nullopt;
}

void to_json(nlohmann::json& j, const ResourceUtil& u) {
  j = nlohmann::json{{"lut", u.lut}, {"ff", u.ff}, {"dsp", u.dsp}, {"bram", u.bram}};
}

void from_json(const nlohmann::json& j, ResourceUtil& u) {
  u.lut = j.at("lut").get<double>();
  u.ff = j.at("ff").get<double>();
  u.dsp = j.at("dsp").get<double>();
  u.bram = j.at("bram").get<double>();
}

void to_json(nlohmann::json& j, const HierarchyNode& n) {
  j = nlohmann::json{{"stmt", n.stmt_id}, {"latency", n.latency}, {"bottleneck", to_string(n.bottleneck)}};
  if (!n.children.empty()) j["children"] = n.children;
}

void from_json(const nlohmann::json& j, HierarchyNode& n) {
  n.stmt_id = j.at("stmt").get<std::string>();
  n.latency = j.at("latency").get<std::uint64_t>();
  n.bottleneck = j.at("bottleneck").get<std::string>() == "MEMORY" ? Bottleneck::kMemory : Bottleneck::kCompute;
  n.children.clear();
  if (auto it = j.find("children"); it != j.end()) n.children = it->get<std::vector<HierarchyNode>>();
}

void to_json(nlohmann::json& j, const EvalResult& r) {
  j = nlohmann::json{{"status", to_string(r.status)}, {"util", r.util}, {"eval_seconds", r.eval_seconds}};
  // Non-OK cycles are infinite; the field is null rather than a magic number.
  j["cycles"] = r.ok() ? nlohmann::json(r.cycles) : nlohmann::json(nullptr);
  if (r.report) j["report"] = *r.report;
  if (!r.message.empty()) j["message"] = r.message;
}

void from_json(const nlohmann::json& j, EvalResult& r) {
  auto status = parse_eval_status(j.at("status").get<std::string>());
  if (!status) throw StorageError("unknown status '" + j.at("status").get<std::string>() + "'");
  r.status = *status;
  r.util = j.at("util").get<ResourceUtil>();
  r.eval_seconds = j.at("eval_seconds").get<double>();
  const auto& cycles = j.at("cycles");
  r.cycles = cycles.is_null() ? kInfiniteCycles : cycles.get<std::uint64_t>();
  r.report.reset();
  if (auto it = j.find("report"); it != j.end()) r.report = it->get<HierarchyNode>();
  r.message = j.value("message", std::string());
}

}  // namespace hlsdse
