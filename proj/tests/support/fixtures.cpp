// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace hlsdse::testing {

std::filesystem::path fixture_path(std::string_view name) {
  return std::filesystem::path(HLSDSE_FIXTURE_DIR) / std::string(name);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KernelModel load_kernel(std::string_view fixture_name) {
  return parse_kernel_model(read_file(fixture_path(fixture_name)));
}

KernelModel single_loop_kernel(std::int64_t trip_count, std::int64_t compute_cycles,
                               std::map<std::int64_t, std::int64_t> quirks) {
  KernelModel k;
  k.name = "single";
  k.top.id = "top";
  LoopNode l;
  l.id = "L";
  l.trip_count = trip_count;
  l.compute_cycles = compute_cycles;
  l.quirks = std::move(quirks);
  k.top.children.push_back(std::move(l));
  k.resource_budget = {1e6, 1e6, 1e6, 1e6};
  return k;
}

EvalResult ok_result(std::uint64_t cycles, double lut_util, std::string stmt, Bottleneck kind) {
  EvalResult r;
  r.status = EvalStatus::kOk;
  r.cycles = cycles;
  r.util.lut = lut_util;
  r.eval_seconds = 60.0;
  r.report = HierarchyNode{"top", cycles, kind, {HierarchyNode{std::move(stmt), cycles, kind, {}}}};
  return r;
}

EvalResult failed_result(EvalStatus status) {
  EvalResult r;
  r.status = status;
  r.eval_seconds = 60.0;
  r.message = "synthetic failure";
  return r;
}

TempDir::TempDir(std::string_view tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("hlsdse-" + std::string(tag) + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace hlsdse::testing
