// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <atomic>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "hlsdse/evaluator.hpp"
#include "hlsdse/kernel_model.hpp"

namespace hlsdse::testing {

std::filesystem::path fixture_path(std::string_view name);
std::string read_file(const std::filesystem::path& path);
KernelModel load_kernel(std::string_view fixture_name);

/// A kernel with one loop `L` directly under the top function.
KernelModel single_loop_kernel(std::int64_t trip_count, std::int64_t compute_cycles,
                               std::map<std::int64_t, std::int64_t> quirks = {});

/// Two parameters: P1 in {off, cg, fg}; P2 in {1, 2} unless P1 is cg.
inline constexpr std::string_view kFilteredGridSpace = R"(// hlsdse-design-space v1
loop: L
#pragma ACCEL PIPELINE mode=auto{ options: P1=[x for x in [off,cg,fg]]; default: off }
loop: L
#pragma ACCEL PARALLEL factor=auto{ options: P2=[x for x in [1,2] if P1!=cg]; default: 1 }
)";

/// Evaluator backed by a plain function; counts calls.
class FunctionEvaluator final : public Evaluator {
 public:
  explicit FunctionEvaluator(std::function<EvalResult(const Config&)> fn) : fn_(std::move(fn)) {}
  EvalResult evaluate(const Config& cfg) override {
    ++calls_;
    return fn_(cfg);
  }
  std::uint64_t calls() const { return calls_.load(); }

 private:
  std::function<EvalResult(const Config&)> fn_;
  std::atomic<std::uint64_t> calls_{0};
};

/// OK result with a flat one-loop report on `stmt`.
EvalResult ok_result(std::uint64_t cycles, double lut_util = 0.0, std::string stmt = "L",
                     Bottleneck kind = Bottleneck::kCompute);
EvalResult failed_result(EvalStatus status);

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(std::string_view tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace hlsdse::testing
