// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <string>
#include <thread>

#include "hlsdse/orchestrator.hpp"

namespace hlsdse::testing {

/// Non-empty lines in a results log, header excluded.
inline std::uint64_t logged_results(const std::filesystem::path& log) {
  std::ifstream in(log);
  std::string line;
  std::uint64_t n = 0;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (!line.empty()) ++n;
  }
  return n;
}

struct Interrupted {
  RunReport report;
  /// Backend results on disk when the stop flag was raised.
  std::uint64_t logged_at_stop = 0;
};

/// Runs `rc` and raises the stop flag once `stop_after` results are logged.
inline Interrupted run_until(const RunConfig& rc, std::uint64_t stop_after) {
  std::atomic<bool> stop{false};
  auto fut = std::async(std::launch::async, [&] { return run(rc, &stop); });
  const auto log = rc.out_dir / "results.log";
  Interrupted out;
  while (fut.wait_for(std::chrono::milliseconds(1)) != std::future_status::ready) {
    const auto n = logged_results(log);
    if (n >= stop_after) {
      out.logged_at_stop = n;
      stop = true;
      break;
    }
  }
  out.report = fut.get();
  return out;
}

}  // namespace hlsdse::testing
