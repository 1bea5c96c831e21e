// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hlsdse/design_space.hpp"
#include "hlsdse/eval_result.hpp"

namespace hlsdse {

struct CacheRecord {
  std::string config_key;
  Config config;
  EvalResult result;
  /// Milliseconds since the Unix epoch.
  std::int64_t timestamp = 0;
};

/// Evaluation results keyed by Config::key(), optionally persisted as an
/// append-only JSON-lines log.
///
/// The first put of a key wins; later puts return the stored record. A torn
/// trailing line left by a crash is truncated on load with a warning.
class ResultCache {
 public:
  /// Memory only.
  ResultCache() = default;
  /// Loads `log_path` if present, creating it otherwise. Throws StorageError
  /// when the header or a non-trailing record is unreadable.
  explicit ResultCache(std::filesystem::path log_path);

  ResultCache(const ResultCache&) = delete;
  ResultCache& operator=(const ResultCache&) = delete;

  std::optional<EvalResult> get(const std::string& key) const;
  EvalResult put(const Config& cfg, const EvalResult& result);

  std::size_t size() const;
  /// Insertion order.
  std::vector<CacheRecord> records() const;
  const std::optional<std::filesystem::path>& path() const { return path_; }

  static constexpr std::string_view kFormat = "hlsdse-results";
  static constexpr int kVersion = 1;

 private:
  void load();

  mutable std::shared_mutex mutex_;
  std::optional<std::filesystem::path> path_;
  std::ofstream log_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<CacheRecord> records_;
};

}  // namespace hlsdse
