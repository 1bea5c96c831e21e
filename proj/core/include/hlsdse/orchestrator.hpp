// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hlsdse/design_space.hpp"
#include "hlsdse/ds_generator.hpp"
#include "hlsdse/eval_result.hpp"
#include "hlsdse/explorer.hpp"
#include "hlsdse/kernel_model.hpp"
#include "hlsdse/partitioner.hpp"

namespace hlsdse {

/// Defaults to four hours of simulated synthesis time.
inline constexpr double kDefaultDseTimeoutSeconds = 4 * 3600.0;

struct RunConfig {
  std::filesystem::path model_path;
  /// Generated from the model when absent.
  std::optional<std::filesystem::path> space_path;
  std::string evaluator = "mock";
  std::size_t threads = 1;
  /// Representatives to explore; defaults to `threads`.
  std::optional<std::size_t> partitions;
  /// Global exploration budget, in seconds of `clock`.
  double timeout_seconds = kDefaultDseTimeoutSeconds;
  BudgetClock clock = BudgetClock::kSimulated;
  /// Optional global cap on distinct evaluations.
  std::optional<std::uint64_t> max_evaluations;
  double util_threshold = kDefaultUtilThreshold;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  bool resume = false;
  /// Explore partitions one at a time in id order, for reproducible runs.
  bool serial = false;
  std::uint64_t partition_cap = kDefaultPartitionCap;
  /// Real sleep per mock evaluation (exercises concurrency and timeouts).
  std::chrono::milliseconds mock_delay{0};
};

/// Throws ConfigError on out-of-range settings.
void check_run_config(const RunConfig& rc);

struct PartitionOutcome {
  std::uint64_t id = 0;
  std::map<std::string, ModeHalf> mode_split;
  double budget_seconds = 0.0;
  std::optional<std::uint64_t> budget_evaluations;
  ExploreResult result;
};

struct RunReport {
  std::string kernel;
  std::vector<std::string> split_parameters;
  SpaceSize space;
  std::vector<PartitionProfile> profiles;
  std::vector<std::uint64_t> selected;
  /// One per selected partition, by id.
  std::vector<PartitionOutcome> outcomes;
  bool feasible = false;
  Config best;
  EvalResult best_result;
  std::optional<std::uint64_t> best_partition;
  /// Distinct configs evaluated per partition, summed.
  std::uint64_t evaluations = 0;
  /// Run statistics that vary between otherwise identical runs; kept out
  /// of run_report.json.
  std::uint64_t backend_calls = 0;
  std::uint64_t cache_hits = 0;
  double wall_seconds = 0.0;
};

/// Full push-button flow. Writes into rc.out_dir:
///   results.log            evaluation cache (JSON lines)
///   space.ds               the design space explored
///   partitions.json        partition manifest with profiles and selection
///   checkpoint/partition_<id>.json   finished partitions, reused by resume
///   trace_<id>.csv         per-partition best-so-far traces
///   run_report.json        deterministic summary
///   run_stats.json         backend calls, cache hits, wall time
///   best_config.pragmas    pinned design space of the best configuration
/// `stop` is polled between evaluations. Throws ConfigError, ModelError,
/// SyntaxError, or StorageError.
RunReport run(const RunConfig& rc, const std::atomic<bool>* stop = nullptr);

/// Loads the model and the design space (generated when rc.space_path is
/// unset) as `run` does.
std::pair<KernelModel, DesignSpace> load_inputs(const RunConfig& rc);

/// Fully pinned design space for `cfg`, followed by concrete pragma lines as
/// comments.
std::string render_best_config(const DesignSpace& ds, const Config& cfg);

/// Header line then one row per trace entry.
std::string render_trace_csv(const std::vector<TraceEntry>& trace);

/// Human-readable summary of a report.
std::string render_summary(const RunReport& r);

/// Re-reads run_report.json from `out_dir`, rewrites trace CSVs and the
/// best-config file, and returns the summary. Throws NotFound.
std::string report(const std::filesystem::path& out_dir);

nlohmann::json to_report_json(const RunReport& r);
RunReport from_report_json(const nlohmann::json& j);

}  // namespace hlsdse
