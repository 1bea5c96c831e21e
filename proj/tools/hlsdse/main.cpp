// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: space, partition, explore, report, oracle.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hlsdse/dsl.hpp"
#include "hlsdse/errors.hpp"
#include "hlsdse/evaluator.hpp"
#include "hlsdse/explorer.hpp"
#include "hlsdse/mock_hls.hpp"
#include "hlsdse/orchestrator.hpp"
#include "hlsdse/partitioner.hpp"
#include "hlsdse/quality.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNoFeasible = 3;

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop = true; }

void add_inputs(CLI::App* cmd, hlsdse::RunConfig& rc, std::string& space) {
  cmd->add_option("--model", rc.model_path, "Kernel model file")->required();
  cmd->add_option("--space", space, "Design-space file (generated from the model when omitted)");
}

void apply_space(hlsdse::RunConfig& rc, const std::string& space) {
  if (!space.empty()) rc.space_path = space;
}

int cmd_space(hlsdse::RunConfig rc, const std::string& space, const std::string& emit, std::uint64_t cap) {
  apply_space(rc, space);
  auto [k, ds] = hlsdse::load_inputs(rc);
  const auto size = hlsdse::space_size(ds, cap);
  std::cout << "kernel: " << k.name << "\n";
  std::cout << "parameters: " << ds.size() << "\n";
  std::cout << "grid points: " << size.grid_points << "\n";
  std::cout << "valid points: " << (size.exact ? "" : "~") << static_cast<std::uint64_t>(size.valid_points)
            << (size.exact ? "" : " (sampled estimate)") << "\n";
  const std::string text = hlsdse::serialize_design_space(ds);
  if (emit == "-") {
    std::cout << "\n" << text;
  } else if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) throw hlsdse::ConfigError("cannot write " + emit);
    out << text;
  }
  return kExitOk;
}

int cmd_partition(hlsdse::RunConfig rc, const std::string& space) {
  apply_space(rc, space);
  auto [k, ds] = hlsdse::load_inputs(rc);
  hlsdse::MockOptions opts;
  opts.util_threshold = rc.util_threshold;
  hlsdse::MockHlsEvaluator backend(k, ds, opts);
  hlsdse::ResultCache cache;
  hlsdse::CachedEvaluator evaluator(backend, cache);
  const auto parts = hlsdse::enumerate_partitions(ds, rc.partition_cap);
  std::vector<hlsdse::PartitionProfile> profiles;
  for (const auto& p : parts) profiles.push_back(hlsdse::profile_partition(p, evaluator));
  const auto selected = hlsdse::select_representatives(profiles, rc.partitions.value_or(rc.threads), rc.seed);

  std::cout << "split parameters:";
  for (const auto& name : hlsdse::split_parameters(ds)) std::cout << " " << name;
  std::cout << "\npartitions: " << parts.size() << "\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& pr = profiles[i];
    const bool chosen = std::find(selected.begin(), selected.end(), pr.partition_id) != selected.end();
    std::cout << (chosen ? "* " : "  ") << pr.partition_id << ":";
    for (const auto& [loop, half] : parts[i].mode_split) std::cout << " " << loop << "=" << hlsdse::to_string(half);
    if (pr.feasible) {
      std::cout << "  cycles " << static_cast<std::uint64_t>(pr.cycles) << "  penalty " << pr.penalty << "\n";
    } else {
      std::cout << "  infeasible (" << hlsdse::to_string(pr.status) << ")\n";
    }
  }
  return kExitOk;
}

int cmd_explore(hlsdse::RunConfig rc, const std::string& space, bool wall_clock, int delay_ms) {
  apply_space(rc, space);
  if (rc.out_dir.empty()) throw hlsdse::ConfigError("--out is required");
  rc.clock = wall_clock ? hlsdse::BudgetClock::kWall : hlsdse::BudgetClock::kSimulated;
  rc.mock_delay = std::chrono::milliseconds(delay_ms);
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  const auto r = hlsdse::run(rc, &g_stop);
  std::cout << hlsdse::render_summary(r);
  std::cout << "backend calls: " << r.backend_calls << ", cache hits: " << r.cache_hits << "\n";
  if (g_stop.load()) std::cout << "interrupted; rerun with --resume to continue\n";
  return r.feasible ? kExitOk : kExitNoFeasible;
}

int cmd_report(const std::string& out) {
  std::cout << hlsdse::report(out);
  return kExitOk;
}

int cmd_oracle(hlsdse::RunConfig rc, const std::string& space, std::uint64_t cap) {
  apply_space(rc, space);
  auto [k, ds] = hlsdse::load_inputs(rc);
  hlsdse::MockOptions opts;
  opts.util_threshold = rc.util_threshold;
  hlsdse::MockHlsEvaluator backend(k, ds, opts);
  const auto r = hlsdse::explore_exhaustive(ds, backend, cap);
  std::cout << "evaluated: " << r.trace.size() << "\n";
  std::cout << "best cycles: " << r.best_result.cycles << "\n";
  std::cout << "best config: " << r.best.key() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pragma design-space exploration for HLS kernels"};
  app.require_subcommand(1);

  hlsdse::RunConfig rc;
  std::string space;
  std::string emit;
  std::string out;
  std::uint64_t cap = 1'000'000;
  std::size_t partitions = 0;
  std::uint64_t max_evals = 0;
  bool wall_clock = false;
  int delay_ms = 0;

  auto* space_cmd = app.add_subcommand("space", "Generate or load a design space and report its size");
  add_inputs(space_cmd, rc, space);
  space_cmd->add_option("--emit", emit, "Write the design space to this file ('-' for stdout)");
  space_cmd->add_option("--cap", cap, "Count valid points exactly up to this many");

  auto* part_cmd = app.add_subcommand("partition", "Enumerate, profile and select partitions");
  add_inputs(part_cmd, rc, space);
  part_cmd->add_option("--threads", rc.threads, "Worker count (default representative count)")->check(CLI::PositiveNumber);
  part_cmd->add_option("--partitions", partitions, "Representatives to select");
  part_cmd->add_option("--tu", rc.util_threshold, "Utilization threshold");
  part_cmd->add_option("--seed", rc.seed, "Clustering seed");

  auto* explore_cmd = app.add_subcommand("explore", "Run the full exploration flow");
  add_inputs(explore_cmd, rc, space);
  explore_cmd->add_option("--evaluator", rc.evaluator, "Evaluation backend")->default_str("mock");
  explore_cmd->add_option("--threads", rc.threads, "Worker threads")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--partitions", partitions, "Representatives to explore (default: threads)");
  explore_cmd->add_option("--timeout", rc.timeout_seconds, "Exploration budget in seconds");
  explore_cmd->add_flag("--wall-clock", wall_clock, "Charge wall time instead of simulated synthesis time");
  explore_cmd->add_option("--max-evals", max_evals, "Global cap on distinct evaluations");
  explore_cmd->add_option("--tu", rc.util_threshold, "Utilization threshold");
  explore_cmd->add_option("--seed", rc.seed, "Seed for partition selection");
  explore_cmd->add_option("--out", rc.out_dir, "Output directory")->required();
  explore_cmd->add_flag("--resume", rc.resume, "Continue the run in --out");
  explore_cmd->add_flag("--serial", rc.serial, "Explore partitions one at a time, in id order");
  explore_cmd->add_option("--mock-delay-ms", delay_ms, "Real sleep per mock evaluation");

  auto* report_cmd = app.add_subcommand("report", "Summarize a finished or checkpointed run");
  report_cmd->add_option("--out", out, "Run directory")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustively evaluate a small design space");
  add_inputs(oracle_cmd, rc, space);
  oracle_cmd->add_option("--cap", cap, "Refuse spaces with more valid points than this");
  oracle_cmd->add_option("--tu", rc.util_threshold, "Utilization threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (partitions > 0) rc.partitions = partitions;
  if (max_evals > 0) rc.max_evaluations = max_evals;

  try {
    if (*space_cmd) return cmd_space(rc, space, emit, cap);
    if (*part_cmd) return cmd_partition(rc, space);
    if (*explore_cmd) return cmd_explore(rc, space, wall_clock, delay_ms);
    if (*report_cmd) return cmd_report(out);
    if (*oracle_cmd) return cmd_oracle(rc, space, cap);
  } catch (const hlsdse::NoFeasiblePoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoFeasible;
  } catch (const hlsdse::StorageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const hlsdse::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
