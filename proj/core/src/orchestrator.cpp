// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "hlsdse/dsl.hpp"
#include "hlsdse/errors.hpp"
#include "hlsdse/evaluator.hpp"
#include "hlsdse/mock_hls.hpp"
#include "hlsdse/result_cache.hpp"

namespace hlsdse {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kFileVersion = 1;

// ---------------------------------------------------------------------------
// File helpers

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Write-then-rename so readers never see a half-written file.
void write_file(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StorageError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw StorageError("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, path);
}

json versioned(std::string_view format) { return json{{"format", std::string(format)}, {"version", kFileVersion}}; }

void check_versioned(const json& j, std::string_view format, const fs::path& path) {
  if (j.value("format", "") != format || j.value("version", 0) != kFileVersion) {
    throw StorageError(path.string() + ": not a " + std::string(format) + " v" + std::to_string(kFileVersion) +
                       " file");
  }
}

// ---------------------------------------------------------------------------
// JSON conversions

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
double number_or_inf(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json config_json(const Config& cfg) {
  json j = json::object();
  for (const auto& [name, value] : cfg) j[name] = value.to_string();
  return j;
}

Config config_from(const json& j) {
  Config cfg;
  for (const auto& [name, value] : j.items()) {
    auto v = OptionValue::parse(value.get<std::string>());
    if (!v) throw StorageError("bad option value for '" + name + "'");
    cfg.set(name, *v);
  }
  return cfg;
}

json cycles_json(std::uint64_t c) { return c == kInfiniteCycles ? json(nullptr) : json(c); }
std::uint64_t cycles_from(const json& j) { return j.is_null() ? kInfiniteCycles : j.get<std::uint64_t>(); }

json trace_json(const std::vector<TraceEntry>& trace) {
  json arr = json::array();
  for (const auto& e : trace) {
    arr.push_back({{"eval_index", e.eval_index},
                   {"elapsed", e.elapsed_seconds},
                   {"config_key", e.config_key},
                   {"status", to_string(e.status)},
                   {"cycles", cycles_json(e.cycles)},
                   {"best_so_far", cycles_json(e.best_so_far)}});
  }
  return arr;
}

std::vector<TraceEntry> trace_from(const json& arr) {
  std::vector<TraceEntry> out;
  for (const auto& j : arr) {
    TraceEntry e;
    e.eval_index = j.at("eval_index").get<std::uint64_t>();
    e.elapsed_seconds = j.at("elapsed").get<double>();
    e.config_key = j.at("config_key").get<std::string>();
    auto status = parse_eval_status(j.at("status").get<std::string>());
    if (!status) throw StorageError("bad trace status");
    e.status = *status;
    e.cycles = cycles_from(j.at("cycles"));
    e.best_so_far = cycles_from(j.at("best_so_far"));
    out.push_back(std::move(e));
  }
  return out;
}

json mode_split_json(const std::map<std::string, ModeHalf>& split) {
  json j = json::object();
  for (const auto& [loop, half] : split) j[loop] = to_string(half);
  return j;
}

std::map<std::string, ModeHalf> mode_split_from(const json& j) {
  std::map<std::string, ModeHalf> out;
  for (const auto& [loop, half] : j.items()) {
    out[loop] = half.get<std::string>() == "fg" ? ModeHalf::kFg : ModeHalf::kOffCg;
  }
  return out;
}

json outcome_json(const PartitionOutcome& o) {
  const auto& r = o.result;
  json j{{"id", o.id},
         {"mode_split", mode_split_json(o.mode_split)},
         {"budget_seconds", o.budget_seconds},
         {"budget_evaluations", o.budget_evaluations ? json(*o.budget_evaluations) : json(nullptr)},
         {"feasible", r.feasible},
         {"completed", r.completed},
         {"elapsed", r.elapsed_seconds},
         {"evaluations", r.trace.size()},
         {"best_config", config_json(r.best)},
         {"best_result", r.best_result},
         {"trace", trace_json(r.trace)}};
  return j;
}

PartitionOutcome outcome_from(const json& j) {
  PartitionOutcome o;
  o.id = j.at("id").get<std::uint64_t>();
  o.mode_split = mode_split_from(j.at("mode_split"));
  o.budget_seconds = j.at("budget_seconds").get<double>();
  if (!j.at("budget_evaluations").is_null()) o.budget_evaluations = j.at("budget_evaluations").get<std::uint64_t>();
  o.result.feasible = j.at("feasible").get<bool>();
  o.result.completed = j.at("completed").get<bool>();
  o.result.elapsed_seconds = j.at("elapsed").get<double>();
  o.result.best = config_from(j.at("best_config"));
  o.result.best_result = j.at("best_result").get<EvalResult>();
  o.result.trace = trace_from(j.at("trace"));
  return o;
}

json profile_json(const PartitionProfile& p) {
  return json{{"id", p.partition_id},
              {"feasible", p.feasible},
              {"status", to_string(p.status)},
              {"cycles", finite_or_null(p.cycles)},
              {"penalty", finite_or_null(p.penalty)},
              {"config", config_json(p.config)}};
}

PartitionProfile profile_from(const json& j) {
  PartitionProfile p;
  p.partition_id = j.at("id").get<std::uint64_t>();
  p.feasible = j.at("feasible").get<bool>();
  p.status = parse_eval_status(j.at("status").get<std::string>()).value_or(EvalStatus::kInvalid);
  p.cycles = number_or_inf(j.at("cycles"));
  p.penalty = number_or_inf(j.at("penalty"));
  p.config = config_from(j.at("config"));
  return p;
}

/// Settings that must match for --resume to continue a run.
json run_state_json(const RunConfig& rc, const KernelModel& k, const DesignSpace& ds) {
  json j = versioned("hlsdse-run-state");
  j["kernel_model"] = serialize_kernel_model(k);
  j["design_space"] = serialize_design_space(ds);
  j["evaluator"] = rc.evaluator;
  j["threads"] = rc.threads;
  j["partitions"] = rc.partitions ? json(*rc.partitions) : json(nullptr);
  j["timeout_seconds"] = rc.timeout_seconds;
  j["clock"] = rc.clock == BudgetClock::kSimulated ? "simulated" : "wall";
  j["max_evaluations"] = rc.max_evaluations ? json(*rc.max_evaluations) : json(nullptr);
  j["util_threshold"] = rc.util_threshold;
  j["seed"] = rc.seed;
  j["serial"] = rc.serial;
  j["partition_cap"] = rc.partition_cap;
  return j;
}

fs::path checkpoint_path(const fs::path& out, std::uint64_t id) {
  return out / "checkpoint" / ("partition_" + std::to_string(id) + ".json");
}

fs::path trace_path(const fs::path& out, std::uint64_t id) {
  return out / ("trace_" + std::to_string(id) + ".csv");
}

void clear_artifacts(const fs::path& out) {
  for (const char* name : {"results.log", "space.ds", "partitions.json", "run_report.json", "run_stats.json",
                           "best_config.pragmas", "run_state.json"}) {
    fs::remove(out / name);
  }
  fs::remove_all(out / "checkpoint");
  for (const auto& entry : fs::directory_iterator(out)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with("trace_") && name.ends_with(".csv")) fs::remove(entry.path());
  }
}

std::string format_double(double v, int precision = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

std::string concrete_pragma(const ParamSpec& p, const OptionValue& v) {
  switch (p.kind) {
    case PragmaKind::kPipeline:
      return "#pragma ACCEL PIPELINE " + v.to_string();
    case PragmaKind::kParallel:
      return "#pragma ACCEL PARALLEL FACTOR=" + v.to_string();
    case PragmaKind::kTiling:
      return "#pragma ACCEL TILE FACTOR=" + v.to_string();
  }
  return {};
}

/// Splits a global budget across partitions: each pull receives an equal
/// share of what is neither spent nor reserved by running partitions.
class BudgetPool {
 public:
  BudgetPool(double seconds, std::optional<std::uint64_t> evaluations, std::size_t partitions)
      : seconds_(seconds), evaluations_(evaluations), remaining_(partitions) {}

  struct Share {
    double seconds = 0;
    std::optional<std::uint64_t> evaluations;
  };

  Share take() {
    std::lock_guard lock(mutex_);
    const double parts = static_cast<double>(std::max<std::size_t>(remaining_, 1));
    Share s;
    s.seconds = std::max(0.0, seconds_ - spent_seconds_ - reserved_seconds_) / parts;
    if (evaluations_) {
      const std::uint64_t used = spent_evals_ + reserved_evals_;
      const std::uint64_t left = *evaluations_ > used ? *evaluations_ - used : 0;
      s.evaluations = left / std::max<std::size_t>(remaining_, 1);
      reserved_evals_ += *s.evaluations;
    }
    reserved_seconds_ += s.seconds;
    if (remaining_ > 0) --remaining_;
    return s;
  }

  void settle(const Share& s, double spent_seconds, std::uint64_t spent_evals) {
    std::lock_guard lock(mutex_);
    reserved_seconds_ -= s.seconds;
    spent_seconds_ += spent_seconds;
    if (s.evaluations) reserved_evals_ -= *s.evaluations;
    spent_evals_ += spent_evals;
  }

 private:
  std::mutex mutex_;
  double seconds_;
  std::optional<std::uint64_t> evaluations_;
  std::size_t remaining_;
  double spent_seconds_ = 0;
  double reserved_seconds_ = 0;
  std::uint64_t spent_evals_ = 0;
  std::uint64_t reserved_evals_ = 0;
};

}  // namespace

void check_run_config(const RunConfig& rc) {
  if (rc.model_path.empty()) throw ConfigError("a kernel model path is required");
  if (rc.evaluator != "mock") throw ConfigError("unknown evaluator '" + rc.evaluator + "' (only 'mock' ships)");
  if (rc.threads < 1) throw ConfigError("threads must be at least 1");
  if (rc.partitions && *rc.partitions < 1) throw ConfigError("partitions must be at least 1");
  if (!(rc.timeout_seconds > 0) || !std::isfinite(rc.timeout_seconds)) {
    throw ConfigError("timeout must be a positive number of seconds");
  }
  if (!(rc.util_threshold > 0 && rc.util_threshold < 1)) throw ConfigError("T_u must lie strictly between 0 and 1");
  if (rc.out_dir.empty()) throw ConfigError("an output directory is required");
  if (rc.partition_cap < 1) throw ConfigError("partition cap must be at least 1");
}

std::pair<KernelModel, DesignSpace> load_inputs(const RunConfig& rc) {
  std::string model_text;
  try {
    model_text = read_file(rc.model_path);
  } catch (const NotFound& e) {
    throw ConfigError(e.what());
  }
  KernelModel k = parse_kernel_model(model_text);
  DesignSpace ds;
  if (rc.space_path) {
    std::string space_text;
    try {
      space_text = read_file(*rc.space_path);
    } catch (const NotFound& e) {
      throw ConfigError(e.what());
    }
    ds = parse_design_space(space_text).with_loop_tree(k.hierarchy());
  } else {
    ds = generate_design_space(k);
  }
  return {std::move(k), std::move(ds)};
}

std::string render_best_config(const DesignSpace& ds, const Config& cfg) {
  std::string out(kDesignSpaceHeader);
  out += "\n// pinned best configuration\n";
  for (const auto& p : ds.params()) {
    const OptionValue* v = cfg.find(p.name);
    if (v == nullptr) throw InvalidConfig("configuration has no value for '" + p.name + "'");
    ParamSpec pinned = p;
    pinned.options.items = {*v};
    pinned.options.condition.reset();
    pinned.default_value = *v;
    out += "loop: " + p.scope + "\n";
    out += serialize_param(pinned) + "\n";
    out += "// concrete: " + concrete_pragma(p, *v) + "\n";
  }
  return out;
}

std::string render_trace_csv(const std::vector<TraceEntry>& trace) {
  std::string out = "# hlsdse-trace v1\neval_index,elapsed_seconds,config_key,status,cycles,best_so_far\n";
  for (const auto& e : trace) {
    out += std::to_string(e.eval_index) + "," + format_double(e.elapsed_seconds) + ",\"" + e.config_key + "\"," +
           std::string(to_string(e.status)) + "," + (e.cycles == kInfiniteCycles ? "" : std::to_string(e.cycles)) +
           "," + (e.best_so_far == kInfiniteCycles ? "" : std::to_string(e.best_so_far)) + "\n";
  }
  return out;
}

std::string render_summary(const RunReport& r) {
  std::ostringstream os;
  os << "kernel: " << r.kernel << "\n";
  os << "design space: " << r.space.grid_points << " grid points, " << (r.space.exact ? "" : "~")
     << format_double(r.space.valid_points, 0) << " valid\n";
  os << "partitions: " << r.profiles.size() << " (split on " << r.split_parameters.size()
     << " pipeline parameters), explored " << r.selected.size() << "\n";
  for (const auto& o : r.outcomes) {
    os << "  partition " << o.id << ":";
    if (o.mode_split.empty()) os << " whole space";
    for (const auto& [loop, half] : o.mode_split) os << " " << loop << "=" << to_string(half);
    os << "  evaluations " << o.result.trace.size() << "  best "
       << (o.result.feasible ? std::to_string(o.result.best_result.cycles) : std::string("infeasible")) << "\n";
  }
  os << "evaluations: " << r.evaluations << "\n";
  if (r.feasible) {
    const auto& u = r.best_result.util;
    os << "best cycles: " << r.best_result.cycles << " (partition " << *r.best_partition << ")\n";
    os << "utilization: lut " << format_double(u.lut) << ", ff " << format_double(u.ff) << ", dsp "
       << format_double(u.dsp) << ", bram " << format_double(u.bram) << "\n";
    os << "best config: " << r.best.key() << "\n";
  } else {
    os << "no feasible configuration found; default config: " << r.best.key() << "\n";
  }
  return os.str();
}

json to_report_json(const RunReport& r) {
  json j = versioned("hlsdse-run-report");
  j["kernel"] = r.kernel;
  j["split_parameters"] = r.split_parameters;
  j["space"] = {{"grid_points", r.space.grid_points}, {"valid_points", r.space.valid_points}, {"exact", r.space.exact}};
  j["profiles"] = json::array();
  for (const auto& p : r.profiles) j["profiles"].push_back(profile_json(p));
  j["selected"] = r.selected;
  j["partitions"] = json::array();
  for (const auto& o : r.outcomes) j["partitions"].push_back(outcome_json(o));
  j["feasible"] = r.feasible;
  j["best_config"] = config_json(r.best);
  j["best_result"] = r.best_result;
  j["best_partition"] = r.best_partition ? json(*r.best_partition) : json(nullptr);
  j["evaluations"] = r.evaluations;
  return j;
}

RunReport from_report_json(const json& j) {
  RunReport r;
  r.kernel = j.at("kernel").get<std::string>();
  r.split_parameters = j.at("split_parameters").get<std::vector<std::string>>();
  r.space.grid_points = j.at("space").at("grid_points").get<std::uint64_t>();
  r.space.valid_points = j.at("space").at("valid_points").get<double>();
  r.space.exact = j.at("space").at("exact").get<bool>();
  for (const auto& p : j.at("profiles")) r.profiles.push_back(profile_from(p));
  r.selected = j.at("selected").get<std::vector<std::uint64_t>>();
  for (const auto& o : j.at("partitions")) r.outcomes.push_back(outcome_from(o));
  r.feasible = j.at("feasible").get<bool>();
  r.best = config_from(j.at("best_config"));
  r.best_result = j.at("best_result").get<EvalResult>();
  if (!j.at("best_partition").is_null()) r.best_partition = j.at("best_partition").get<std::uint64_t>();
  r.evaluations = j.at("evaluations").get<std::uint64_t>();
  return r;
}

RunReport run(const RunConfig& rc, const std::atomic<bool>* stop) {
  check_run_config(rc);
  const auto wall_start = std::chrono::steady_clock::now();
  auto [k, ds] = load_inputs(rc);
  const fs::path out = rc.out_dir;
  fs::create_directories(out);

  const json state = run_state_json(rc, k, ds);
  const fs::path state_path = out / "run_state.json";
  if (rc.resume) {
    if (!fs::exists(state_path)) throw ConfigError("nothing to resume in " + out.string());
    if (json::parse(read_file(state_path)) != state) {
      throw ConfigError("settings or inputs differ from the run being resumed in " + out.string());
    }
  } else {
    clear_artifacts(out);
    write_file(state_path, state.dump(2) + "\n");
  }
  fs::create_directories(out / "checkpoint");
  write_file(out / "space.ds", serialize_design_space(ds));

  ResultCache cache(out / "results.log");
  MockOptions mock_opts;
  mock_opts.util_threshold = rc.util_threshold;
  mock_opts.delay = rc.mock_delay;
  MockHlsEvaluator backend(k, ds, mock_opts);
  CachedEvaluator evaluator(backend, cache);

  RunReport report;
  report.kernel = k.name;
  report.split_parameters = split_parameters(ds);
  report.space = space_size(ds);

  auto partitions = enumerate_partitions(ds, rc.partition_cap);
  for (const auto& p : partitions) report.profiles.push_back(profile_partition(p, evaluator));
  report.selected = select_representatives(report.profiles, rc.partitions.value_or(rc.threads), rc.seed);
  {
    json manifest = versioned("hlsdse-partitions");
    manifest["split_parameters"] = report.split_parameters;
    manifest["partitions"] = json::array();
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      json entry = profile_json(report.profiles[i]);
      entry["mode_split"] = mode_split_json(partitions[i].mode_split);
      entry["selected"] =
          std::find(report.selected.begin(), report.selected.end(), partitions[i].id) != report.selected.end();
      manifest["partitions"].push_back(std::move(entry));
    }
    write_file(out / "partitions.json", manifest.dump(2) + "\n");
  }

  // Worker pool over a queue of selected partitions.
  const std::size_t workers = rc.serial ? 1 : std::min(rc.threads, report.selected.size());
  const double capacity = rc.timeout_seconds * static_cast<double>(std::min(rc.threads, report.selected.size()));
  BudgetPool pool(capacity, rc.max_evaluations, report.selected.size());
  std::deque<std::uint64_t> queue(report.selected.begin(), report.selected.end());
  std::mutex queue_mutex;
  std::vector<PartitionOutcome> outcomes;
  std::exception_ptr failure;

  std::atomic<bool> halt{false};
  std::atomic<bool> done{false};
  std::thread watchdog([&] {
    while (!done.load()) {
      if (stop != nullptr && stop->load()) halt = true;
      if (rc.clock == BudgetClock::kWall &&
          std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count() >= rc.timeout_seconds) {
        halt = true;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  });

  auto explore_one = [&](std::uint64_t id) {
    const Partition& part = partitions.at(id);
    PartitionOutcome o;
    o.id = id;
    o.mode_split = part.mode_split;
    const fs::path ckpt = checkpoint_path(out, id);
    if (rc.resume && fs::exists(ckpt)) {
      json j = json::parse(read_file(ckpt));
      check_versioned(j, "hlsdse-checkpoint", ckpt);
      o = outcome_from(j.at("outcome"));
      auto share = pool.take();
      pool.settle(share, o.result.elapsed_seconds, o.result.trace.size());
      spdlog::info("partition {}: restored from checkpoint", id);
      return o;
    }

    auto share = pool.take();
    o.budget_seconds = share.seconds;
    o.budget_evaluations = share.evaluations;
    ExploreOptions opts;
    opts.budget.seconds = share.seconds;
    opts.budget.evaluations = share.evaluations;
    opts.budget.clock = rc.clock;
    opts.stop = &halt;
    try {
      o.result = explore_bottleneck(part.space, evaluator, opts);
    } catch (const NoFeasiblePoint&) {
      // Empty partition: nothing to explore.
      o.result = ExploreResult{};
      o.result.completed = true;
    }
    pool.settle(share, o.result.elapsed_seconds, o.result.trace.size());
    if (!halt.load()) {
      json j = versioned("hlsdse-checkpoint");
      j["outcome"] = outcome_json(o);
      write_file(ckpt, j.dump() + "\n");
    }
    return o;
  };

  auto worker = [&] {
    while (true) {
      std::uint64_t id = 0;
      {
        std::lock_guard lock(queue_mutex);
        if (queue.empty() || failure) return;
        id = queue.front();
        queue.pop_front();
      }
      try {
        auto o = explore_one(id);
        std::lock_guard lock(queue_mutex);
        outcomes.push_back(std::move(o));
      } catch (...) {
        std::lock_guard lock(queue_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  {
    std::vector<std::thread> threads;
    for (std::size_t i = 1; i < workers; ++i) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
  }
  done = true;
  watchdog.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(outcomes.begin(), outcomes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  report.outcomes = std::move(outcomes);
  auto consider = [&](const Config& cfg, const EvalResult& r, std::uint64_t id) {
    if (!report.feasible || r.cycles < report.best_result.cycles ||
        (r.cycles == report.best_result.cycles && cfg.key() < report.best.key())) {
      report.feasible = true;
      report.best = cfg;
      report.best_result = r;
      report.best_partition = id;
    }
  };
  for (const auto& o : report.outcomes) {
    report.evaluations += o.result.trace.size();
    if (o.result.feasible) consider(o.result.best, o.result.best_result, o.id);
  }
  // Profiling evaluations are real syntheses too; an unselected partition's
  // profile can beat every explored point.
  for (const auto& p : report.profiles) {
    if (!p.feasible) continue;
    if (auto r = cache.get(p.config.key()); r && r->ok()) consider(p.config, *r, p.partition_id);
  }
  if (!report.feasible) report.best = default_config(ds).value_or(Config{});

  report.backend_calls = evaluator.backend_calls();
  report.cache_hits = evaluator.cache_hits();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();

  write_file(out / "run_report.json", to_report_json(report).dump(2) + "\n");
  json stats = versioned("hlsdse-run-stats");
  stats["backend_calls"] = report.backend_calls;
  stats["cache_hits"] = report.cache_hits;
  stats["wall_seconds"] = report.wall_seconds;
  stats["interrupted"] = stop != nullptr && stop->load();
  write_file(out / "run_stats.json", stats.dump(2) + "\n");
  for (const auto& o : report.outcomes) write_file(trace_path(out, o.id), render_trace_csv(o.result.trace));
  if (report.best.size() == ds.size()) write_file(out / "best_config.pragmas", render_best_config(ds, report.best));
  return report;
}

std::string report(const fs::path& out_dir) {
  const fs::path report_path = out_dir / "run_report.json";
  if (!fs::exists(report_path)) throw NotFound("no run report in " + out_dir.string());
  const json j = json::parse(read_file(report_path));
  check_versioned(j, "hlsdse-run-report", report_path);
  RunReport r = from_report_json(j);
  for (const auto& o : r.outcomes) write_file(trace_path(out_dir, o.id), render_trace_csv(o.result.trace));
  const fs::path space_path = out_dir / "space.ds";
  if (fs::exists(space_path)) {
    const DesignSpace ds = parse_design_space(read_file(space_path));
    write_file(out_dir / "best_config.pragmas", render_best_config(ds, r.best));
  }
  return render_summary(r);
}

}  // namespace hlsdse
