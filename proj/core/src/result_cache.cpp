// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/result_cache.hpp"

#include <chrono>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "hlsdse/errors.hpp"

namespace hlsdse {

namespace {

using nlohmann::json;

std::int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

json header_json() { return json{{"format", std::string(ResultCache::kFormat)}, {"version", ResultCache::kVersion}}; }

json record_json(const CacheRecord& r) {
  json j = r.result;
  j["key"] = r.config_key;
  json cfg = json::object();
  for (const auto& [name, value] : r.config) cfg[name] = value.to_string();
  j["config"] = std::move(cfg);
  j["timestamp"] = r.timestamp;
  return j;
}

CacheRecord parse_record(const std::string& line) {
  const json j = json::parse(line);
  CacheRecord r;
  r.result = j.get<EvalResult>();
  for (const auto& [name, value] : j.at("config").items()) {
    auto v = OptionValue::parse(value.get<std::string>());
    if (!v) throw StorageError("bad option value for '" + name + "'");
    r.config.set(name, *v);
  }
  r.config_key = j.at("key").get<std::string>();
  if (r.config_key != r.config.key()) throw StorageError("record key does not match its config");
  r.timestamp = j.value("timestamp", std::int64_t{0});
  return r;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path log_path) : path_(std::move(log_path)) { load(); }

void ResultCache::load() {
  const auto& path = *path_;
  std::string text;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StorageError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  if (text.empty()) {
    log_.open(path, std::ios::binary | std::ios::trunc);
    if (!log_) throw StorageError("cannot create " + path.string());
    log_ << header_json().dump() << '\n';
    log_.flush();
    return;
  }

  std::size_t pos = 0;
  std::size_t line_no = 0;
  std::uintmax_t keep = text.size();
  bool need_newline = false;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const bool terminated = eol != std::string::npos;
    const std::string line = text.substr(pos, terminated ? eol - pos : std::string::npos);
    const std::size_t next = terminated ? eol + 1 : text.size();
    const bool last = next >= text.size();
    ++line_no;

    if (line_no == 1) {
      json h;
      try {
        h = json::parse(line);
      } catch (const json::exception&) {
        throw StorageError(path.string() + ": missing results-log header");
      }
      if (h.value("format", "") != kFormat) throw StorageError(path.string() + ": not a results log");
      if (h.value("version", 0) != kVersion) {
        throw StorageError(path.string() + ": unsupported results-log version " + h.value("version", json()).dump());
      }
      need_newline = !terminated;
      pos = next;
      continue;
    }

    if (line.empty() && terminated) {
      pos = next;
      continue;
    }
    try {
      CacheRecord r = parse_record(line);
      if (!index_.contains(r.config_key)) {
        index_.emplace(r.config_key, records_.size());
        records_.push_back(std::move(r));
      }
      need_newline = !terminated;
    } catch (const std::exception& e) {
      if (!last) {
        throw StorageError(path.string() + ":" + std::to_string(line_no) + ": corrupt record: " + e.what());
      }
      spdlog::warn("{}:{}: dropping torn trailing record ({})", path.string(), line_no, e.what());
      keep = pos;
      need_newline = false;
    }
    pos = next;
  }

  if (keep < text.size()) std::filesystem::resize_file(path, keep);
  log_.open(path, std::ios::binary | std::ios::app);
  if (!log_) throw StorageError("cannot append to " + path.string());
  if (need_newline) log_ << '\n';
  log_.flush();
}

std::optional<EvalResult> ResultCache::get(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return records_[it->second].result;
}

EvalResult ResultCache::put(const Config& cfg, const EvalResult& result) {
  CacheRecord r{cfg.key(), cfg, result, now_ms()};
  std::unique_lock lock(mutex_);
  if (auto it = index_.find(r.config_key); it != index_.end()) return records_[it->second].result;
  if (log_.is_open()) {
    log_ << record_json(r).dump() << '\n';
    log_.flush();
    if (!log_) throw StorageError("write to " + path_->string() + " failed");
  }
  index_.emplace(r.config_key, records_.size());
  records_.push_back(std::move(r));
  return result;
}

std::size_t ResultCache::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

std::vector<CacheRecord> ResultCache::records() const {
  std::shared_lock lock(mutex_);
  return records_;
}

}  // namespace hlsdse
