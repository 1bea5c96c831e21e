// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/kernel_model.hpp"

#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "hlsdse/errors.hpp"

namespace hlsdse {

namespace {

void add_loops(LoopHierarchy& h, const LoopNode& node, const std::string& parent) {
  h.add({node.id, parent, {}, node.trip_count});
  for (const auto& child : node.children) add_loops(h, child, node.id);
}

const LoopNode* find_in(const LoopNode& node, std::string_view id) {
  if (node.id == id) return &node;
  for (const auto& child : node.children) {
    if (const auto* hit = find_in(child, id)) return hit;
  }
  return nullptr;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return !parse_pipeline_mode(s) && s != "for" && s != "in" && s != "if" && s != "and" && s != "or" && s != "loop";
}

}  // namespace

LoopHierarchy KernelModel::hierarchy() const {
  LoopHierarchy h;
  for (const auto& loop : top.children) add_loops(h, loop, "");
  return h;
}

const LoopNode* KernelModel::find_loop(std::string_view id) const {
  for (const auto& loop : top.children) {
    if (const auto* hit = find_in(loop, id)) return hit;
  }
  return nullptr;
}

AreaCost effective_area(const LoopNode& loop) {
  if (loop.area) return *loop.area;
  const auto cc = static_cast<double>(loop.compute_cycles);
  return {64.0 * cc + 16.0, 96.0 * cc + 16.0, cc};
}

void check_model(const KernelModel& k) {
  if (k.name.empty()) throw ModelError("kernel model has no name");
  const auto& b = k.resource_budget;
  if (!(b.lut > 0 && b.ff > 0 && b.dsp > 0 && b.bram > 0)) throw ModelError("resource budget must be positive");
  if (k.bus_bytes_per_cycle <= 0) throw ModelError("bus_bytes_per_cycle must be positive");
  if (k.hls_effort_limit <= 0) throw ModelError("hls_effort_limit must be positive");
  if (k.bram_block_bytes <= 0) throw ModelError("bram_block_bytes must be positive");

  std::set<std::string> ids{k.top.id.empty() ? k.name : k.top.id};
  std::function<void(const LoopNode&)> check = [&](const LoopNode& n) {
    if (!is_identifier(n.id)) throw ModelError("loop id '" + n.id + "' is not an identifier");
    if (!ids.insert(n.id).second) throw ModelError("duplicate loop id '" + n.id + "'");
    if (n.trip_count < 1) throw ModelError("loop '" + n.id + "' has trip count " + std::to_string(n.trip_count));
    if (n.compute_cycles < 0) throw ModelError("loop '" + n.id + "' has negative compute cycles");
    for (const auto& s : n.mem_streams) {
      if (s.bytes_per_iter < 1) throw ModelError("stream '" + s.array_id + "' in loop '" + n.id + "' moves no bytes");
    }
    for (const auto& [pf, ii] : n.quirks) {
      if (pf < 1 || ii < 1) throw ModelError("loop '" + n.id + "' has a malformed quirk entry");
    }
    for (const auto& [pf, scale] : n.area_scale) {
      if (pf < 1 || !(scale > 0)) throw ModelError("loop '" + n.id + "' has a malformed area_scale entry");
    }
    for (const auto& c : n.children) check(c);
  };
  for (const auto& loop : k.top.children) check(loop);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> words;
  std::vector<std::size_t> columns;
};

Line split(std::string_view raw, std::size_t number) {
  Line line;
  line.number = number;
  if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
  std::size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    if (i >= raw.size()) break;
    const std::size_t start = i;
    while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    line.words.emplace_back(raw.substr(start, i - start));
    line.columns.push_back(start + 1);
  }
  return line;
}

[[noreturn]] void fail(const Line& line, std::size_t word, const std::string& msg) {
  const std::size_t col = word < line.columns.size() ? line.columns[word] : 1;
  throw SyntaxError(msg, line.number, col);
}

template <typename T>
T number(const Line& line, std::size_t word, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    fail(line, word, "expected a number, found '" + std::string(text) + "'");
  }
  return value;
}

/// "key=value" pairs into a map; duplicate keys are errors.
std::map<std::string, double> pairs(const Line& line, std::size_t first) {
  std::map<std::string, double> out;
  for (std::size_t i = first; i < line.words.size(); ++i) {
    const auto& w = line.words[i];
    const auto eq = w.find('=');
    if (eq == std::string::npos) fail(line, i, "expected key=value, found '" + w + "'");
    const auto key = w.substr(0, eq);
    if (!out.emplace(key, number<double>(line, i, std::string_view(w).substr(eq + 1))).second) {
      fail(line, i, "duplicate key '" + key + "'");
    }
  }
  return out;
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

KernelModel parse_kernel_model(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number_ = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = split(text.substr(start, end - start), number_++);
    if (!line.words.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  if (lines.empty()) throw SyntaxError("empty kernel model", 1, 1);
  {
    const auto& head = lines.front();
    std::string joined;
    for (std::size_t i = 0; i < head.words.size(); ++i) joined += (i ? " " : "") + head.words[i];
    if (joined != kKernelModelHeader) {
      throw SyntaxError("expected header '" + std::string(kKernelModelHeader) + "'", head.number, 1);
    }
  }

  KernelModel k;
  std::vector<LoopNode*> stack{&k.top};
  bool have_budget = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& head = line.words[0];
    LoopNode& cur = *stack.back();
    const bool at_top = stack.size() == 1;

    if (head == "}") {
      if (at_top) fail(line, 0, "unbalanced '}'");
      if (line.words.size() != 1) fail(line, 1, "unexpected text after '}'");
      stack.pop_back();
      continue;
    }
    if (head == "loop") {
      if (line.words.size() != 3 || line.words[2] != "{") fail(line, 0, "expected 'loop <id> {'");
      cur.children.push_back(LoopNode{});
      cur.children.back().id = line.words[1];
      stack.push_back(&cur.children.back());
      continue;
    }
    if (head.empty() || head.back() != ':') fail(line, 0, "expected a field name ending in ':'");
    const std::string key = head.substr(0, head.size() - 1);
    auto single = [&]() -> const std::string& {
      if (line.words.size() != 2) fail(line, 0, "field '" + key + "' takes exactly one value");
      return line.words[1];
    };

    if (key == "compute_cycles") {
      cur.compute_cycles = number<std::int64_t>(line, 1, single());
    } else if (!at_top && key == "trip_count") {
      cur.trip_count = number<std::int64_t>(line, 1, single());
    } else if (!at_top && key == "mem") {
      if (line.words.size() != 4) fail(line, 0, "expected 'mem: <array> <load|store> <bytes_per_iter>'");
      MemStream s;
      s.array_id = line.words[1];
      if (line.words[2] == "load") {
        s.direction = StreamDirection::kLoad;
      } else if (line.words[2] == "store") {
        s.direction = StreamDirection::kStore;
      } else {
        fail(line, 2, "direction must be load or store");
      }
      s.bytes_per_iter = number<std::int64_t>(line, 3, line.words[3]);
      cur.mem_streams.push_back(std::move(s));
    } else if (!at_top && key == "quirk") {
      for (std::size_t i = 1; i < line.words.size(); ++i) {
        const auto& w = line.words[i];
        const auto eq = w.find('=');
        if (eq == std::string::npos) fail(line, i, "expected <factor>=<ii>");
        const auto pf = number<std::int64_t>(line, i, std::string_view(w).substr(0, eq));
        cur.quirks[pf] = number<std::int64_t>(line, i, std::string_view(w).substr(eq + 1));
      }
    } else if (!at_top && key == "area_scale") {
      for (std::size_t i = 1; i < line.words.size(); ++i) {
        const auto& w = line.words[i];
        const auto eq = w.find('=');
        if (eq == std::string::npos) fail(line, i, "expected <factor>=<multiplier>");
        const auto pf = number<std::int64_t>(line, i, std::string_view(w).substr(0, eq));
        cur.area_scale[pf] = number<double>(line, i, std::string_view(w).substr(eq + 1));
      }
    } else if (!at_top && key == "area") {
      auto kv = pairs(line, 1);
      AreaCost a;
      for (const auto& [name, value] : kv) {
        if (name == "lut") {
          a.lut = value;
        } else if (name == "ff") {
          a.ff = value;
        } else if (name == "dsp") {
          a.dsp = value;
        } else {
          fail(line, 1, "unknown area key '" + name + "'");
        }
      }
      cur.area = a;
    } else if (at_top && key == "name") {
      k.name = single();
    } else if (at_top && key == "bus_bytes_per_cycle") {
      k.bus_bytes_per_cycle = number<std::int64_t>(line, 1, single());
    } else if (at_top && key == "hls_effort_limit") {
      k.hls_effort_limit = number<std::int64_t>(line, 1, single());
    } else if (at_top && key == "bram_block_bytes") {
      k.bram_block_bytes = number<std::int64_t>(line, 1, single());
    } else if (at_top && key == "budget") {
      auto kv = pairs(line, 1);
      for (const char* r : {"lut", "ff", "dsp", "bram"}) {
        if (kv.count(r) == 0) fail(line, 0, std::string("budget is missing '") + r + "'");
      }
      if (kv.size() != 4) fail(line, 1, "budget takes exactly lut, ff, dsp and bram");
      k.resource_budget = {kv["lut"], kv["ff"], kv["dsp"], kv["bram"]};
      have_budget = true;
    } else {
      fail(line, 0, "unknown field '" + key + "'" + (at_top ? " at kernel level" : " in a loop"));
    }
  }
  if (stack.size() != 1) {
    throw SyntaxError("unterminated loop block '" + stack.back()->id + "'", lines.back().number + 1, 1);
  }
  if (!have_budget) throw ModelError("kernel model has no budget line");
  k.top.id = k.name;
  k.top.trip_count = 1;
  check_model(k);
  return k;
}

namespace {

void write_loop(std::ostringstream& os, const LoopNode& n, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  os << pad << "loop " << n.id << " {\n";
  os << pad << "  trip_count: " << n.trip_count << "\n";
  os << pad << "  compute_cycles: " << n.compute_cycles << "\n";
  if (n.area) {
    os << pad << "  area: lut=" << format_number(n.area->lut) << " ff=" << format_number(n.area->ff)
       << " dsp=" << format_number(n.area->dsp) << "\n";
  }
  for (const auto& s : n.mem_streams) {
    os << pad << "  mem: " << s.array_id << (s.direction == StreamDirection::kLoad ? " load " : " store ")
       << s.bytes_per_iter << "\n";
  }
  if (!n.quirks.empty()) {
    os << pad << "  quirk:";
    for (const auto& [pf, ii] : n.quirks) os << " " << pf << "=" << ii;
    os << "\n";
  }
  if (!n.area_scale.empty()) {
    os << pad << "  area_scale:";
    for (const auto& [pf, scale] : n.area_scale) os << " " << pf << "=" << format_number(scale);
    os << "\n";
  }
  for (const auto& c : n.children) write_loop(os, c, depth + 1);
  os << pad << "}\n";
}

}  // namespace

std::string serialize_kernel_model(const KernelModel& k) {
  std::ostringstream os;
  os << kKernelModelHeader << "\n";
  os << "name: " << k.name << "\n";
  os << "bus_bytes_per_cycle: " << k.bus_bytes_per_cycle << "\n";
  os << "hls_effort_limit: " << k.hls_effort_limit << "\n";
  os << "bram_block_bytes: " << k.bram_block_bytes << "\n";
  const auto& b = k.resource_budget;
  os << "budget: lut=" << format_number(b.lut) << " ff=" << format_number(b.ff) << " dsp=" << format_number(b.dsp)
     << " bram=" << format_number(b.bram) << "\n";
  if (k.top.compute_cycles != 0) os << "compute_cycles: " << k.top.compute_cycles << "\n";
  for (const auto& loop : k.top.children) write_loop(os, loop, 0);
  return os.str();
}

}  // namespace hlsdse
