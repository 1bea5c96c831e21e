// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/option_value.hpp"

#include <charconv>

namespace hlsdse {

std::string_view to_string(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::kOff:
      return "off";
    case PipelineMode::kCg:
      return "cg";
    case PipelineMode::kFg:
      return "fg";
  }
  return "off";
}

std::optional<PipelineMode> parse_pipeline_mode(std::string_view token) {
  if (token == "off") return PipelineMode::kOff;
  if (token == "cg") return PipelineMode::kCg;
  if (token == "fg") return PipelineMode::kFg;
  return std::nullopt;
}

std::string OptionValue::to_string() const {
  if (is_factor()) return std::to_string(factor());
  return std::string(hlsdse::to_string(mode()));
}

std::optional<OptionValue> OptionValue::parse(std::string_view text) {
  if (text.size() >= 2 && (text.front() == '\'' || text.front() == '"') && text.back() == text.front()) {
    text = text.substr(1, text.size() - 2);
  }
  if (auto mode = parse_pipeline_mode(text)) return OptionValue(*mode);
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return OptionValue(value);
}

}  // namespace hlsdse
