// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace hlsdse {

enum class PipelineMode : std::uint8_t { kOff, kCg, kFg };

std::string_view to_string(PipelineMode mode);
std::optional<PipelineMode> parse_pipeline_mode(std::string_view token);

/// One option of a tuning parameter: an integer factor or a pipeline mode.
///
/// Integers and modes are distinct sorts. Ordering between sorts exists only
/// so that values can live in ordered containers; it carries no meaning.
class OptionValue {
 public:
  OptionValue() : value_(std::int64_t{1}) {}
  OptionValue(std::int64_t factor) : value_(factor) {}  // NOLINT(google-explicit-constructor)
  OptionValue(int factor) : value_(std::int64_t{factor}) {}  // NOLINT(google-explicit-constructor)
  OptionValue(PipelineMode mode) : value_(mode) {}  // NOLINT(google-explicit-constructor)

  bool is_factor() const noexcept { return std::holds_alternative<std::int64_t>(value_); }
  bool is_mode() const noexcept { return std::holds_alternative<PipelineMode>(value_); }

  std::int64_t factor() const { return std::get<std::int64_t>(value_); }
  PipelineMode mode() const { return std::get<PipelineMode>(value_); }

  /// True for the values that turn a pragma off (factor 1, mode off).
  bool is_off() const noexcept {
    return is_factor() ? factor() == 1 : mode() == PipelineMode::kOff;
  }

  std::string to_string() const;

  /// Parses "off", "cg", "fg" or a decimal integer, optionally quoted.
  static std::optional<OptionValue> parse(std::string_view text);

  friend bool operator==(const OptionValue&, const OptionValue&) = default;
  friend auto operator<=>(const OptionValue&, const OptionValue&) = default;

 private:
  std::variant<std::int64_t, PipelineMode> value_;
};

}  // namespace hlsdse
