// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "hlsdse/design_space.hpp"

namespace hlsdse {

/// Parses a design-space file. See docs/design-space-format.md for the
/// grammar. Throws SyntaxError (positioned), UnknownIdentifier,
/// CyclicDependency, or EvalError (ill-sorted condition).
DesignSpace parse_design_space(std::string_view text);

/// Emits one `loop:` line plus one pragma line per parameter, in declaration
/// order. Restrictions of a view are not serialized.
std::string serialize_design_space(const DesignSpace& ds);

/// Renders a single parameter block (without the loop line).
std::string serialize_param(const ParamSpec& p);

inline constexpr std::string_view kDesignSpaceHeader = "// hlsdse-design-space v1";

}  // namespace hlsdse
