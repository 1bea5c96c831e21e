// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "hlsdse/kernel_model.hpp"

namespace hlsdse::bench {

inline KernelModel fixture_kernel(const std::string& name) {
  std::ifstream in(std::string(HLSDSE_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_kernel_model(ss.str());
}

}  // namespace hlsdse::bench
