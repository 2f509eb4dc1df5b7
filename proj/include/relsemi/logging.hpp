// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace relsemi::log {

/// Reads RELSEMI_LOG={error,info,debug}; defaults to error.
void init_from_env();

void debug(const std::string& msg);
void info(const std::string& msg);
void warn(const std::string& msg);
void error(const std::string& msg);

}  // namespace relsemi::log
