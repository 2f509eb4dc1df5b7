// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/logging.hpp"

#include <cstdlib>
#include <string_view>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace relsemi::log {
namespace {

std::shared_ptr<spdlog::logger> logger() {
  static std::shared_ptr<spdlog::logger> lg = [] {
    auto l = spdlog::stderr_color_mt("relsemi");
    l->set_pattern("[%l] %v");
    l->set_level(spdlog::level::err);
    return l;
  }();
  return lg;
}

}  // namespace

void init_from_env() {
  const char* env = std::getenv("RELSEMI_LOG");
  std::string_view v = env ? env : "error";
  auto level = spdlog::level::err;
  if (v == "info") level = spdlog::level::info;
  else if (v == "debug") level = spdlog::level::debug;
  logger()->set_level(level);
}

void debug(const std::string& msg) { logger()->debug(msg); }
void info(const std::string& msg) { logger()->info(msg); }
void warn(const std::string& msg) { logger()->warn(msg); }
void error(const std::string& msg) { logger()->error(msg); }

}  // namespace relsemi::log
