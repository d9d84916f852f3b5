#include "coilphase/logging.hpp"

#include <cstdlib>
#include <iostream>

namespace coilphase {

namespace {

LogLevel parse_level(const char* text) {
  if (!text) return LogLevel::warn;
  const std::string value(text);
  if (value == "quiet") return LogLevel::quiet;
  if (value == "error") return LogLevel::error;
  if (value == "warn") return LogLevel::warn;
  if (value == "info") return LogLevel::info;
  if (value == "debug") return LogLevel::debug;
  return LogLevel::warn;
}

const char* level_name(LogLevel level) {
  switch (level) {
    case LogLevel::error:
      return "error";
    case LogLevel::warn:
      return "warning";
    case LogLevel::info:
      return "info";
    case LogLevel::debug:
      return "debug";
    default:
      return "";
  }
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("COILPHASE_LOG"));
  return level;
}

void log_message(LogLevel level, const std::string& message) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::cerr << "coilphase: " << level_name(level) << ": " << message << "\n";
}

}  // namespace coilphase
