#ifndef COILPHASE_LOGGING_HPP
#define COILPHASE_LOGGING_HPP

#include <string>

namespace coilphase {

enum class LogLevel { quiet = 0, error = 1, warn = 2, info = 3, debug = 4 };

/// Diagnostic verbosity, read once from COILPHASE_LOG
/// (quiet|error|warn|info|debug, default warn).
LogLevel log_level();

/// Writes "coilphase: <level>: <message>" to stderr when enabled.
void log_message(LogLevel level, const std::string& message);

}  // namespace coilphase

#endif  // COILPHASE_LOGGING_HPP
