#include "civicroute/errors.hpp"

namespace civicroute {

namespace {

std::string format_location(const std::string& source, int line, int col, const std::string& what) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, int col, const std::string& what)
    : ConfigError(format_location(source, line, col, what)), line_(line), col_(col) {}

}  // namespace civicroute
