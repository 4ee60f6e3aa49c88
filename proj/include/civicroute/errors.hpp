#pragma once

#include <stdexcept>
#include <string>

namespace civicroute {

// Bad input data, bad configuration, or bad command usage. The CLI maps
// these to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failure while parsing a structured text file; carries the 1-based
// line/column of the offending token.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& source, int line, int col, const std::string& what);

  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_;
  int col_;
};

// No route exists between the requested endpoints. Cannot occur on a
// validated strongly connected network; kept for defense. Exit code 2.
class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant (a bug, not bad input). Exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace civicroute
