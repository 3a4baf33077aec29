#pragma once

#include <stdexcept>
#include <string>

namespace srcartier {

/// Raised when the ideal-theoretic and the free-face criteria disagree on
/// the same complex. Either the equivalence is false or there is a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed facet or ideal text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace srcartier
