#ifndef ZAPPA_ERRORS_HPP
#define ZAPPA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zappa {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured cap (degree, cache size, coset count, search budget) was hit.
/// Callers distinguish this from bad input: the request is well-formed but
/// too large for the current limits.
struct limit_error : error {
  using error::error;
};

/// Malformed textual input (cycle notation, group files).
struct parse_error : error {
  int line;
  int column;

  parse_error(const std::string& what, int line_, int column_)
      : error(what + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace zappa

#endif
