// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "biregkit/polynomial.hpp"

namespace bireg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Variables x1..xn, y1..ym; integer or a/b coefficients; ^, optional *, +, -,
/// parentheses. `line` is the 1-based position reported in errors.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1);

}  // namespace bireg
