#ifndef JSTRETCH_PARSE_HPP
#define JSTRETCH_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "jstretch/errors.hpp"
#include "jstretch/polynomial.hpp"

namespace jst {

/// Parse failure; column is 1-based within the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::string reason, int column) : Error(std::move(reason)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, int column) : ParseError("unknown variable '" + name + "'", column) {}
};

/// Polynomials with integer coefficients, + - * ^ and parentheses; e.g. "x^2*y - 3*z + 1".
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// A parenthesized, comma-separated list "(f1, f2, ...)"; "()" is the empty list.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text);

}  // namespace jst

#endif
