#pragma once

#include <stdexcept>
#include <string>

#include "arrlik/polynomial.hpp"

namespace arrlik {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
  std::size_t position;
};

// Grammar (whitespace ignored):
//
//   expr     := ['+'|'-'] term { ('+'|'-') term }
//   term     := factor { '*' factor }
//   factor   := base [ '^' integer ]
//   base     := rational | variable | '(' expr ')'
//   rational := integer [ '/' integer ]
//
// Variables must be declared in the ring. Exponents are nonnegative
// integers. print() output parses back to the same polynomial.
Polynomial parse_poly(const std::string& text, const Ring& ring);
Polynomial parse_poly(const std::string& text, const Ring& ring, const TermOrder& order);

}  // namespace arrlik
