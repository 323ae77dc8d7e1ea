#pragma once

#include <string>

#include "wa/element.hpp"

namespace wa {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_), col(col_) {}
};

// Grammar (both rings):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] (rational | var ['^' nat] | '(' expr ')')
// Weyl variables: x1..xn, d1..dn (aliases x, d when n=1); products are
// noncommutative and normalized via weyl_mul. Commutative variables:
// X1..Xn, Y1..Yn (aliases X, Y when n=1).
WeylElement parse_weyl(const std::string& text, int n);
Poly parse_poly(const std::string& text, int n);

} // namespace wa
