// Text form of bivariate polynomials.
//
// Grammar (whitespace insignificant, juxtaposition multiplies):
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*'? factor)*
//   factor   := base ('^' uint)?
//   base     := 'x' | 'y' | rational | '(' expr ')'
//   rational := int ('/' uint)?
//
// Canonical print: terms ordered by y-degree (major, descending) then by
// x-degree ascending; integer coefficients bare, rationals as a/b.
#pragma once

#include <stdexcept>
#include <string>

#include "equising/bipoly.hpp"

namespace equising {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

BiPoly parse_poly(const std::string& text);

// As above, but rejects any intermediate value whose y-degree exceeds the
// cap before expanding it (so "(y^2-x^3)^100000" fails fast).
BiPoly parse_poly(const std::string& text, long long max_y_degree);

std::string to_string(const BiPoly& p);
std::string to_string(const XPoly& p);

}  // namespace equising
