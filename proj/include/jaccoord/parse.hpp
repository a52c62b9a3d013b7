#pragma once

#include <string_view>

#include "jaccoord/bipoly.hpp"

namespace jaccoord {

/// Parses a polynomial in x and y.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' INTEGER)?
///   atom   := INTEGER ('/' INTEGER)? | 'x' | 'y' | '(' expr ')'
///
/// Whitespace is ignored. Juxtaposition is rejected ("2x" is an error).
/// Throws SyntaxError carrying the byte offset of the offending token.
BiPoly parse_poly(std::string_view text);

}  // namespace jaccoord
