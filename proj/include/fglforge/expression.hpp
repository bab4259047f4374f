#pragma once

// Parser for the coefficient expression grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' exponent)?
//   atom   := int | int '/' int | ident | '(' expr ')'
//
// Exponents are signed integers, optionally parenthesised. Unary minus binds
// looser than '^', so "-beta^2" is -(beta^2), which is how the printer writes it.

#include <string_view>

#include "fglforge/rings.hpp"

namespace fglforge {

/// Exact evaluation of `src` in `ring`. Errors (SyntaxError, UnknownVariable,
/// NonIntegerExponent, NotRepresentable) report "line L, column C".
Element parse_expression(std::string_view src, const RingPtr& ring);

}  // namespace fglforge
