#pragma once

#include <string>

#include "slfem/assembly.hpp"

namespace slfem {

/// Compiles an arithmetic expression in the variables x and y into a
/// callable field.  Supports + - * / ^ (right-associative), unary signs,
/// parentheses, numeric literals, and the constant pi.  Throws ParseError
/// on malformed input or unknown symbols.
ScalarField parse_expression(const std::string& text);

}  // namespace slfem
