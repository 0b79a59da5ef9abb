#pragma once

#include <string>

#include "trimcc/polynomial.hpp"

namespace trimcc {

// Parses the polynomial grammar shared by every module: variables match
// [A-Za-z_][A-Za-z0-9_]*, coefficients are integers or a/b rationals,
// operators + - * ^ with parentheses, whitespace insignificant.
// Example: "x1^2*x2 - x0^2*(x0 + x2)".
Polynomial parse_polynomial(const PolynomialRing::Ptr& ring, const std::string& text);

} // namespace trimcc
