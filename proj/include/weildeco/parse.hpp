#pragma once

#include "weildeco/rational_function.hpp"

#include <string>

namespace weildeco {

// Expression grammar: identifiers x1..xn or z0..zn, nonnegative integer
// literals, + - * / ^ with integer exponents, parentheses; whitespace is
// ignored. Parse errors carry a 1-based character position. On Cox rings
// the numerator and denominator of the result must each be homogeneous.
RatFunc parseExpression(const std::string& src, const Ring& ring);

}  // namespace weildeco
