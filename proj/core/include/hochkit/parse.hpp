#pragma once

#include <string_view>

#include "hochkit/multiop.hpp"
#include "hochkit/polynomial.hpp"

namespace hochkit {

// Text forms. Polynomials: rational literals, variables x1..xm with '^'
// powers, '*', '+', '-', parentheses, e.g. "3/2*x1^2*x2 - 1". Operators:
// sums of terms "[factors *] D[slot|...|slot]" where each slot lists m
// derivative orders, e.g. "x1*D[1,0|0,2] - 2*D[1,0|1,0]". Errors carry
// line/column and the expected-token set (parse_error).

Polynomial parse_polynomial(std::string_view src, int vars);

// A bare constant-zero polynomial expression is accepted as the zero
// operator of arity 1 (the canonical printer renders zero operators as "0").
MultiDiffOp parse_operator(std::string_view src, int vars);

}  // namespace hochkit
