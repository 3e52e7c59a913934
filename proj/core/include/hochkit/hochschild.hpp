#pragma once

#include <utility>

#include "hochkit/multiop.hpp"

namespace hochkit {

// Sign convention for the cup product. Unsigned is plain slot concatenation;
// PaperSigned carries the extra (-1)^(arity(f)*arity(g)) prefactor. All
// stated identities (degree-1 derivation rule, cup-to-wedge comparison) are
// relative to Unsigned, which is the default everywhere.
enum class SignConvention { Unsigned, PaperSigned };

// f o_i g: substitute g into the i-th argument of f (i is 1-based,
// 1 <= i <= arity(f)). Result has arity arity(f) + arity(g) - 1. The i-th
// slot of f distributes over g's coefficient and slots by the generalized
// Leibniz rule with multinomial split coefficients.
MultiDiffOp partial_compose(const MultiDiffOp& f, int slot, const MultiDiffOp& g);

// f o g = sum_i (-1)^{(arity(g)-1)(i+1)} f o_i g.
MultiDiffOp total_compose(const MultiDiffOp& f, const MultiDiffOp& g);

MultiDiffOp cup(const MultiDiffOp& f, const MultiDiffOp& g,
                SignConvention conv = SignConvention::Unsigned);

// [[f, g]] = f o g - (-1)^{mn} g o f, with m = arity(f)-1, n = arity(g)-1.
MultiDiffOp gerstenhaber(const MultiDiffOp& f, const MultiDiffOp& g);

// The Hochschild differential: for f of arity n,
//   (delta f)(a0,...,an) = a0*f(a1,...,an)
//                        + sum_{i=0}^{n-1} (-1)^{i+1} f(...,a_i*a_{i+1},...)
//                        + (-1)^{n+1} f(a0,...,a_{n-1})*an.
MultiDiffOp hochschild_delta(const MultiDiffOp& f);
// Degree-0 case: a -> a*p - p*a, identically zero over a commutative algebra.
MultiDiffOp hochschild_delta(const ZeroCochain& f, int vars);

// Same differential routed through the bracket with the multiplication:
// (-1)^{arity(f)-1} [[mu, f]].
MultiDiffOp hochschild_delta_via_bracket(const MultiDiffOp& f);

// For arity-2 nu: (1/2 [[nu, nu]], nu o_1 nu - nu o_2 nu). Both components
// vanish iff nu is associative; they are computed by independent routes and
// must agree.
std::pair<MultiDiffOp, MultiDiffOp> associativity_defect(const MultiDiffOp& nu);

}  // namespace hochkit
