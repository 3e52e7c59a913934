#pragma once

#include <cstdint>
#include <random>

#include "hochkit/multiop.hpp"
#include "hochkit/multivector.hpp"
#include "hochkit/sder.hpp"

namespace hochkit {

// Deterministic sample builders for property checks. Every distribution is
// a function of the engine state only, so a fixed seed reproduces a run.
class RandomGen {
public:
	explicit RandomGen(std::uint64_t seed) : eng_(seed) {}

	int uniform(int lo, int hi);  // inclusive bounds
	Rational rational(int max_abs_num = 6, int max_den = 3);
	Rational nonzero_rational(int max_abs_num = 6, int max_den = 3);
	MultiIndex multi_index(int vars, int degree);
	Polynomial polynomial(int vars, int max_degree, int max_terms);
	Polynomial nonzero_polynomial(int vars, int max_degree, int max_terms);
	// Operator with every slot of order between 1 and max_order.
	MultiDiffOp dpoly_op(int vars, int arity, int max_order, int max_coeff_degree,
	                     int max_terms);
	VectorField vector_field(int vars, int max_coeff_degree);
	MultiVectorField multivector(int vars, int degree, int max_coeff_degree);
	CompositionWord word(int vars, int length, int max_coeff_degree);

private:
	std::mt19937_64 eng_;
};

}  // namespace hochkit
