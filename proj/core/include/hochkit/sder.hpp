#pragma once

#include <string>
#include <vector>

#include "hochkit/multiop.hpp"

namespace hochkit {

// Polynomial vector field sum_i c_i(x) d/dx_i, stored componentwise.
struct VectorField {
	std::vector<Polynomial> components;  // size m, component i multiplies d/dx_{i+1}

	int vars() const { return static_cast<int>(components.size()); }
	bool is_zero() const;
	MultiDiffOp to_op() const;

	static VectorField zero(int vars);
	// c * d/dx_{var+1}.
	static VectorField coordinate(int vars, int var, const Polynomial& c);
	// Requires an arity-1 operator whose slots are all single first-order
	// derivatives.
	static VectorField from_op(const MultiDiffOp& d);

	friend bool operator==(const VectorField& a, const VectorField& b) {
		return a.components == b.components;
	}
};

// Composite X1 o X2 o ... o Xk of vector fields as an arity-1 operator; the
// first factor is applied last.
struct CompositionWord {
	std::vector<VectorField> factors;

	int length() const { return static_cast<int>(factors.size()); }
};

MultiDiffOp expand_word(const CompositionWord& w);

// A length-k word must be a differential operator of order <= k that kills
// constants; checks the expansion with the recursive commutator test.
bool word_order_check(const CompositionWord& w);

struct SderTerm {
	Rational scalar;
	CompositionWord word;
};

// Presentation of an operator as a combination of iterated derivations.
struct SDerDecomposition {
	int order;  // the filtration level r the words respect
	std::vector<SderTerm> words;

	MultiDiffOp expand(int vars) const;
};

// Writes an arity-1 operator of syntactic order <= r with no order-0 slots
// as a sum of composites of vector fields of length <= r: the term
// c*d^alpha with alpha = e_{i1} + ... + e_{ik}, i1 <= ... <= ik, becomes the
// word [c*d_{i1}, d_{i2}, ..., d_{ik}] (coefficient on the outermost factor).
SDerDecomposition sder_decompose(const MultiDiffOp& d, int r);

}  // namespace hochkit
