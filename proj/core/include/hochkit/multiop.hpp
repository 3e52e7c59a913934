#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hochkit/polynomial.hpp"

namespace hochkit {

// One slot per tensor argument: slots[j] is the derivative multi-index
// applied to argument j.
using SlotTuple = std::vector<MultiIndex>;

// Slot tuples compare slotwise, graded-lex within each slot. Gives every
// operator a canonical term order.
struct SlotTupleLess {
	bool operator()(const SlotTuple& a, const SlotTuple& b) const;
};

struct OpTerm {
	Polynomial coeff;
	SlotTuple slots;
};

// Multidifferential operator on Q[x1..xm]:
//   D = sum_t c_t(x) * d^{alpha_t_1} (x) ... (x) d^{alpha_t_n}
// acting on n polynomial arguments. Canonical form: terms keyed by slot
// tuple, no zero coefficient polynomials.
class MultiDiffOp {
public:
	using TermMap = std::map<SlotTuple, Polynomial, SlotTupleLess>;

	MultiDiffOp(int vars, int arity);  // the zero operator
	static MultiDiffOp single(int vars, SlotTuple slots, Polynomial coeff);
	static MultiDiffOp identity_op(int vars);            // a -> a
	static MultiDiffOp multiplication(const Polynomial& p);  // a -> p*a
	static MultiDiffOp mul_op(int vars);                  // mu: (a,b) -> a*b
	static MultiDiffOp partial_op(int vars, int var);     // a -> d a / d x_{var+1}

	int vars() const { return vars_; }
	int arity() const { return arity_; }
	bool is_zero() const { return terms_.empty(); }
	const TermMap& terms() const { return terms_; }

	// Canonicalizing accumulation; drops terms whose coefficient cancels.
	void add_term(const SlotTuple& slots, const Polynomial& coeff);

	Polynomial apply(std::span<const Polynomial> args) const;

	MultiDiffOp operator-() const;
	MultiDiffOp& operator+=(const MultiDiffOp& o);
	MultiDiffOp& operator-=(const MultiDiffOp& o);
	friend MultiDiffOp operator+(MultiDiffOp a, const MultiDiffOp& b) { return a += b; }
	friend MultiDiffOp operator-(MultiDiffOp a, const MultiDiffOp& b) { return a -= b; }
	MultiDiffOp scaled(const Rational& c) const;

	friend bool operator==(const MultiDiffOp& a, const MultiDiffOp& b) {
		return a.vars_ == b.vars_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
	}

	// Max per-slot derivative order over all terms. The zero operator has no
	// syntactic order; asking for it is an error.
	int syntactic_order() const;
	// True when every term differentiates every argument at least once, so
	// the operator kills tuples containing a constant.
	bool vanishes_on_constants() const;

	// Canonical text form in the D[...] DSL, e.g. "-2*D[1|1]".
	std::string str() const;

private:
	int vars_;
	int arity_;
	TermMap terms_;
};

// [D, x_{var+1}*]: the commutator of an arity-1 operator with coordinate
// multiplication, b -> D(x*b) - x*D(b).
MultiDiffOp commutator_with_coordinate(const MultiDiffOp& d, int var);

// Recursive order test: order <= 0 means multiplication by a polynomial;
// order <= r means every coordinate commutator has order <= r-1. Quantifying
// over the generators x_i suffices over a polynomial algebra.
bool is_diff_op_of_order_at_most(const MultiDiffOp& d, int r);

// Degree-0 cochain: a bare element of the algebra.
struct ZeroCochain {
	Polynomial value;
};

}  // namespace hochkit
