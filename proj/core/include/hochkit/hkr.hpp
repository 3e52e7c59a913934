#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hochkit/exact_matrix.hpp"
#include "hochkit/multiop.hpp"
#include "hochkit/multivector.hpp"

namespace hochkit {

// Slot-antisymmetrization: alt(D) = (1/n!) sum_sigma sign(sigma) D^sigma,
// where D^sigma permutes the slots of every term. Idempotent, and kills
// coboundaries (alt o delta = 0).
MultiDiffOp alt(const MultiDiffOp& d);

// The comparison map from multivector fields into cochains: a component
// c * d_{i1} ^ ... ^ d_{in} becomes c * alt(d_{i1} (x) ... (x) d_{in}).
// Requires degree >= 1.
MultiDiffOp mvf_to_op(const MultiVectorField& f);

// The reverse reading: alternates the operator, keeps the terms whose slots
// are all single first-order derivatives and reassembles their coefficients
// into antisymmetric components. Left inverse of mvf_to_op.
MultiVectorField op_to_mvf(const MultiDiffOp& d);

// Finite-dimensional window of the cochain spaces: operators with `arity`
// slots, each of derivative order between 1 and max_slot_order, coefficient
// total degree at most max_coeff_degree.
struct Truncation {
	int vars;
	int arity;
	int max_slot_order;
	int max_coeff_degree;
};

// All basis operators x^gamma * d^{alpha_1} (x) ... (x) d^{alpha_n} of the
// window, in canonical order (slot tuples ascending, coefficient monomial
// ascending within a tuple). Requires arity >= 1.
std::vector<MultiDiffOp> enumerate_basis(const Truncation& t);

// The arity-0 level of the truncated complex: monomials of degree <= d.
std::vector<Polynomial> enumerate_monomial_basis(int vars, int max_degree);

// Matrix of the differential from the window (arity, r, d) into the window
// (arity+1, r, d): column j holds the coordinates of delta applied to basis
// element j. An image falling outside the codomain window signals a bug and
// raises std::logic_error. Column assembly fans out across threads, capped
// by HOCHKIT_THREADS.
ExactMatrix delta_matrix(const Truncation& t);

struct CohomologyReport {
	int vars;
	int max_slot_order;
	int max_coeff_degree;
	int n_max;
	int slack;
	std::vector<int> dims;            // dim H^n for n = 0..n_max
	std::vector<std::size_t> basis_sizes;  // window dimensions per level
	std::vector<int> hkr_prediction;  // C(m,n) * C(m+d,d)
	bool match;
};

// Computes dim H^n on the truncated complex for n = 0..n_max: kernel rank of
// the windowed differential minus the dimension of the boundary space
// reached from the enlarged window (arity n-1, order r+1, degree d+slack),
// intersected with the target window (rank of stacked columns).
CohomologyReport cohomology_dims(int vars, int max_slot_order, int max_coeff_degree,
                                 int n_max, int slack = 2);

struct CocycleSplit {
	MultiDiffOp e;         // arity n-1 potential
	MultiVectorField eta;  // alternating multiderivation part
};

// Splits a cocycle D (arity n >= 2, inside the window t) as
// D = delta(E) + mvf_to_op(eta) with eta = op_to_mvf(alt(D)) forced and E
// solved exactly in the window (n-1, r+1, d+slack). Raises a domain error
// when D is not a cocycle or no E exists in the search window.
CocycleSplit split_cocycle(const MultiDiffOp& d, const Truncation& t,
                           int degree_slack = 2);

// Thread cap honoured by parallel sections: HOCHKIT_THREADS when set to a
// positive integer, otherwise the hardware concurrency.
int thread_cap();

}  // namespace hochkit
