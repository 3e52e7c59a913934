#pragma once

#include <map>
#include <string>
#include <vector>

#include "hochkit/polynomial.hpp"

namespace hochkit {

// Polynomial multivector field of fixed degree n: a combination of
// d_{i1} ^ ... ^ d_{in} over strictly increasing index tuples (0-based
// variable indices) with polynomial coefficients. Degree 0 is a plain
// polynomial keyed by the empty tuple.
class MultiVectorField {
public:
	using ComponentMap = std::map<std::vector<int>, Polynomial>;

	MultiVectorField(int vars, int degree);

	int vars() const { return vars_; }
	int degree() const { return degree_; }
	bool is_zero() const { return comps_.empty(); }
	const ComponentMap& components() const { return comps_; }

	// Accumulates c * d_{idx[0]} ^ ... ^ d_{idx[n-1]}; the tuple is sorted
	// into increasing order with the according sign, repeated indices drop
	// the contribution.
	void add_component(std::vector<int> idx, const Polynomial& c);

	MultiVectorField operator-() const;
	MultiVectorField& operator+=(const MultiVectorField& o);
	MultiVectorField& operator-=(const MultiVectorField& o);
	friend MultiVectorField operator+(MultiVectorField a, const MultiVectorField& b) { return a += b; }
	friend MultiVectorField operator-(MultiVectorField a, const MultiVectorField& b) { return a -= b; }
	MultiVectorField scaled(const Rational& c) const;

	friend bool operator==(const MultiVectorField& a, const MultiVectorField& b) {
		return a.vars_ == b.vars_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
	}

	// Canonical text form, e.g. "x1*W[1,2] - W[1,3]"; degree 0 prints the
	// bare polynomial.
	std::string str() const;

private:
	int vars_;
	int degree_;
	ComponentMap comps_;
};

MultiVectorField wedge(const MultiVectorField& a, const MultiVectorField& b);

}  // namespace hochkit
