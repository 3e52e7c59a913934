#pragma once

#include <map>
#include <string>

#include "hochkit/multi_index.hpp"
#include "hochkit/rational.hpp"

namespace hochkit {

// Sparse exact polynomial in Q[x1..xm]. Terms are held in a graded-lex
// ordered map and zero coefficients are never stored, so equal polynomials
// have identical representations and serialize identically.
class Polynomial {
public:
	using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

	explicit Polynomial(int vars);
	static Polynomial constant(int vars, const Rational& c);
	static Polynomial monomial(int vars, const MultiIndex& alpha, const Rational& c);
	static Polynomial variable(int vars, int var);  // x_{var+1}

	int vars() const { return vars_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	// The value of a constant polynomial (zero included).
	Rational constant_value() const;
	// Max total degree over terms; -1 for the zero polynomial.
	int total_degree() const;
	const TermMap& terms() const { return terms_; }

	void add_term(const MultiIndex& alpha, const Rational& c);

	Polynomial operator-() const;
	Polynomial& operator+=(const Polynomial& o);
	Polynomial& operator-=(const Polynomial& o);
	friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
	friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
	friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
	Polynomial scaled(const Rational& c) const;

	friend bool operator==(const Polynomial& a, const Polynomial& b) {
		return a.vars_ == b.vars_ && a.terms_ == b.terms_;
	}

	// d/dx_{var+1}.
	Polynomial partial(int var) const;
	// Iterated partial prescribed by a multi-index.
	Polynomial partial(const MultiIndex& alpha) const;

	// Canonical text form, leading term first, e.g. "3/2*x1^2*x2 - 1".
	std::string str() const;

private:
	int vars_;
	TermMap terms_;
};

}  // namespace hochkit
