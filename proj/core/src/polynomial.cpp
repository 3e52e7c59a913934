#include "hochkit/polynomial.hpp"

#include <sstream>

#include "hochkit/errors.hpp"

namespace hochkit {

namespace {

void check_same_vars(const Polynomial& a, const Polynomial& b) {
	if (a.vars() != b.vars())
		throw domain_error("polynomial: variable count mismatch (" +
		                   std::to_string(a.vars()) + " vs " + std::to_string(b.vars()) + ")");
}

}  // namespace

Polynomial::Polynomial(int vars) : vars_(vars) {
	if (vars < 1) throw domain_error("polynomial: needs at least one variable");
}

Polynomial Polynomial::constant(int vars, const Rational& c) {
	Polynomial p(vars);
	p.add_term(MultiIndex(vars), c);
	return p;
}

Polynomial Polynomial::monomial(int vars, const MultiIndex& alpha, const Rational& c) {
	if (alpha.vars() != vars)
		throw domain_error("polynomial: multi-index variable count mismatch");
	Polynomial p(vars);
	p.add_term(alpha, c);
	return p;
}

Polynomial Polynomial::variable(int vars, int var) {
	return monomial(vars, MultiIndex::unit(vars, var), 1);
}

bool Polynomial::is_constant() const {
	if (terms_.empty()) return true;
	return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

Rational Polynomial::constant_value() const {
	if (!is_constant()) throw domain_error("polynomial: not a constant");
	return terms_.empty() ? Rational() : terms_.begin()->second;
}

int Polynomial::total_degree() const {
	if (terms_.empty()) return -1;
	// The map is graded-lex ordered, so the last key has maximal degree.
	return terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const MultiIndex& alpha, const Rational& c) {
	if (alpha.vars() != vars_)
		throw domain_error("polynomial: multi-index variable count mismatch");
	if (c.is_zero()) return;
	auto [it, inserted] = terms_.emplace(alpha, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

Polynomial Polynomial::operator-() const {
	Polynomial r(vars_);
	for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
	return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
	check_same_vars(*this, o);
	for (const auto& [a, c] : o.terms_) add_term(a, c);
	return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
	check_same_vars(*this, o);
	for (const auto& [a, c] : o.terms_) add_term(a, -c);
	return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
	check_same_vars(a, b);
	Polynomial r(a.vars());
	for (const auto& [aa, ca] : a.terms_)
		for (const auto& [ab, cb] : b.terms_)
			r.add_term(aa.plus(ab), ca * cb);
	return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
	Polynomial r(vars_);
	if (c.is_zero()) return r;
	for (const auto& [a, k] : terms_) r.terms_.emplace(a, k * c);
	return r;
}

Polynomial Polynomial::partial(int var) const {
	if (var < 0 || var >= vars_)
		throw domain_error("polynomial: derivative index out of range");
	Polynomial r(vars_);
	for (const auto& [a, c] : terms_) {
		int e = a[var];
		if (e == 0) continue;
		auto lowered = a.minus(MultiIndex::unit(vars_, var));
		r.add_term(*lowered, c * Rational(e));
	}
	return r;
}

Polynomial Polynomial::partial(const MultiIndex& alpha) const {
	if (alpha.vars() != vars_)
		throw domain_error("polynomial: derivative multi-index variable count mismatch");
	Polynomial r = *this;
	for (int v = 0; v < vars_; ++v)
		for (int k = 0; k < alpha[v]; ++k) r = r.partial(v);
	return r;
}

std::string Polynomial::str() const {
	if (terms_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	// Leading (highest graded-lex) term first.
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		const auto& [a, c] = *it;
		Rational mag = c.abs();
		if (first) {
			if (c.sign() < 0) os << '-';
			first = false;
		} else {
			os << (c.sign() < 0 ? " - " : " + ");
		}
		bool has_vars = !a.is_zero();
		if (!has_vars) {
			os << mag.str();
		} else {
			bool need_star = false;
			if (!mag.is_one()) {
				os << mag.str();
				need_star = true;
			}
			for (int v = 0; v < vars_; ++v) {
				if (a[v] == 0) continue;
				if (need_star) os << '*';
				os << 'x' << (v + 1);
				if (a[v] > 1) os << '^' << a[v];
				need_star = true;
			}
		}
	}
	return os.str();
}

}  // namespace hochkit
