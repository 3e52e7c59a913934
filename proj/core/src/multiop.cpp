#include "hochkit/multiop.hpp"

#include <algorithm>
#include <sstream>

#include "hochkit/errors.hpp"

namespace hochkit {

bool SlotTupleLess::operator()(const SlotTuple& a, const SlotTuple& b) const {
	GradedLexLess less;
	size_t n = std::min(a.size(), b.size());
	for (size_t i = 0; i < n; ++i) {
		if (less(a[i], b[i])) return true;
		if (less(b[i], a[i])) return false;
	}
	return a.size() < b.size();
}

MultiDiffOp::MultiDiffOp(int vars, int arity) : vars_(vars), arity_(arity) {
	if (vars < 1) throw domain_error("operator: needs at least one variable");
	if (arity < 1) throw domain_error("operator: arity must be at least 1");
}

MultiDiffOp MultiDiffOp::single(int vars, SlotTuple slots, Polynomial coeff) {
	MultiDiffOp d(vars, static_cast<int>(slots.size()));
	d.add_term(slots, coeff);
	return d;
}

MultiDiffOp MultiDiffOp::identity_op(int vars) {
	return single(vars, {MultiIndex(vars)}, Polynomial::constant(vars, 1));
}

MultiDiffOp MultiDiffOp::multiplication(const Polynomial& p) {
	MultiDiffOp d(p.vars(), 1);
	d.add_term({MultiIndex(p.vars())}, p);
	return d;
}

MultiDiffOp MultiDiffOp::mul_op(int vars) {
	return single(vars, {MultiIndex(vars), MultiIndex(vars)},
	              Polynomial::constant(vars, 1));
}

MultiDiffOp MultiDiffOp::partial_op(int vars, int var) {
	return single(vars, {MultiIndex::unit(vars, var)}, Polynomial::constant(vars, 1));
}

void MultiDiffOp::add_term(const SlotTuple& slots, const Polynomial& coeff) {
	if (static_cast<int>(slots.size()) != arity_)
		throw domain_error("operator: slot count does not match arity");
	for (const auto& s : slots)
		if (s.vars() != vars_)
			throw domain_error("operator: slot variable count mismatch");
	if (coeff.vars() != vars_)
		throw domain_error("operator: coefficient variable count mismatch");
	if (coeff.is_zero()) return;
	auto [it, inserted] = terms_.emplace(slots, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

Polynomial MultiDiffOp::apply(std::span<const Polynomial> args) const {
	if (static_cast<int>(args.size()) != arity_)
		throw domain_error("operator: argument count does not match arity");
	for (const auto& a : args)
		if (a.vars() != vars_)
			throw domain_error("operator: argument variable count mismatch");
	Polynomial out(vars_);
	for (const auto& [slots, coeff] : terms_) {
		Polynomial prod = coeff;
		for (size_t j = 0; j < args.size(); ++j) {
			if (prod.is_zero()) break;
			prod = prod * args[j].partial(slots[j]);
		}
		out += prod;
	}
	return out;
}

MultiDiffOp MultiDiffOp::operator-() const {
	MultiDiffOp r(vars_, arity_);
	for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
	return r;
}

MultiDiffOp& MultiDiffOp::operator+=(const MultiDiffOp& o) {
	if (vars_ != o.vars_ || arity_ != o.arity_)
		throw domain_error("operator: sum of mismatched operators");
	for (const auto& [s, c] : o.terms_) add_term(s, c);
	return *this;
}

MultiDiffOp& MultiDiffOp::operator-=(const MultiDiffOp& o) {
	if (vars_ != o.vars_ || arity_ != o.arity_)
		throw domain_error("operator: difference of mismatched operators");
	for (const auto& [s, c] : o.terms_) add_term(s, -c);
	return *this;
}

MultiDiffOp MultiDiffOp::scaled(const Rational& c) const {
	MultiDiffOp r(vars_, arity_);
	if (c.is_zero()) return r;
	for (const auto& [s, k] : terms_) r.terms_.emplace(s, k.scaled(c));
	return r;
}

int MultiDiffOp::syntactic_order() const {
	if (terms_.empty())
		throw domain_error("operator: the zero operator has no syntactic order");
	int best = 0;
	for (const auto& [slots, c] : terms_)
		for (const auto& s : slots) best = std::max(best, s.degree());
	return best;
}

bool MultiDiffOp::vanishes_on_constants() const {
	for (const auto& [slots, c] : terms_)
		for (const auto& s : slots)
			if (s.degree() == 0) return false;
	return true;
}

std::string MultiDiffOp::str() const {
	if (terms_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [slots, coeff] : terms_) {
		// Single-monomial coefficients render inline; anything longer is
		// parenthesized so the canonical form reparses exactly.
		std::string cs = coeff.str();
		bool negated = false;
		std::string body;
		if (coeff.terms().size() == 1) {
			if (cs[0] == '-') {
				negated = true;
				cs.erase(0, 1);
			}
			if (cs == "1")
				body = "";
			else
				body = cs + "*";
		} else {
			body = "(" + cs + ")*";
		}
		if (first) {
			if (negated) os << '-';
			first = false;
		} else {
			os << (negated ? " - " : " + ");
		}
		os << body << "D[";
		for (size_t j = 0; j < slots.size(); ++j) {
			if (j) os << '|';
			for (int v = 0; v < vars_; ++v) {
				if (v) os << ',';
				os << slots[j][v];
			}
		}
		os << ']';
	}
	return os.str();
}

MultiDiffOp commutator_with_coordinate(const MultiDiffOp& d, int var) {
	if (d.arity() != 1)
		throw domain_error("order test: commutator is defined for arity-1 operators");
	if (var < 0 || var >= d.vars())
		throw domain_error("order test: variable out of range");
	// [c*d^alpha, x*] = alpha_var * c * d^(alpha - e_var); multiplication
	// operators commute with the coefficient.
	MultiDiffOp r(d.vars(), 1);
	for (const auto& [slots, c] : d.terms()) {
		int e = slots[0][var];
		if (e == 0) continue;
		auto lowered = slots[0].minus(MultiIndex::unit(d.vars(), var));
		r.add_term({*lowered}, c.scaled(e));
	}
	return r;
}

bool is_diff_op_of_order_at_most(const MultiDiffOp& d, int r) {
	if (d.arity() != 1)
		throw domain_error("order test: defined for arity-1 operators");
	if (r < 0) throw domain_error("order test: negative order");
	if (r == 0) {
		// Order 0 means multiplication by a polynomial (zero included).
		for (const auto& [slots, c] : d.terms())
			if (slots[0].degree() != 0) return false;
		return true;
	}
	for (int v = 0; v < d.vars(); ++v)
		if (!is_diff_op_of_order_at_most(commutator_with_coordinate(d, v), r - 1))
			return false;
	return true;
}

}  // namespace hochkit
