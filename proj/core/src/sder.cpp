#include "hochkit/sder.hpp"

#include "hochkit/errors.hpp"
#include "hochkit/hochschild.hpp"

namespace hochkit {

bool VectorField::is_zero() const {
	for (const auto& c : components)
		if (!c.is_zero()) return false;
	return true;
}

MultiDiffOp VectorField::to_op() const {
	if (components.empty()) throw domain_error("vector field: no components");
	MultiDiffOp d(vars(), 1);
	for (int i = 0; i < vars(); ++i)
		d.add_term({MultiIndex::unit(vars(), i)}, components[static_cast<size_t>(i)]);
	return d;
}

VectorField VectorField::zero(int vars) {
	if (vars < 1) throw domain_error("vector field: needs at least one variable");
	return VectorField{std::vector<Polynomial>(static_cast<size_t>(vars), Polynomial(vars))};
}

VectorField VectorField::coordinate(int vars, int var, const Polynomial& c) {
	if (var < 0 || var >= vars) throw domain_error("vector field: variable out of range");
	VectorField x = zero(vars);
	x.components[static_cast<size_t>(var)] = c;
	return x;
}

VectorField VectorField::from_op(const MultiDiffOp& d) {
	if (d.arity() != 1)
		throw domain_error("vector field: operator must have arity 1");
	VectorField x = zero(d.vars());
	for (const auto& [slots, c] : d.terms()) {
		if (slots[0].degree() != 1)
			throw domain_error("vector field: operator has a slot of order != 1");
		for (int v = 0; v < d.vars(); ++v)
			if (slots[0][v] == 1) x.components[static_cast<size_t>(v)] += c;
	}
	return x;
}

MultiDiffOp expand_word(const CompositionWord& w) {
	if (w.factors.empty())
		throw domain_error("composition word: needs at least one factor");
	int m = w.factors.front().vars();
	for (const auto& f : w.factors)
		if (f.vars() != m)
			throw domain_error("composition word: variable count mismatch");
	// Innermost factor first; each step wraps the next field around it.
	MultiDiffOp out = w.factors.back().to_op();
	for (auto it = std::next(w.factors.rbegin()); it != w.factors.rend(); ++it)
		out = partial_compose(it->to_op(), 1, out);
	return out;
}

bool word_order_check(const CompositionWord& w) {
	MultiDiffOp d = expand_word(w);
	if (d.is_zero()) return true;
	return is_diff_op_of_order_at_most(d, w.length()) && d.vanishes_on_constants();
}

MultiDiffOp SDerDecomposition::expand(int vars) const {
	MultiDiffOp out(vars, 1);
	for (const auto& t : words)
		out += expand_word(t.word).scaled(t.scalar);
	return out;
}

SDerDecomposition sder_decompose(const MultiDiffOp& d, int r) {
	if (d.arity() != 1)
		throw domain_error("decomposition: defined for arity-1 operators");
	if (r < 1) throw domain_error("decomposition: order must be at least 1");
	if (!d.vanishes_on_constants())
		throw domain_error("decomposition: operator must kill constants (no order-0 slots)");
	if (!d.is_zero() && d.syntactic_order() > r)
		throw domain_error("decomposition: operator order exceeds the requested level");
	const int m = d.vars();
	SDerDecomposition out{r, {}};
	for (const auto& [slots, c] : d.terms()) {
		const MultiIndex& alpha = slots[0];
		CompositionWord w;
		bool outermost = true;
		for (int v = 0; v < m; ++v) {
			for (int k = 0; k < alpha[v]; ++k) {
				if (outermost) {
					w.factors.push_back(VectorField::coordinate(m, v, c));
					outermost = false;
				} else {
					w.factors.push_back(
					    VectorField::coordinate(m, v, Polynomial::constant(m, 1)));
				}
			}
		}
		out.words.push_back(SderTerm{Rational(1), std::move(w)});
	}
	return out;
}

}  // namespace hochkit
