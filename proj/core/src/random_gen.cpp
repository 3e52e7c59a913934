#include "hochkit/random_gen.hpp"

#include <algorithm>
#include <functional>

#include "hochkit/errors.hpp"

namespace hochkit {

int RandomGen::uniform(int lo, int hi) {
	return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

Rational RandomGen::rational(int max_abs_num, int max_den) {
	return Rational(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
}

Rational RandomGen::nonzero_rational(int max_abs_num, int max_den) {
	for (;;) {
		Rational r = rational(max_abs_num, max_den);
		if (!r.is_zero()) return r;
	}
}

MultiIndex RandomGen::multi_index(int vars, int degree) {
	std::vector<int> e(static_cast<size_t>(vars), 0);
	for (int k = 0; k < degree; ++k) ++e[static_cast<size_t>(uniform(0, vars - 1))];
	return MultiIndex(std::move(e));
}

Polynomial RandomGen::polynomial(int vars, int max_degree, int max_terms) {
	Polynomial p(vars);
	int terms = uniform(0, max_terms);
	for (int t = 0; t < terms; ++t)
		p.add_term(multi_index(vars, uniform(0, max_degree)), rational());
	return p;
}

Polynomial RandomGen::nonzero_polynomial(int vars, int max_degree, int max_terms) {
	for (;;) {
		Polynomial p(vars);
		int terms = uniform(1, std::max(1, max_terms));
		for (int t = 0; t < terms; ++t)
			p.add_term(multi_index(vars, uniform(0, max_degree)), nonzero_rational());
		if (!p.is_zero()) return p;
	}
}

MultiDiffOp RandomGen::dpoly_op(int vars, int arity, int max_order,
                                int max_coeff_degree, int max_terms) {
	MultiDiffOp d(vars, arity);
	int terms = uniform(1, std::max(1, max_terms));
	for (int t = 0; t < terms; ++t) {
		SlotTuple slots;
		slots.reserve(static_cast<size_t>(arity));
		for (int j = 0; j < arity; ++j)
			slots.push_back(multi_index(vars, uniform(1, max_order)));
		d.add_term(slots, nonzero_polynomial(vars, max_coeff_degree, 2));
	}
	return d;
}

VectorField RandomGen::vector_field(int vars, int max_coeff_degree) {
	VectorField x = VectorField::zero(vars);
	for (int v = 0; v < vars; ++v)
		x.components[static_cast<size_t>(v)] = polynomial(vars, max_coeff_degree, 2);
	return x;
}

MultiVectorField RandomGen::multivector(int vars, int degree, int max_coeff_degree) {
	MultiVectorField f(vars, degree);
	if (degree > vars) return f;
	// Walk all increasing tuples, keep each with probability ~1/2.
	std::vector<int> idx(static_cast<size_t>(degree));
	std::function<void(int, int)> rec = [&](int pos, int from) {
		if (pos == degree) {
			if (uniform(0, 1) == 1)
				f.add_component(idx, polynomial(vars, max_coeff_degree, 2));
			return;
		}
		for (int v = from; v <= vars - (degree - pos); ++v) {
			idx[static_cast<size_t>(pos)] = v;
			rec(pos + 1, v + 1);
		}
	};
	if (degree == 0) {
		f.add_component({}, nonzero_polynomial(vars, max_coeff_degree, 2));
		return f;
	}
	rec(0, 0);
	return f;
}

CompositionWord RandomGen::word(int vars, int length, int max_coeff_degree) {
	CompositionWord w;
	for (int k = 0; k < length; ++k) {
		VectorField x = vector_field(vars, max_coeff_degree);
		if (x.is_zero())
			x = VectorField::coordinate(vars, uniform(0, vars - 1),
			                            Polynomial::constant(vars, 1));
		w.factors.push_back(std::move(x));
	}
	return w;
}

}  // namespace hochkit
