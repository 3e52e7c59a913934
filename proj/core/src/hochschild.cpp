#include "hochkit/hochschild.hpp"

#include "hochkit/errors.hpp"

namespace hochkit {

namespace {

void check_compat(const MultiDiffOp& f, const MultiDiffOp& g, const char* what) {
	if (f.vars() != g.vars())
		throw domain_error(std::string(what) + ": variable count mismatch");
}

}  // namespace

MultiDiffOp partial_compose(const MultiDiffOp& f, int slot, const MultiDiffOp& g) {
	check_compat(f, g, "partial composition");
	if (slot < 1 || slot > f.arity())
		throw domain_error("partial composition: slot index out of range");
	const int m = f.vars();
	const int q = g.arity();
	MultiDiffOp out(m, f.arity() + q - 1);
	for (const auto& [fslots, fcoeff] : f.terms()) {
		const MultiIndex& alpha = fslots[static_cast<size_t>(slot - 1)];
		for (const auto& [gslots, gcoeff] : g.terms()) {
			// d^alpha applied to g's output distributes over the coefficient
			// (part 0) and each of g's q arguments (parts 1..q).
			for_each_split(alpha, q + 1,
			               [&](const std::vector<MultiIndex>& parts, const Rational& mult) {
				Polynomial c = gcoeff.partial(parts[0]);
				if (c.is_zero()) return;
				c = (fcoeff * c).scaled(mult);
				SlotTuple slots;
				slots.reserve(static_cast<size_t>(out.arity()));
				for (int j = 0; j < slot - 1; ++j) slots.push_back(fslots[static_cast<size_t>(j)]);
				for (int j = 0; j < q; ++j)
					slots.push_back(gslots[static_cast<size_t>(j)].plus(parts[static_cast<size_t>(j) + 1]));
				for (int j = slot; j < f.arity(); ++j) slots.push_back(fslots[static_cast<size_t>(j)]);
				out.add_term(slots, c);
			});
		}
	}
	return out;
}

MultiDiffOp total_compose(const MultiDiffOp& f, const MultiDiffOp& g) {
	check_compat(f, g, "composition");
	const int n = g.arity() - 1;
	MultiDiffOp out(f.vars(), f.arity() + g.arity() - 1);
	for (int i = 1; i <= f.arity(); ++i) {
		MultiDiffOp piece = partial_compose(f, i, g);
		if ((n * (i + 1)) % 2 != 0) piece = -piece;
		out += piece;
	}
	return out;
}

MultiDiffOp cup(const MultiDiffOp& f, const MultiDiffOp& g, SignConvention conv) {
	check_compat(f, g, "cup product");
	MultiDiffOp out(f.vars(), f.arity() + g.arity());
	bool flip = conv == SignConvention::PaperSigned && (f.arity() * g.arity()) % 2 != 0;
	for (const auto& [fslots, fcoeff] : f.terms()) {
		for (const auto& [gslots, gcoeff] : g.terms()) {
			SlotTuple slots = fslots;
			slots.insert(slots.end(), gslots.begin(), gslots.end());
			Polynomial c = fcoeff * gcoeff;
			out.add_term(slots, flip ? -c : c);
		}
	}
	return out;
}

MultiDiffOp gerstenhaber(const MultiDiffOp& f, const MultiDiffOp& g) {
	check_compat(f, g, "bracket");
	const int m = f.arity() - 1;
	const int n = g.arity() - 1;
	MultiDiffOp out = total_compose(f, g);
	MultiDiffOp rev = total_compose(g, f);
	if ((m * n) % 2 == 0)
		out -= rev;
	else
		out += rev;
	return out;
}

MultiDiffOp hochschild_delta(const MultiDiffOp& f) {
	const int m = f.vars();
	const int n = f.arity();
	MultiDiffOp out(m, n + 1);
	const MultiIndex zero(m);
	for (const auto& [slots, coeff] : f.terms()) {
		// a0 * f(a1,...,an): fresh order-0 slot in front.
		{
			SlotTuple s;
			s.reserve(static_cast<size_t>(n) + 1);
			s.push_back(zero);
			s.insert(s.end(), slots.begin(), slots.end());
			out.add_term(s, coeff);
		}
		// f(..., a_i * a_{i+1}, ...): slot i splits over the product by the
		// Leibniz rule, sign (-1)^{i+1}.
		for (int i = 0; i < n; ++i) {
			bool neg = (i % 2 == 0);
			for (const auto& [beta, gamma] : binary_splits(slots[static_cast<size_t>(i)])) {
				std::vector<MultiIndex> parts = {beta, gamma};
				Rational mult = multi_index_split_coeff(slots[static_cast<size_t>(i)], parts);
				SlotTuple s;
				s.reserve(static_cast<size_t>(n) + 1);
				for (int j = 0; j < i; ++j) s.push_back(slots[static_cast<size_t>(j)]);
				s.push_back(beta);
				s.push_back(gamma);
				for (int j = i + 1; j < n; ++j) s.push_back(slots[static_cast<size_t>(j)]);
				out.add_term(s, neg ? -coeff.scaled(mult) : coeff.scaled(mult));
			}
		}
		// (-1)^{n+1} f(a0,...,a_{n-1}) * an: fresh order-0 slot at the back.
		{
			SlotTuple s = slots;
			s.push_back(zero);
			out.add_term(s, (n % 2 != 0) ? coeff : -coeff);
		}
	}
	return out;
}

MultiDiffOp hochschild_delta(const ZeroCochain& f, int vars) {
	if (f.value.vars() != vars)
		throw domain_error("differential: variable count mismatch");
	// a -> a*p - p*a vanishes over a commutative algebra.
	return MultiDiffOp(vars, 1);
}

MultiDiffOp hochschild_delta_via_bracket(const MultiDiffOp& f) {
	MultiDiffOp b = gerstenhaber(MultiDiffOp::mul_op(f.vars()), f);
	return ((f.arity() - 1) % 2 != 0) ? -b : b;
}

std::pair<MultiDiffOp, MultiDiffOp> associativity_defect(const MultiDiffOp& nu) {
	if (nu.arity() != 2)
		throw domain_error("associativity defect: needs an arity-2 operator");
	MultiDiffOp half_bracket = gerstenhaber(nu, nu).scaled(Rational(1, 2));
	MultiDiffOp direct = partial_compose(nu, 1, nu) - partial_compose(nu, 2, nu);
	return {half_bracket, direct};
}

}  // namespace hochkit
