#include "hochkit/hkr.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "hochkit/errors.hpp"
#include "hochkit/hochschild.hpp"

namespace hochkit {

namespace {

int permutation_sign(const std::vector<int>& p) {
	int inversions = 0;
	for (size_t i = 0; i < p.size(); ++i)
		for (size_t j = i + 1; j < p.size(); ++j)
			if (p[i] > p[j]) ++inversions;
	return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

MultiDiffOp alt(const MultiDiffOp& d) {
	const int n = d.arity();
	MultiDiffOp out(d.vars(), n);
	std::vector<int> perm(static_cast<size_t>(n));
	Rational inv_fact = Rational(1) / Rational::factorial(static_cast<unsigned long>(n));
	for (const auto& [slots, coeff] : d.terms()) {
		std::iota(perm.begin(), perm.end(), 0);
		do {
			SlotTuple s;
			s.reserve(static_cast<size_t>(n));
			for (int j = 0; j < n; ++j) s.push_back(slots[static_cast<size_t>(perm[static_cast<size_t>(j)])]);
			Rational c = inv_fact;
			if (permutation_sign(perm) < 0) c = -c;
			out.add_term(s, coeff.scaled(c));
		} while (std::next_permutation(perm.begin(), perm.end()));
	}
	return out;
}

MultiDiffOp mvf_to_op(const MultiVectorField& f) {
	if (f.degree() < 1)
		throw domain_error("comparison map: needs degree at least 1");
	const int n = f.degree();
	const int m = f.vars();
	MultiDiffOp out(m, n);
	std::vector<int> perm(static_cast<size_t>(n));
	Rational inv_fact = Rational(1) / Rational::factorial(static_cast<unsigned long>(n));
	for (const auto& [idx, coeff] : f.components()) {
		std::iota(perm.begin(), perm.end(), 0);
		do {
			SlotTuple s;
			s.reserve(static_cast<size_t>(n));
			for (int j = 0; j < n; ++j)
				s.push_back(MultiIndex::unit(m, idx[static_cast<size_t>(perm[static_cast<size_t>(j)])]));
			Rational c = inv_fact;
			if (permutation_sign(perm) < 0) c = -c;
			out.add_term(s, coeff.scaled(c));
		} while (std::next_permutation(perm.begin(), perm.end()));
	}
	return out;
}

MultiVectorField op_to_mvf(const MultiDiffOp& d) {
	MultiDiffOp a = alt(d);
	MultiVectorField out(d.vars(), d.arity());
	for (const auto& [slots, coeff] : a.terms()) {
		std::vector<int> idx;
		idx.reserve(slots.size());
		bool order_one = true;
		for (const auto& s : slots) {
			if (s.degree() != 1) {
				order_one = false;
				break;
			}
			for (int v = 0; v < d.vars(); ++v)
				if (s[v] == 1) idx.push_back(v);
		}
		if (!order_one) continue;
		out.add_component(std::move(idx), coeff);
	}
	return out;
}

namespace {

// A window basis with positional lookup: element k is
// x^{monos[k]} * d^{slots[k]}.
struct WindowBasis {
	std::vector<std::pair<SlotTuple, MultiIndex>> elems;

	struct KeyLess {
		bool operator()(const std::pair<SlotTuple, MultiIndex>& a,
		                const std::pair<SlotTuple, MultiIndex>& b) const {
			SlotTupleLess sl;
			if (sl(a.first, b.first)) return true;
			if (sl(b.first, a.first)) return false;
			return GradedLexLess{}(a.second, b.second);
		}
	};
	std::map<std::pair<SlotTuple, MultiIndex>, std::size_t, KeyLess> index;

	static WindowBasis build(const Truncation& t) {
		if (t.vars < 1) throw domain_error("window: needs at least one variable");
		if (t.arity < 1) throw domain_error("window: arity must be at least 1");
		if (t.max_slot_order < 1) throw domain_error("window: slot order must be at least 1");
		if (t.max_coeff_degree < 0) throw domain_error("window: negative coefficient degree");
		WindowBasis b;
		auto single = multi_indices_in_degree_range(t.vars, 1, t.max_slot_order);
		auto monos = multi_indices_in_degree_range(t.vars, 0, t.max_coeff_degree);
		std::vector<size_t> odo(static_cast<size_t>(t.arity), 0);
		for (;;) {
			SlotTuple slots;
			slots.reserve(odo.size());
			for (size_t j = 0; j < odo.size(); ++j) slots.push_back(single[odo[j]]);
			for (const auto& g : monos) {
				b.index.emplace(std::make_pair(slots, g), b.elems.size());
				b.elems.emplace_back(slots, g);
			}
			// Advance with the first slot most significant, matching the
			// canonical slot-tuple order.
			size_t j = odo.size();
			while (j > 0) {
				--j;
				if (++odo[j] < single.size()) break;
				odo[j] = 0;
				if (j == 0) return b;
			}
		}
	}

	std::size_t size() const { return elems.size(); }

	MultiDiffOp element(int vars, std::size_t k) const {
		return MultiDiffOp::single(
		    vars, elems[k].first,
		    Polynomial::monomial(vars, elems[k].second, 1));
	}

	// Coordinates of an operator in this basis; throws logic_error when a
	// term falls outside the window.
	std::vector<Rational> vectorize(const MultiDiffOp& d, const char* who) const {
		std::vector<Rational> v(elems.size(), Rational());
		for (const auto& [slots, coeff] : d.terms())
			for (const auto& [g, c] : coeff.terms()) {
				auto it = index.find(std::make_pair(slots, g));
				if (it == index.end())
					throw std::logic_error(std::string(who) +
					                       ": image escapes the codomain window");
				v[it->second] = c;
			}
		return v;
	}
};

int binom_int(int n, int k) {
	if (k < 0 || k > n) return 0;
	long r = 1;
	for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
	return static_cast<int>(r);
}

void parallel_columns(std::size_t count, const std::function<void(std::size_t)>& work) {
	int cap = thread_cap();
	if (cap <= 1 || count < 2) {
		for (std::size_t j = 0; j < count; ++j) work(j);
		return;
	}
	std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(cap), count);
	std::vector<std::thread> pool;
	pool.reserve(nthreads);
	for (std::size_t t = 0; t < nthreads; ++t)
		pool.emplace_back([&, t]() {
			for (std::size_t j = t; j < count; j += nthreads) work(j);
		});
	for (auto& th : pool) th.join();
}

}  // namespace

int thread_cap() {
	if (const char* env = std::getenv("HOCHKIT_THREADS")) {
		char* end = nullptr;
		long v = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<MultiDiffOp> enumerate_basis(const Truncation& t) {
	WindowBasis b = WindowBasis::build(t);
	std::vector<MultiDiffOp> out;
	out.reserve(b.size());
	for (std::size_t k = 0; k < b.size(); ++k) out.push_back(b.element(t.vars, k));
	return out;
}

std::vector<Polynomial> enumerate_monomial_basis(int vars, int max_degree) {
	std::vector<Polynomial> out;
	for (const auto& g : multi_indices_in_degree_range(vars, 0, max_degree))
		out.push_back(Polynomial::monomial(vars, g, 1));
	return out;
}

ExactMatrix delta_matrix(const Truncation& t) {
	WindowBasis dom = WindowBasis::build(t);
	Truncation tc = t;
	tc.arity += 1;
	WindowBasis cod = WindowBasis::build(tc);
	ExactMatrix out(cod.size(), dom.size());
	std::vector<std::vector<Rational>> columns(dom.size());
	parallel_columns(dom.size(), [&](std::size_t j) {
		columns[j] = cod.vectorize(hochschild_delta(dom.element(t.vars, j)), "delta matrix");
	});
	for (std::size_t j = 0; j < dom.size(); ++j)
		for (std::size_t i = 0; i < columns[j].size(); ++i)
			if (!columns[j][i].is_zero()) out.set(i, j, columns[j][i]);
	return out;
}

namespace {

// dim of (column space of M) ∩ (coordinate subspace spanned by the rows in
// `window_rows`), via ranks of stacked column sets.
std::size_t boundary_intersection_dim(const ExactMatrix& m,
                                      const std::vector<std::size_t>& window_rows) {
	ExactMatrix units(m.rows(), window_rows.size());
	for (std::size_t k = 0; k < window_rows.size(); ++k)
		units.set(window_rows[k], k, 1);
	std::size_t rank_m = m.rank();
	std::size_t rank_stacked = units.hstack(m).rank();
	return rank_m + window_rows.size() - rank_stacked;
}

}  // namespace

CohomologyReport cohomology_dims(int vars, int max_slot_order, int max_coeff_degree,
                                 int n_max, int slack) {
	if (n_max < 0) throw domain_error("cohomology: negative level");
	if (slack < 0) throw domain_error("cohomology: negative slack");
	CohomologyReport rep;
	rep.vars = vars;
	rep.max_slot_order = max_slot_order;
	rep.max_coeff_degree = max_coeff_degree;
	rep.n_max = n_max;
	rep.slack = slack;

	const int scalar_dim = binom_int(vars + max_coeff_degree, max_coeff_degree);
	for (int n = 0; n <= n_max; ++n)
		rep.hkr_prediction.push_back(binom_int(vars, n) * scalar_dim);

	// Level 0: the differential out of the scalar level vanishes over a
	// commutative algebra and nothing maps in.
	rep.basis_sizes.push_back(static_cast<std::size_t>(scalar_dim));
	rep.dims.push_back(scalar_dim);

	for (int n = 1; n <= n_max; ++n) {
		Truncation tn{vars, n, max_slot_order, max_coeff_degree};
		ExactMatrix dn = delta_matrix(tn);
		std::size_t window_dim = dn.cols();
		rep.basis_sizes.push_back(window_dim);
		std::size_t z = window_dim - dn.rank();
		std::size_t b = 0;
		if (n >= 2) {
			Truncation wide{vars, n - 1, max_slot_order + 1, max_coeff_degree + slack};
			ExactMatrix image = delta_matrix(wide);
			Truncation big{vars, n, max_slot_order + 1, max_coeff_degree + slack};
			WindowBasis big_basis = WindowBasis::build(big);
			WindowBasis small_basis = WindowBasis::build(tn);
			std::vector<std::size_t> window_rows;
			window_rows.reserve(small_basis.size());
			for (const auto& e : small_basis.elems)
				window_rows.push_back(big_basis.index.at(e));
			b = boundary_intersection_dim(image, window_rows);
		}
		rep.dims.push_back(static_cast<int>(z - b));
	}

	rep.match = true;
	for (int n = 0; n <= n_max; ++n)
		if (rep.dims[static_cast<size_t>(n)] != rep.hkr_prediction[static_cast<size_t>(n)])
			rep.match = false;
	return rep;
}

CocycleSplit split_cocycle(const MultiDiffOp& d, const Truncation& t, int degree_slack) {
	if (d.vars() != t.vars)
		throw domain_error("split: operator and window variable counts differ");
	if (d.arity() != t.arity)
		throw domain_error("split: operator arity does not match the window");
	if (d.arity() < 2)
		throw domain_error("split: needs arity at least 2 (an arity-1 cocycle is already a vector field)");
	if (degree_slack < 0) throw domain_error("split: negative slack");
	if (!d.vanishes_on_constants())
		throw domain_error("split: operator must have all slots of order at least 1");
	if (!d.is_zero() && d.syntactic_order() > t.max_slot_order)
		throw domain_error("split: operator order exceeds the window");
	for (const auto& [slots, c] : d.terms())
		if (c.total_degree() > t.max_coeff_degree)
			throw domain_error("split: coefficient degree exceeds the window");
	if (!hochschild_delta(d).is_zero())
		throw domain_error("split: operator is not a cocycle");

	MultiVectorField eta = op_to_mvf(alt(d));
	MultiDiffOp remainder = d - mvf_to_op(eta);

	Truncation te{t.vars, t.arity - 1, t.max_slot_order + 1,
	              t.max_coeff_degree + degree_slack};
	Truncation big{t.vars, t.arity, t.max_slot_order + 1,
	               t.max_coeff_degree + degree_slack};
	WindowBasis big_basis = WindowBasis::build(big);
	WindowBasis e_basis = WindowBasis::build(te);
	ExactMatrix m = delta_matrix(te);
	std::vector<Rational> rhs = big_basis.vectorize(remainder, "split");
	auto x = m.solve(rhs);
	if (!x)
		throw domain_error("split: no potential exists in the search window "
		                   "(order " + std::to_string(te.max_slot_order) +
		                   ", degree " + std::to_string(te.max_coeff_degree) + ")");
	MultiDiffOp e(t.vars, t.arity - 1);
	for (std::size_t k = 0; k < x->size(); ++k)
		if (!(*x)[k].is_zero())
			e += e_basis.element(t.vars, k).scaled((*x)[k]);
	return CocycleSplit{std::move(e), std::move(eta)};
}

}  // namespace hochkit
