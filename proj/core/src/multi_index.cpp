#include "hochkit/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hochkit/errors.hpp"

namespace hochkit {

MultiIndex::MultiIndex(std::vector<int> exps) : e_(std::move(exps)) {
	if (e_.empty()) throw domain_error("multi-index: needs at least one variable");
	for (int x : e_)
		if (x < 0) throw domain_error("multi-index: negative entry");
}

MultiIndex MultiIndex::unit(int vars, int var) {
	if (var < 0 || var >= vars) throw domain_error("multi-index: variable out of range");
	MultiIndex u(vars);
	u.e_[static_cast<size_t>(var)] = 1;
	return u;
}

int MultiIndex::degree() const {
	return std::accumulate(e_.begin(), e_.end(), 0);
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
	if (vars() != o.vars()) throw domain_error("multi-index: variable count mismatch");
	MultiIndex r = *this;
	for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
	return r;
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& o) const {
	if (vars() != o.vars()) throw domain_error("multi-index: variable count mismatch");
	MultiIndex r = *this;
	for (size_t i = 0; i < e_.size(); ++i) {
		r.e_[i] -= o.e_[i];
		if (r.e_[i] < 0) return std::nullopt;
	}
	return r;
}

std::string MultiIndex::str() const {
	std::ostringstream os;
	os << '(';
	for (size_t i = 0; i < e_.size(); ++i) {
		if (i) os << ',';
		os << e_[i];
	}
	os << ')';
	return os.str();
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
	int da = a.degree(), db = b.degree();
	if (da != db) return da < db;
	return std::lexicographical_compare(a.exps().begin(), a.exps().end(),
	                                    b.exps().begin(), b.exps().end());
}

Rational multi_index_split_coeff(const MultiIndex& alpha,
                                 std::span<const MultiIndex> parts) {
	MultiIndex sum(alpha.vars());
	for (const auto& p : parts) sum = sum.plus(p);
	if (!(sum == alpha))
		throw domain_error("multi-index split: parts do not sum to the index");
	Rational c = 1;
	for (int v = 0; v < alpha.vars(); ++v) {
		c *= Rational::factorial(static_cast<unsigned long>(alpha[v]));
		for (const auto& p : parts)
			c /= Rational::factorial(static_cast<unsigned long>(p[v]));
	}
	return c;
}

std::vector<std::pair<MultiIndex, MultiIndex>> binary_splits(const MultiIndex& alpha) {
	std::vector<std::pair<MultiIndex, MultiIndex>> out;
	std::vector<int> beta(static_cast<size_t>(alpha.vars()), 0);
	// Odometer over 0 <= beta_v <= alpha_v.
	for (;;) {
		std::vector<int> gamma(beta.size());
		for (size_t v = 0; v < beta.size(); ++v) gamma[v] = alpha[static_cast<int>(v)] - beta[v];
		out.emplace_back(MultiIndex(beta), MultiIndex(gamma));
		size_t v = 0;
		while (v < beta.size()) {
			if (beta[v] < alpha[static_cast<int>(v)]) {
				++beta[v];
				break;
			}
			beta[v] = 0;
			++v;
		}
		if (v == beta.size()) break;
	}
	return out;
}

namespace {

void split_rec(const MultiIndex& remaining, int parts_left,
               std::vector<MultiIndex>& acc,
               const std::function<void(const std::vector<MultiIndex>&, const Rational&)>& fn,
               const MultiIndex& alpha) {
	if (parts_left == 1) {
		acc.push_back(remaining);
		fn(acc, multi_index_split_coeff(alpha, acc));
		acc.pop_back();
		return;
	}
	for (auto& [beta, gamma] : binary_splits(remaining)) {
		acc.push_back(beta);
		split_rec(gamma, parts_left - 1, acc, fn, alpha);
		acc.pop_back();
	}
}

}  // namespace

void for_each_split(const MultiIndex& alpha, int parts,
                    const std::function<void(const std::vector<MultiIndex>&,
                                             const Rational&)>& fn) {
	if (parts < 1) throw domain_error("multi-index split: needs at least one part");
	std::vector<MultiIndex> acc;
	acc.reserve(static_cast<size_t>(parts));
	split_rec(alpha, parts, acc, fn, alpha);
}

std::vector<MultiIndex> multi_indices_in_degree_range(int vars, int min_degree,
                                                      int max_degree) {
	if (vars < 1) throw domain_error("multi-index enumeration: needs at least one variable");
	std::vector<MultiIndex> out;
	std::vector<int> cur(static_cast<size_t>(vars), 0);
	std::function<void(int, int)> rec = [&](int pos, int left) {
		if (pos == vars - 1) {
			cur[static_cast<size_t>(pos)] = left;
			out.emplace_back(cur);
			return;
		}
		for (int k = 0; k <= left; ++k) {
			cur[static_cast<size_t>(pos)] = k;
			rec(pos + 1, left - k);
		}
	};
	for (int d = std::max(0, min_degree); d <= max_degree; ++d) rec(0, d);
	return out;
}

}  // namespace hochkit
