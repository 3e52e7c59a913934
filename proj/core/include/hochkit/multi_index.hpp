#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hochkit/rational.hpp"

namespace hochkit {

// Exponent/derivative multi-index over a fixed variable count m.
// Entries are non-negative; component i corresponds to the variable x_{i+1}.
class MultiIndex {
public:
	explicit MultiIndex(int vars) : e_(static_cast<size_t>(vars), 0) {}
	explicit MultiIndex(std::vector<int> exps);

	static MultiIndex unit(int vars, int var);  // e_var

	int vars() const { return static_cast<int>(e_.size()); }
	int degree() const;  // |alpha|
	int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
	bool is_zero() const { return degree() == 0; }
	const std::vector<int>& exps() const { return e_; }

	MultiIndex plus(const MultiIndex& o) const;
	// Componentwise difference; empty when any entry would go negative.
	std::optional<MultiIndex> minus(const MultiIndex& o) const;

	friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }

	std::string str() const;  // "(a1,...,am)"

private:
	std::vector<int> e_;
};

// Graded-lexicographic order: compare total degree first, then entries left
// to right. Strict weak order used for every canonical container.
struct GradedLexLess {
	bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Multinomial factor governing how a derivative multi-index distributes over
// a product: prod_v alpha_v! / prod_j parts[j]_v!. The parts must sum to
// alpha componentwise.
Rational multi_index_split_coeff(const MultiIndex& alpha,
                                 std::span<const MultiIndex> parts);

// All ordered pairs (beta, gamma) with beta + gamma = alpha.
std::vector<std::pair<MultiIndex, MultiIndex>> binary_splits(const MultiIndex& alpha);

// Enumerates every ordered way of writing alpha as a sum of `parts`
// multi-indices, invoking fn(parts_vector, multinomial_coefficient).
void for_each_split(const MultiIndex& alpha, int parts,
                    const std::function<void(const std::vector<MultiIndex>&,
                                             const Rational&)>& fn);

// All multi-indices on `vars` variables with degree in [min_degree,
// max_degree], in graded-lex ascending order.
std::vector<MultiIndex> multi_indices_in_degree_range(int vars, int min_degree,
                                                      int max_degree);

}  // namespace hochkit
