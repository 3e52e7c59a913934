#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hochkit/rational.hpp"

namespace hochkit {

// Exact rational matrix with sparse rows. Sized at construction; reads of
// unset entries give zero. Rank and solve run plain Gaussian elimination
// over Q (lowest-index pivot row, exact arithmetic), which is deterministic
// and fast enough for the very sparse desk-scale matrices produced by the
// basis windows.
class ExactMatrix {
public:
	using SparseRow = std::map<std::size_t, Rational>;

	ExactMatrix(std::size_t rows, std::size_t cols);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	void set(std::size_t i, std::size_t j, const Rational& v);
	Rational get(std::size_t i, std::size_t j) const;
	const std::vector<SparseRow>& row_data() const { return rows_data_; }

	std::size_t rank() const;

	// Any exact solution of A x = b (free variables set to zero), or empty
	// when the system is inconsistent.
	std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

	// [this | other], matching row counts.
	ExactMatrix hstack(const ExactMatrix& other) const;

private:
	std::size_t rows_, cols_;
	std::vector<SparseRow> rows_data_;
};

}  // namespace hochkit
