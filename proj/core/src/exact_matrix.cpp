#include "hochkit/exact_matrix.hpp"

#include "hochkit/errors.hpp"

namespace hochkit {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), rows_data_(rows) {}

void ExactMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
	if (i >= rows_ || j >= cols_) throw domain_error("matrix: index out of range");
	if (v.is_zero())
		rows_data_[i].erase(j);
	else
		rows_data_[i][j] = v;
}

Rational ExactMatrix::get(std::size_t i, std::size_t j) const {
	if (i >= rows_ || j >= cols_) throw domain_error("matrix: index out of range");
	auto it = rows_data_[i].find(j);
	return it == rows_data_[i].end() ? Rational() : it->second;
}

namespace {

// row_a -= factor * row_b, sparse.
void axpy(ExactMatrix::SparseRow& a, const Rational& factor,
          const ExactMatrix::SparseRow& b) {
	for (const auto& [j, v] : b) {
		auto it = a.find(j);
		if (it == a.end()) {
			a.emplace(j, -(factor * v));
		} else {
			it->second -= factor * v;
			if (it->second.is_zero()) a.erase(it);
		}
	}
}

}  // namespace

std::size_t ExactMatrix::rank() const {
	std::vector<SparseRow> work = rows_data_;
	std::vector<bool> used(rows_, false);
	std::size_t rank = 0;
	for (std::size_t col = 0; col < cols_; ++col) {
		std::size_t pivot = rows_;
		for (std::size_t i = 0; i < rows_; ++i) {
			if (used[i]) continue;
			if (work[i].count(col)) {
				pivot = i;
				break;
			}
		}
		if (pivot == rows_) continue;
		used[pivot] = true;
		++rank;
		Rational pval = work[pivot].at(col);
		for (std::size_t i = 0; i < rows_; ++i) {
			if (i == pivot || used[i]) continue;
			auto it = work[i].find(col);
			if (it == work[i].end()) continue;
			Rational factor = it->second / pval;
			axpy(work[i], factor, work[pivot]);
		}
	}
	return rank;
}

std::optional<std::vector<Rational>> ExactMatrix::solve(
    const std::vector<Rational>& b) const {
	if (b.size() != rows_) throw domain_error("matrix: rhs size mismatch");
	std::vector<SparseRow> work = rows_data_;
	std::vector<Rational> rhs = b;
	std::vector<std::size_t> pivot_row_of_col(cols_, rows_);
	std::vector<bool> used(rows_, false);
	for (std::size_t col = 0; col < cols_; ++col) {
		std::size_t pivot = rows_;
		for (std::size_t i = 0; i < rows_; ++i) {
			if (used[i]) continue;
			if (work[i].count(col)) {
				pivot = i;
				break;
			}
		}
		if (pivot == rows_) continue;
		used[pivot] = true;
		pivot_row_of_col[col] = pivot;
		Rational pval = work[pivot].at(col);
		for (std::size_t i = 0; i < rows_; ++i) {
			if (i == pivot) continue;
			auto it = work[i].find(col);
			if (it == work[i].end()) continue;
			Rational factor = it->second / pval;
			axpy(work[i], factor, work[pivot]);
			rhs[i] -= factor * rhs[pivot];
		}
	}
	// Rows reduced to zero must have zero rhs, otherwise no solution.
	for (std::size_t i = 0; i < rows_; ++i)
		if (work[i].empty() && !rhs[i].is_zero()) return std::nullopt;
	std::vector<Rational> x(cols_, Rational());
	for (std::size_t col = 0; col < cols_; ++col) {
		std::size_t i = pivot_row_of_col[col];
		if (i == rows_) continue;  // free variable, left at zero
		x[col] = rhs[i] / work[i].at(col);
	}
	return x;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& other) const {
	if (rows_ != other.rows_) throw domain_error("matrix: hstack row mismatch");
	ExactMatrix out(rows_, cols_ + other.cols_);
	out.rows_data_ = rows_data_;
	for (std::size_t i = 0; i < rows_; ++i)
		for (const auto& [j, v] : other.rows_data_[i])
			out.rows_data_[i].emplace(j + cols_, v);
	return out;
}

}  // namespace hochkit
