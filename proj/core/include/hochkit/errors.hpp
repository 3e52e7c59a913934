#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hochkit {

// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
	explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Domain violations: mismatched variable counts or arities, indices out of
// range, division by zero, operations applied outside their preconditions.
class domain_error : public error {
public:
	explicit domain_error(const std::string& what) : error(what) {}
};

// Text DSL errors. Carries the 1-based position of the offending token and
// the set of token descriptions that would have been accepted there.
class parse_error : public error {
public:
	parse_error(const std::string& what, int line, int column,
	            std::vector<std::string> expected)
	    : error(what), line_(line), column_(column), expected_(std::move(expected)) {}

	int line() const { return line_; }
	int column() const { return column_; }
	const std::vector<std::string>& expected() const { return expected_; }

private:
	int line_;
	int column_;
	std::vector<std::string> expected_;
};

}  // namespace hochkit
