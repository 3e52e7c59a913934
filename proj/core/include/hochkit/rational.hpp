#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hochkit {

// Exact rational scalar. Always kept in canonical form: fully reduced,
// denominator > 0, zero stored as 0/1.
class Rational {
public:
	Rational() : v_(0) {}
	Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
	Rational(long num, long den);

	// Accepts "p", "-p" or "p/q" in base 10.
	static Rational parse(std::string_view text);
	static Rational from_strings(const std::string& num, const std::string& den);
	static Rational factorial(unsigned long n);
	static Rational binomial(unsigned long n, unsigned long k);

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	int sign() const { return sgn(v_); }

	Rational operator-() const;
	Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
	Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
	Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
	Rational& operator/=(const Rational& o);

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

	friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

	Rational abs() const;

	// "p" when the denominator is 1, otherwise "p/q".
	std::string str() const;
	std::string numerator_str() const;
	std::string denominator_str() const;

	friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
	explicit Rational(mpq_class v) : v_(std::move(v)) {}

	mpq_class v_;
};

}  // namespace hochkit
