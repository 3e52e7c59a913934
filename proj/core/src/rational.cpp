#include "hochkit/rational.hpp"

#include <ostream>

#include "hochkit/errors.hpp"

namespace hochkit {

Rational::Rational(long num, long den) {
	if (den == 0) throw domain_error("rational: zero denominator");
	v_ = mpq_class(num, den);
	v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
	mpq_class v;
	if (v.set_str(std::string(text), 10) != 0)
		throw domain_error("rational: malformed literal '" + std::string(text) + "'");
	if (sgn(v.get_den()) == 0) throw domain_error("rational: zero denominator");
	v.canonicalize();
	return Rational(std::move(v));
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
	mpz_class n, d;
	if (n.set_str(num, 10) != 0)
		throw domain_error("rational: malformed numerator '" + num + "'");
	if (d.set_str(den, 10) != 0)
		throw domain_error("rational: malformed denominator '" + den + "'");
	if (sgn(d) == 0) throw domain_error("rational: zero denominator");
	mpq_class v(n, d);
	v.canonicalize();
	return Rational(std::move(v));
}

Rational Rational::factorial(unsigned long n) {
	mpz_class f;
	mpz_fac_ui(f.get_mpz_t(), n);
	return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
	if (k > n) return Rational();
	mpz_class b;
	mpz_bin_uiui(b.get_mpz_t(), n, k);
	return Rational(mpq_class(b));
}

Rational Rational::operator-() const {
	mpq_class neg(-v_);
	return Rational(std::move(neg));
}

Rational& Rational::operator/=(const Rational& o) {
	if (o.is_zero()) throw domain_error("rational: division by zero");
	v_ /= o.v_;
	return *this;
}

Rational Rational::abs() const {
	mpq_class a = ::abs(v_);
	return Rational(std::move(a));
}

std::string Rational::str() const {
	return v_.get_str();
}

std::string Rational::numerator_str() const {
	return v_.get_num().get_str();
}

std::string Rational::denominator_str() const {
	return v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
	return os << r.v_;
}

}  // namespace hochkit
