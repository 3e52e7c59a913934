#include <doctest.h>

#include "hochkit/errors.hpp"
#include "hochkit/multi_index.hpp"
#include "hochkit/polynomial.hpp"
#include "hochkit/rational.hpp"

using namespace hochkit;

TEST_SUITE("rational_poly") {

TEST_CASE("rationals are kept in lowest terms") {
	CHECK(Rational(2, 4).str() == "1/2");
	CHECK(Rational(-3, 6).str() == "-1/2");
	CHECK(Rational(4, -8).str() == "-1/2");
	CHECK(Rational(0, 7).str() == "0");
	CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("rational arithmetic") {
	CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
	CHECK(Rational(-2, 3) * Rational(9, 4) == Rational(-3, 2));
	CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
	CHECK(Rational(7) / Rational(2) == Rational(7, 2));
	CHECK((-Rational(5, 3)).str() == "-5/3");
	CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
	CHECK_THROWS_AS(Rational(1, 0), domain_error);
}

TEST_CASE("factorials and binomials are exact at any size") {
	CHECK(Rational::factorial(5) == Rational(120));
	CHECK(Rational::factorial(0) == Rational(1));
	CHECK(Rational::binomial(7, 3) == Rational(35));
	CHECK(Rational::binomial(4, 0) == Rational(1));
	CHECK(Rational::binomial(3, 5) == Rational(0));
	// 25! overflows 64 bits; the bignum backend must not.
	CHECK(Rational::factorial(25).str() == "15511210043330985984000000");
}

TEST_CASE("rational parse") {
	CHECK(Rational::parse("-3/6") == Rational(-1, 2));
	CHECK(Rational::parse("42") == Rational(42));
	CHECK(Rational::from_strings("10", "4") == Rational(5, 2));
}

TEST_CASE("multi-index basics") {
	MultiIndex a({2, 1});
	CHECK(a.degree() == 3);
	CHECK(a.vars() == 2);
	CHECK(a[0] == 2);
	CHECK(a.plus(MultiIndex({0, 2})) == MultiIndex({2, 3}));
	CHECK(a.minus(MultiIndex({1, 1})) == MultiIndex({1, 0}));
	CHECK(!a.minus(MultiIndex({3, 0})).has_value());
	CHECK(a.str() == "(2,1)");
	CHECK_THROWS_AS(MultiIndex({1, -1}), domain_error);
}

TEST_CASE("graded-lex order compares degree before entries") {
	GradedLexLess lt;
	CHECK(lt(MultiIndex({1, 0}), MultiIndex({0, 2})));   // degree 1 < 2
	CHECK(lt(MultiIndex({0, 1}), MultiIndex({1, 0})));   // same degree, lex
	CHECK(lt(MultiIndex({0, 2}), MultiIndex({1, 1})));
	CHECK(lt(MultiIndex({1, 1}), MultiIndex({2, 0})));
	CHECK(!lt(MultiIndex({1, 1}), MultiIndex({1, 1})));
}

TEST_CASE("degree-range enumeration is ascending graded-lex") {
	auto v = multi_indices_in_degree_range(2, 0, 2);
	REQUIRE(v.size() == 6);
	CHECK(v[0] == MultiIndex({0, 0}));
	CHECK(v[1] == MultiIndex({0, 1}));
	CHECK(v[2] == MultiIndex({1, 0}));
	CHECK(v[3] == MultiIndex({0, 2}));
	CHECK(v[4] == MultiIndex({1, 1}));
	CHECK(v[5] == MultiIndex({2, 0}));
	CHECK(multi_indices_in_degree_range(3, 1, 1).size() == 3);
}

TEST_CASE("multinomial split coefficients") {
	MultiIndex alpha({2, 1});
	std::vector<MultiIndex> parts{MultiIndex({1, 0}), MultiIndex({1, 1})};
	// 2!/(1!1!) * 1!/(0!1!) = 2
	CHECK(multi_index_split_coeff(alpha, parts) == Rational(2));
	std::vector<MultiIndex> bad{MultiIndex({1, 0}), MultiIndex({0, 0})};
	CHECK_THROWS_AS(multi_index_split_coeff(alpha, bad), domain_error);
}

TEST_CASE("binary splits cover the full box") {
	// (a+1)(b+1) ordered pairs for alpha = (a, b).
	CHECK(binary_splits(MultiIndex({2, 1})).size() == 6);
	for (const auto& [b, g] : binary_splits(MultiIndex({2, 1})))
		CHECK(b.plus(g) == MultiIndex({2, 1}));
}

TEST_CASE("split multinomials sum to parts^degree") {
	// sum over ordered k-part splits of the multinomial equals k^|alpha|.
	MultiIndex alpha({2, 0});
	Rational total;
	for_each_split(alpha, 3, [&](const std::vector<MultiIndex>&, const Rational& c) {
		total = total + c;
	});
	CHECK(total == Rational(9));
}

TEST_CASE("polynomial arithmetic and canonical form") {
	Polynomial x1 = Polynomial::variable(2, 0);
	Polynomial x2 = Polynomial::variable(2, 1);
	Polynomial p = (x1 + x2) * (x1 + x2);
	CHECK(p.str() == "x1^2 + 2*x1*x2 + x2^2");
	CHECK(p.total_degree() == 2);
	CHECK((p - p).is_zero());
	CHECK((p - p).total_degree() == -1);
	CHECK((p - p).str() == "0");

	Polynomial q = x1.scaled(Rational(3, 2)) - Polynomial::constant(2, Rational(1));
	CHECK(q.str() == "3/2*x1 - 1");
	CHECK((-q).str() == "-3/2*x1 + 1");
}

TEST_CASE("polynomial partial derivatives") {
	Polynomial x1 = Polynomial::variable(2, 0);
	Polynomial x2 = Polynomial::variable(2, 1);
	Polynomial p = x1 * x1 * x2;  // x1^2 x2
	CHECK(p.partial(0).str() == "2*x1*x2");
	CHECK(p.partial(1).str() == "x1^2");
	CHECK(p.partial(MultiIndex({1, 1})).str() == "2*x1");
	CHECK(p.partial(MultiIndex({3, 0})).is_zero());
	CHECK(Polynomial::constant(2, Rational(5)).partial(0).is_zero());
}

TEST_CASE("polynomial term order puts the leading term first") {
	Polynomial x1 = Polynomial::variable(1, 0);
	Polynomial p = x1 * x1 * x1 - x1.scaled(Rational(2)) + Polynomial::constant(1, Rational(7));
	CHECK(p.str() == "x1^3 - 2*x1 + 7");
}

TEST_CASE("mixed variable counts are rejected") {
	Polynomial a(1);
	Polynomial b(2);
	CHECK_THROWS_AS(a + b, domain_error);
	CHECK_THROWS_AS(a * b, domain_error);
}

}  // TEST_SUITE
