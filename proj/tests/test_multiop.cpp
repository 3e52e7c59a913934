#include <doctest.h>

#include <vector>

#include "hochkit/errors.hpp"
#include "hochkit/multiop.hpp"

using namespace hochkit;

namespace {

// MultiIndex({1}) would pick the vars-count constructor; route everything
// through an explicit vector.
MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

MultiDiffOp op1(int vars, std::vector<int> alpha, Polynomial c) {
	return MultiDiffOp::single(vars, SlotTuple{mi(std::move(alpha))}, std::move(c));
}

Polynomial one(int vars) { return Polynomial::constant(vars, Rational(1)); }

}  // namespace

TEST_SUITE("multiop") {

TEST_CASE("application differentiates slotwise and multiplies by the coefficient") {
	Polynomial x = Polynomial::variable(1, 0);
	MultiDiffOp d2 = op1(1, {2}, one(1));
	std::vector<Polynomial> arg{x * x * x};
	CHECK(d2.apply(arg).str() == "6*x1");

	// x1 * d (x) d^2 on (x1^2, x1^3): x1 * 2x1 * 6x1 = 12 x1^3.
	MultiDiffOp d = MultiDiffOp::single(1, SlotTuple{mi({1}), mi({2})}, x);
	std::vector<Polynomial> args{x * x, x * x * x};
	CHECK(d.apply(args).str() == "12*x1^3");
}

TEST_CASE("factories behave as named") {
	Polynomial x1 = Polynomial::variable(2, 0);
	Polynomial x2 = Polynomial::variable(2, 1);

	std::vector<Polynomial> a{x1 + x2};
	CHECK(MultiDiffOp::identity_op(2).apply(a) == x1 + x2);
	CHECK(MultiDiffOp::multiplication(x1).apply(a) == x1 * (x1 + x2));
	CHECK(MultiDiffOp::partial_op(2, 1).apply(a).str() == "1");

	std::vector<Polynomial> ab{x1, x2};
	CHECK(MultiDiffOp::mul_op(2).apply(ab) == x1 * x2);
}

TEST_CASE("accumulation cancels to the zero operator") {
	MultiDiffOp d = op1(1, {1}, one(1));
	d -= op1(1, {1}, one(1));
	CHECK(d.is_zero());
	CHECK(d.str() == "0");
	CHECK(d.terms().empty());
}

TEST_CASE("canonical printing") {
	Polynomial x = Polynomial::variable(1, 0);
	CHECK(op1(1, {1}, one(1)).str() == "D[1]");
	CHECK(op1(1, {1}, one(1).scaled(Rational(-1))).str() == "-D[1]");
	CHECK(op1(1, {2}, x).str() == "x1*D[2]");
	// A multi-term coefficient is parenthesized.
	CHECK(op1(1, {1}, x + one(1)).str() == "(x1 + 1)*D[1]");
	// Terms join with " + " / " - " on the sign of the leading coefficient.
	MultiDiffOp d = op1(1, {1}, one(1)) - op1(1, {2}, one(1).scaled(Rational(3, 2)));
	CHECK(d.str() == "D[1] - 3/2*D[2]");

	MultiDiffOp two_slots = MultiDiffOp::single(
	    1, SlotTuple{mi({1}), mi({1})}, one(1).scaled(Rational(-2)));
	CHECK(two_slots.str() == "-2*D[1|1]");

	MultiDiffOp m2 = MultiDiffOp::single(
	    2, SlotTuple{mi({1, 0}), mi({0, 1})},
	    Polynomial::variable(2, 0) * Polynomial::variable(2, 1));
	CHECK(m2.str() == "x1*x2*D[1,0|0,1]");
}

TEST_CASE("syntactic order") {
	Polynomial x = Polynomial::variable(1, 0);
	MultiDiffOp d = op1(1, {1}, one(1)) + op1(1, {2}, x);
	CHECK(d.syntactic_order() == 2);
	CHECK(MultiDiffOp::identity_op(1).syntactic_order() == 0);
	CHECK_THROWS_AS(MultiDiffOp(1, 1).syntactic_order(), domain_error);
}

TEST_CASE("coordinate commutator lowers the order by one") {
	// [d^2, x1*] = 2 d.
	MultiDiffOp d2 = op1(1, {2}, one(1));
	CHECK(commutator_with_coordinate(d2, 0).str() == "2*D[1]");
	// A multiplication operator commutes with coordinates.
	Polynomial x = Polynomial::variable(1, 0);
	CHECK(commutator_with_coordinate(MultiDiffOp::multiplication(x * x), 0).is_zero());
	// [x1 d, x1*] = x1.
	CHECK(commutator_with_coordinate(op1(1, {1}, x), 0).str() == "x1*D[0]");
}

TEST_CASE("recursive order test matches the syntactic order") {
	Polynomial x1 = Polynomial::variable(2, 0);
	MultiDiffOp d2 = op1(1, {2}, one(1));
	CHECK(!is_diff_op_of_order_at_most(d2, 1));
	CHECK(is_diff_op_of_order_at_most(d2, 2));
	CHECK(is_diff_op_of_order_at_most(d2, 3));

	// Coefficient degree plays no role in the operator order.
	MultiDiffOp d = MultiDiffOp::single(
	    2, SlotTuple{mi({0, 1})}, x1 * x1 * x1 * x1 * x1);
	CHECK(is_diff_op_of_order_at_most(d, 1));
	CHECK(!is_diff_op_of_order_at_most(d, 0));
	// The recursive test is an arity-1 notion.
	MultiDiffOp wide = MultiDiffOp::single(2, SlotTuple{mi({1, 0}), mi({0, 1})}, one(2));
	CHECK_THROWS_AS(is_diff_op_of_order_at_most(wide, 1), domain_error);

	// Order <= 0 is exactly multiplication by a polynomial.
	CHECK(is_diff_op_of_order_at_most(MultiDiffOp::multiplication(x1 + x1 * x1), 0));
	CHECK(is_diff_op_of_order_at_most(MultiDiffOp(1, 1), 0));
	CHECK_THROWS_AS(is_diff_op_of_order_at_most(d2, -1), domain_error);
}

TEST_CASE("vanishing on constants requires every slot to differentiate") {
	CHECK(op1(1, {1}, one(1)).vanishes_on_constants());
	CHECK(!MultiDiffOp::identity_op(1).vanishes_on_constants());
	CHECK(MultiDiffOp(1, 1).vanishes_on_constants());
	MultiDiffOp mixed = MultiDiffOp::single(1, SlotTuple{mi({1}), mi({0})}, one(1));
	CHECK(!mixed.vanishes_on_constants());
}

TEST_CASE("shape mismatches are rejected") {
	MultiDiffOp d = op1(1, {1}, one(1));
	std::vector<Polynomial> two{one(1), one(1)};
	CHECK_THROWS_AS(d.apply(two), domain_error);
	std::vector<Polynomial> wrong_vars{one(2)};
	CHECK_THROWS_AS(d.apply(wrong_vars), domain_error);
	CHECK_THROWS_AS(d + MultiDiffOp(1, 2), domain_error);
	CHECK_THROWS_AS(d + MultiDiffOp(2, 1), domain_error);
	CHECK_THROWS_AS(MultiDiffOp(1, 0), domain_error);
}

}  // TEST_SUITE
