#include <doctest.h>

#include <vector>

#include "hochkit/errors.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/parse.hpp"

using namespace hochkit;

namespace {

MultiDiffOp P(int vars, const std::string& text) { return parse_operator(text, vars); }

// The coboundary evaluated straight from its defining alternating sum, with
// f.apply as the only ingredient. Independent route used to cross-check the
// symbolic construction.
Polynomial delta_by_definition(const MultiDiffOp& f, const std::vector<Polynomial>& a) {
	int n = f.arity();
	REQUIRE(static_cast<int>(a.size()) == n + 1);
	std::vector<Polynomial> head(a.begin() + 1, a.end());
	Polynomial out = a[0] * f.apply(head);
	Rational sign(1);
	for (int i = 0; i < n; ++i) {
		sign = sign * Rational(-1);
		std::vector<Polynomial> merged;
		merged.reserve(static_cast<size_t>(n));
		for (int j = 0; j <= n; ++j) {
			if (j == i) {
				merged.push_back(a[static_cast<size_t>(j)] * a[static_cast<size_t>(j + 1)]);
				++j;
			} else {
				merged.push_back(a[static_cast<size_t>(j)]);
			}
		}
		out += f.apply(merged).scaled(sign);
	}
	std::vector<Polynomial> tail(a.begin(), a.end() - 1);
	out += (f.apply(tail) * a.back()).scaled(sign * Rational(-1));
	return out;
}

}  // namespace

TEST_SUITE("hochschild") {

TEST_CASE("partial composition is the generalized Leibniz rule") {
	// d o_1 (x1 d) = d + x1 d^2: the slot derivative hits the coefficient too.
	CHECK(partial_compose(P(1, "D[1]"), 1, P(1, "x1*D[1]")) == P(1, "D[1] + x1*D[2]"));
	// (x1 d) o_1 d = x1 d^2: nothing for the outer coefficient to absorb.
	CHECK(partial_compose(P(1, "x1*D[1]"), 1, P(1, "D[1]")) == P(1, "x1*D[2]"));
	// d^2 o_1 (x1^2 D[0]) spreads over coefficient and slot with multinomials.
	CHECK(partial_compose(P(1, "D[2]"), 1, P(1, "x1^2*D[0]")) ==
	      P(1, "x1^2*D[2] + 4*x1*D[1] + 2*D[0]"));
	// Slot position bookkeeping on an arity-2 outer operator.
	CHECK(partial_compose(P(1, "D[1|1]"), 2, P(1, "x1*D[1]")) ==
	      P(1, "D[1|1] + x1*D[1|2]"));
	CHECK_THROWS_AS(partial_compose(P(1, "D[1]"), 2, P(1, "D[1]")), domain_error);
	CHECK_THROWS_AS(partial_compose(P(1, "D[1]"), 0, P(1, "D[1]")), domain_error);
}

TEST_CASE("partial composition agrees with substitution on applications") {
	Polynomial x = Polynomial::variable(1, 0);
	std::vector<Polynomial> samples{x * x, x * x * x - x, x + Polynomial::constant(1, Rational(2))};
	MultiDiffOp f = P(1, "x1*D[1|2]");
	MultiDiffOp g = P(1, "D[1] + x1*D[2]");
	for (int i = 1; i <= 2; ++i) {
		MultiDiffOp h = partial_compose(f, i, g);
		REQUIRE(h.arity() == 2);
		for (const auto& a : samples)
			for (const auto& b : samples) {
				// Substitute g's value into slot i of f.
				std::vector<Polynomial> inner{i == 1 ? a : b};
				Polynomial gv = g.apply(inner);
				std::vector<Polynomial> fargs = i == 1
				    ? std::vector<Polynomial>{gv, b}
				    : std::vector<Polynomial>{a, gv};
				std::vector<Polynomial> hargs{a, b};
				CHECK(h.apply(hargs) == f.apply(fargs));
			}
	}
}

TEST_CASE("total composition signs") {
	// mu o mu = mu o_1 mu - mu o_2 mu = 0: associativity of the product.
	MultiDiffOp mu = MultiDiffOp::mul_op(1);
	CHECK(total_compose(mu, mu).is_zero());
	// d o mu picks up no sign and gives the Leibniz expansion of d.
	CHECK(total_compose(P(1, "D[1]"), mu) == P(1, "D[1|0] + D[0|1]"));
	// Both insertion orders of first-order fields collapse: [[d, d]] = 0.
	CHECK(total_compose(P(1, "D[1]"), P(1, "D[2]")) == P(1, "D[3]"));
	CHECK(total_compose(P(1, "D[2]"), P(1, "D[1]")) == P(1, "D[3]"));
}

TEST_CASE("cup product conventions") {
	CHECK(cup(P(1, "D[1]"), P(1, "D[2]")) == P(1, "D[1|2]"));
	CHECK(cup(P(1, "D[1]"), P(1, "D[2]"), SignConvention::PaperSigned) == P(1, "-D[1|2]"));
	CHECK(cup(P(1, "x1*D[1]"), P(1, "D[1]")) == P(1, "x1*D[1|1]"));
	// Even arity product: the signed convention agrees with the unsigned one.
	CHECK(cup(P(1, "D[1|1]"), P(1, "D[1]"), SignConvention::PaperSigned) ==
	      cup(P(1, "D[1|1]"), P(1, "D[1]")));
	CHECK_THROWS_AS(cup(P(1, "D[1]"), P(2, "D[1,0]")), domain_error);
}

TEST_CASE("bracket on classical pairs") {
	CHECK(gerstenhaber(P(1, "D[1]"), P(1, "x1*D[1]")) == P(1, "D[1]"));
	CHECK(gerstenhaber(P(1, "x1*D[1]"), P(1, "D[1]")) == P(1, "-D[1]"));
	CHECK(gerstenhaber(P(1, "D[1]"), P(1, "D[2]")).is_zero());
	// [[mu, mu]] = 2 (mu o mu) = 0 for the associative product.
	CHECK(gerstenhaber(MultiDiffOp::mul_op(1), MultiDiffOp::mul_op(1)).is_zero());
	// Poisson-style pair in two variables: [[d1, x1 d2]] = d2.
	CHECK(gerstenhaber(P(2, "D[1,0]"), P(2, "x1*D[0,1]")) == P(2, "D[0,1]"));
}

TEST_CASE("differential on frozen examples") {
	// The identity cochain maps to the product.
	CHECK(hochschild_delta(MultiDiffOp::identity_op(1)) == P(1, "D[0|0]"));
	// Derivations are cocycles.
	CHECK(hochschild_delta(P(1, "D[1]")).is_zero());
	CHECK(hochschild_delta(P(1, "x1*D[1]")).is_zero());
	CHECK(hochschild_delta(P(2, "x2*D[1,0] - x1^2*D[0,1]")).is_zero());
	// Second-order operators pick up the symmetric leak term.
	CHECK(hochschild_delta(P(1, "D[2]")) == P(1, "-2*D[1|1]"));
	CHECK(hochschild_delta(P(1, "x1*D[2]")) == P(1, "-2*x1*D[1|1]"));
	// Arity 2 with an asymmetric slot pair.
	CHECK(hochschild_delta(P(1, "D[1|2]")) == P(1, "2*D[1|1|1]"));
	// The antisymmetric first-order pair is a cocycle.
	CHECK(hochschild_delta(P(2, "D[1,0|0,1] - D[0,1|1,0]")).is_zero());
	// Degree-0 cochains die over a commutative algebra.
	Polynomial x = Polynomial::variable(1, 0);
	CHECK(hochschild_delta(ZeroCochain{x * x}, 1).is_zero());
}

TEST_CASE("differential agrees with its defining alternating sum") {
	Polynomial x1 = Polynomial::variable(2, 0);
	Polynomial x2 = Polynomial::variable(2, 1);
	std::vector<Polynomial> pool{
	    x1 * x1, x2, x1 * x2 - Polynomial::constant(2, Rational(1)),
	    x1 + x2.scaled(Rational(3, 2))};
	std::vector<MultiDiffOp> ops{
	    P(2, "D[1,1]"), P(2, "x2*D[2,0]"), P(2, "D[1,0|0,1]"),
	    P(2, "x1*D[0,1|1,1] - D[1,0|1,0]")};
	for (const auto& f : ops) {
		MultiDiffOp df = hochschild_delta(f);
		int n = f.arity();
		for (size_t s = 0; s + static_cast<size_t>(n) < pool.size(); ++s) {
			std::vector<Polynomial> args(pool.begin() + static_cast<long>(s),
			                             pool.begin() + static_cast<long>(s) + n + 1);
			CHECK(df.apply(args) == delta_by_definition(f, args));
		}
	}
}

TEST_CASE("differential squares to zero on frozen operators") {
	for (const auto& text : {"D[2]", "x1*D[3]", "D[1|2]", "x1^2*D[2|1]", "D[1|1|1]"})
		CHECK(hochschild_delta(hochschild_delta(P(1, text))).is_zero());
}

TEST_CASE("bracket route reproduces the differential") {
	for (const auto& text : {"D[2]", "x1*D[1]", "D[1|2]", "x1*D[1|1]", "D[2|1|1]"}) {
		MultiDiffOp f = P(1, text);
		CHECK(hochschild_delta(f) == hochschild_delta_via_bracket(f));
	}
	MultiDiffOp g = P(2, "x2*D[1,0|0,2]");
	CHECK(hochschild_delta(g) == hochschild_delta_via_bracket(g));
}

TEST_CASE("cup derivation rule on a frozen pair") {
	MultiDiffOp f = P(1, "D[1]");
	MultiDiffOp g = P(1, "D[2]");
	MultiDiffOp lhs = hochschild_delta(cup(f, g));
	MultiDiffOp rhs = cup(hochschild_delta(f), g) - cup(f, hochschild_delta(g));
	CHECK(lhs == rhs);
	CHECK(lhs == P(1, "2*D[1|1|1]"));
}

TEST_CASE("associativity defect vanishes exactly for the product") {
	auto [half_bracket, direct] = associativity_defect(MultiDiffOp::mul_op(2));
	CHECK(half_bracket.is_zero());
	CHECK(direct.is_zero());
}

TEST_CASE("associativity defect routes agree on a non-associative law") {
	// nu(a, b) = a db: fails associativity, defect nonzero.
	MultiDiffOp nu = P(1, "D[0|1]");
	auto [half_bracket, direct] = associativity_defect(nu);
	CHECK(half_bracket == direct);
	CHECK(!direct.is_zero());
	CHECK_THROWS_AS(associativity_defect(P(1, "D[1]")), domain_error);
}

TEST_CASE("bracket antisymmetry and Jacobi on a frozen triple") {
	MultiDiffOp f = P(1, "D[1]");            // arity 1, reduced degree 0
	MultiDiffOp g = P(1, "x1*D[2]");         // arity 1
	MultiDiffOp h = P(1, "D[1|1]");          // arity 2, reduced degree 1
	// [[f, g]] = -(-1)^{deg f deg g} [[g, f]]; all pairs here hit sign -1.
	CHECK(gerstenhaber(f, g) == -gerstenhaber(g, f));
	CHECK(gerstenhaber(f, h) == -gerstenhaber(h, f));
	CHECK(gerstenhaber(g, h) == -gerstenhaber(h, g));
	// Graded Jacobi with degrees (0, 0, 1).
	MultiDiffOp j = gerstenhaber(f, gerstenhaber(g, h)) -
	                gerstenhaber(gerstenhaber(f, g), h) -
	                gerstenhaber(g, gerstenhaber(f, h));
	CHECK(j.is_zero());
}

}  // TEST_SUITE
