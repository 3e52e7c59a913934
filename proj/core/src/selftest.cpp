#include "hochkit/selftest.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hochkit/errors.hpp"
#include "hochkit/hkr.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/json_io.hpp"
#include "hochkit/parse.hpp"
#include "hochkit/random_gen.hpp"
#include "hochkit/sder.hpp"

namespace hochkit {

namespace {

struct Runner {
	SelftestReport& rep;
	RandomGen& rng;

	void check(const std::string& name, int cases,
	           const std::function<bool(int, std::string&)>& body) {
		SelftestCheck c{name, cases, true, ""};
		try {
			for (int i = 0; i < cases; ++i) {
				std::string detail;
				if (!body(i, detail)) {
					c.passed = false;
					c.detail = "case " + std::to_string(i) +
					           (detail.empty() ? "" : ": " + detail);
					break;
				}
			}
		} catch (const std::exception& e) {
			c.passed = false;
			c.detail = std::string("exception: ") + e.what();
		}
		if (c.passed)
			++rep.passed;
		else
			++rep.failed;
		rep.checks.push_back(std::move(c));
	}
};

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
	SelftestReport rep;
	RandomGen rng(seed);
	Runner r{rep, rng};

	auto sample_op = [&](int i) {
		int m = 1 + i % 2;
		int n = 1 + (i / 2) % 2;
		return rng.dpoly_op(m, n, 2, 2, 2);
	};

	r.check("differential squares to zero", 40, [&](int i, std::string&) {
		MultiDiffOp d = sample_op(i);
		return hochschild_delta(hochschild_delta(d)).is_zero();
	});

	r.check("differential agrees with the bracket route", 40, [&](int i, std::string&) {
		MultiDiffOp d = sample_op(i);
		return hochschild_delta(d) == hochschild_delta_via_bracket(d);
	});

	r.check("cup derivation rule", 30, [&](int i, std::string&) {
		int m = 1 + i % 2;
		MultiDiffOp f = rng.dpoly_op(m, 1 + i % 2, 2, 2, 2);
		MultiDiffOp g = rng.dpoly_op(m, 1 + (i / 2) % 2, 2, 2, 2);
		MultiDiffOp lhs = hochschild_delta(cup(f, g));
		MultiDiffOp rhs = cup(hochschild_delta(f), g);
		MultiDiffOp tail = cup(f, hochschild_delta(g));
		rhs += (f.arity() % 2 != 0) ? -tail : tail;
		return lhs == rhs;
	});

	r.check("bracket graded antisymmetry", 30, [&](int i, std::string&) {
		int m = 1 + i % 2;
		MultiDiffOp f = rng.dpoly_op(m, 1 + i % 3, 2, 2, 2);
		MultiDiffOp g = rng.dpoly_op(m, 1 + (i / 3) % 3, 2, 2, 2);
		int mm = f.arity() - 1, nn = g.arity() - 1;
		MultiDiffOp rhs = gerstenhaber(g, f);
		if ((mm * nn) % 2 == 0) rhs = -rhs;
		return gerstenhaber(f, g) == rhs;
	});

	r.check("bracket Jacobi identity", 12, [&](int i, std::string&) {
		int m = 1 + i % 2;
		MultiDiffOp f = rng.dpoly_op(m, 1 + i % 2, 2, 1, 1);
		MultiDiffOp g = rng.dpoly_op(m, 1 + (i / 2) % 2, 2, 1, 1);
		MultiDiffOp h = rng.dpoly_op(m, 1 + (i / 4) % 2, 2, 1, 1);
		int df = f.arity() - 1, dg = g.arity() - 1;
		MultiDiffOp lhs = gerstenhaber(f, gerstenhaber(g, h));
		MultiDiffOp rhs = gerstenhaber(gerstenhaber(f, g), h);
		MultiDiffOp tail = gerstenhaber(g, gerstenhaber(f, h));
		rhs += ((df * dg) % 2 != 0) ? -tail : tail;
		return lhs == rhs;
	});

	r.check("associativity defect routes agree", 20, [&](int i, std::string&) {
		int m = 1 + i % 2;
		MultiDiffOp nu = rng.dpoly_op(m, 2, 2, 2, 2);
		auto [a, b] = associativity_defect(nu);
		if (!(a == b)) return false;
		if (i == 0) {
			auto [ma, mb] = associativity_defect(MultiDiffOp::mul_op(m));
			return ma.is_zero() && mb.is_zero();
		}
		return true;
	});

	r.check("multiderivation cup products are cocycles", 20, [&](int i, std::string&) {
		int m = 1 + i % 3;
		int n = 1 + (i / 3) % 3;
		MultiDiffOp d = rng.vector_field(m, 2).to_op();
		if (d.is_zero()) return true;
		for (int k = 1; k < n; ++k) {
			MultiDiffOp x = rng.vector_field(m, 2).to_op();
			if (x.is_zero()) x = MultiDiffOp::partial_op(m, 0);
			d = cup(d, x);
		}
		return hochschild_delta(d).is_zero();
	});

	r.check("syntactic order matches the recursive test", 30, [&](int i, std::string&) {
		int m = 1 + i % 3;
		MultiDiffOp d = rng.dpoly_op(m, 1, 1 + i % 4, 2, 3);
		int k = d.syntactic_order();
		if (!is_diff_op_of_order_at_most(d, k)) return false;
		return k == 0 || !is_diff_op_of_order_at_most(d, k - 1);
	});

	r.check("composition words pass the order test", 20, [&](int i, std::string&) {
		int m = 1 + i % 3;
		return word_order_check(rng.word(m, 1 + i % 3, 2));
	});

	r.check("decomposition re-expands exactly", 20, [&](int i, std::string&) {
		int m = 1 + i % 2;
		int rr = 1 + i % 3;
		MultiDiffOp d = rng.dpoly_op(m, 1, rr, 2, 3);
		SDerDecomposition dec = sder_decompose(d, rr);
		if (!(dec.expand(m) == d)) return false;
		for (const auto& t : dec.words)
			if (t.word.length() > rr || !word_order_check(t.word)) return false;
		return true;
	});

	r.check("alternation is idempotent and kills coboundaries", 24, [&](int i, std::string&) {
		MultiDiffOp d = sample_op(i);
		MultiDiffOp a = alt(d);
		if (!(alt(a) == a)) return false;
		return alt(hochschild_delta(d)).is_zero();
	});

	r.check("multivector round trip through operators", 20, [&](int i, std::string&) {
		int m = 1 + i % 3;
		int n = 1 + i % m;
		MultiVectorField f = rng.multivector(m, n, 2);
		return op_to_mvf(mvf_to_op(f)) == f;
	});

	r.check("cup of fields matches the wedge", 30, [&](int i, std::string&) {
		int m = 1 + i % 3;
		int n1 = 1 + i % 2, n2 = 1 + (i / 2) % 2;
		MultiVectorField a = rng.multivector(m, n1, 2);
		MultiVectorField b = rng.multivector(m, n2, 2);
		if (a.is_zero() || b.is_zero()) return true;
		MultiDiffOp lhs = alt(cup(mvf_to_op(a), mvf_to_op(b)));
		MultiDiffOp rhs = mvf_to_op(wedge(a, b));
		return lhs == rhs;
	});

	r.check("cocycle splitting round trip", 6, [&](int i, std::string&) {
		int m = 1 + i % 2;
		MultiDiffOp e0 = rng.dpoly_op(m, 1, 2, 1, 2);
		MultiVectorField eta0 = rng.multivector(m, std::min(2, m), 1);
		MultiDiffOp d = hochschild_delta(e0);
		if (eta0.degree() == 2 && !eta0.is_zero()) d += mvf_to_op(eta0);
		if (d.is_zero()) return true;
		int cd = 0;
		for (const auto& [slots, c] : d.terms()) cd = std::max(cd, c.total_degree());
		Truncation t{m, 2, d.syntactic_order(), cd};
		CocycleSplit s = split_cocycle(d, t, 2);
		return hochschild_delta(s.e) + mvf_to_op(s.eta) == d;
	});

	r.check("print/parse round trip", 120, [&](int i, std::string&) {
		int m = 1 + i % 3;
		MultiDiffOp d = rng.dpoly_op(m, 1 + i % 3, 2, 2, 3);
		return parse_operator(d.str(), m) == d;
	});

	r.check("json round trip", 60, [&](int i, std::string&) {
		int m = 1 + i % 3;
		MultiDiffOp d = rng.dpoly_op(m, 1 + i % 3, 2, 2, 3);
		if (!(op_from_json(op_to_json(d)) == d)) return false;
		Polynomial p = rng.polynomial(m, 3, 4);
		return polynomial_from_json(polynomial_to_json(p), m) == p;
	});

	return rep;
}

}  // namespace hochkit
