#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hochkit {

struct SelftestCheck {
	std::string name;
	int cases;
	bool passed;
	std::string detail;  // empty on success
};

struct SelftestReport {
	std::vector<SelftestCheck> checks;
	int passed = 0;
	int failed = 0;
};

// Randomized identity battery over desk-scale samples: differential squares
// to zero, bracket route agreement, derivation rule for the cup product,
// graded antisymmetry and Jacobi, order filtration round trips, alternation
// identities, cup-to-wedge comparison, cocycle splitting, and print/parse
// round trips. Deterministic for a fixed seed.
SelftestReport run_selftest(std::uint64_t seed = 20240801);

}  // namespace hochkit
