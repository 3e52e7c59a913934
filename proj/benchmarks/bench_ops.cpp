#include <benchmark/benchmark.h>

#include "hochkit/hkr.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/random_gen.hpp"

using namespace hochkit;

namespace {

Polynomial dense_poly(int vars, int degree) {
	RandomGen gen(7);
	Polynomial p(vars);
	for (const auto& a : multi_indices_in_degree_range(vars, 0, degree))
		p.add_term(a, gen.nonzero_rational());
	return p;
}

void BM_PolynomialMultiply(benchmark::State& state) {
	int deg = static_cast<int>(state.range(0));
	Polynomial a = dense_poly(3, deg);
	Polynomial b = dense_poly(3, deg);
	for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(4)->Arg(8);

void BM_Delta(benchmark::State& state) {
	RandomGen gen(11);
	MultiDiffOp d = gen.dpoly_op(2, static_cast<int>(state.range(0)), 3, 3, 8);
	for (auto _ : state) benchmark::DoNotOptimize(hochschild_delta(d));
}
BENCHMARK(BM_Delta)->Arg(1)->Arg(2)->Arg(3);

void BM_TotalCompose(benchmark::State& state) {
	RandomGen gen(13);
	MultiDiffOp f = gen.dpoly_op(2, 2, 3, 3, 6);
	MultiDiffOp g = gen.dpoly_op(2, 2, 3, 3, 6);
	for (auto _ : state) benchmark::DoNotOptimize(total_compose(f, g));
}
BENCHMARK(BM_TotalCompose);

void BM_DeltaMatrix(benchmark::State& state) {
	Truncation t{2, static_cast<int>(state.range(0)), 2, 2};
	for (auto _ : state) benchmark::DoNotOptimize(delta_matrix(t));
}
BENCHMARK(BM_DeltaMatrix)->Arg(1)->Arg(2);

void BM_MatrixRank(benchmark::State& state) {
	ExactMatrix m = delta_matrix({2, static_cast<int>(state.range(0)), 2, 2});
	for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_MatrixRank)->Arg(1)->Arg(2);

void BM_CohomologyWindow(benchmark::State& state) {
	int m = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(cohomology_dims(m, 2, 2, 2));
}
BENCHMARK(BM_CohomologyWindow)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
