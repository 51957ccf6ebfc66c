#include <benchmark/benchmark.h>

#include "gw/brst.hpp"
#include "gw/fock.hpp"
#include "gw/linalg.hpp"

namespace {

const gw::BrstContext& context() {
  static const gw::BrstContext ctx = gw::brst_context(2);
  return ctx;
}

void BM_QApplyBasis(benchmark::State& state) {
  const auto basis = gw::enumerate_basis(0, 0, static_cast<int>(state.range(0)), context().scheme());
  for (auto _ : state) {
    for (const auto& m : basis) benchmark::DoNotOptimize(gw::q_apply(context(), gw::State(m)));
  }
  state.counters["monomials"] = static_cast<double>(basis.size());
}
BENCHMARK(BM_QApplyBasis)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_QMatrix(benchmark::State& state) {
  const int bc = static_cast<int>(state.range(0));
  const int bg = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gw::q_matrix(context(), bc, bg));
}
BENCHMARK(BM_QMatrix)->Args({0, 4})->Args({0, 5})->Args({1, 5})->Unit(benchmark::kMillisecond);

void BM_ColumnEchelon(benchmark::State& state) {
  const auto q = gw::q_matrix(context(), static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(gw::ColumnEchelon(q.matrix).rank());
  state.counters["columns"] = q.matrix.cols();
}
BENCHMARK(BM_ColumnEchelon)->Args({0, 4})->Args({0, 5})->Args({0, 6})->Unit(benchmark::kMillisecond);

void BM_ModularRank(benchmark::State& state) {
  const auto q = gw::q_matrix(context(), static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(gw::modular_rank(q.matrix));
}
BENCHMARK(BM_ModularRank)->Args({0, 4})->Args({0, 5})->Args({0, 6})->Unit(benchmark::kMillisecond);

void BM_BareissRank(benchmark::State& state) {
  const auto q = gw::q_matrix(context(), static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(gw::bareiss_rank(q.matrix));
}
BENCHMARK(BM_BareissRank)->Args({0, 3})->Args({0, 4})->Unit(benchmark::kMillisecond);

void BM_CohomologyTable(benchmark::State& state) {
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const gw::WeilComplex complex(context());
    benchmark::DoNotOptimize(complex.cohomology_table(-2, 4, jmax));
  }
}
BENCHMARK(BM_CohomologyTable)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
