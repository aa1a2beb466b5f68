#include <benchmark/benchmark.h>

#include "qloss/qloss.hpp"

namespace {

using namespace qloss;

void BM_Kron(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = ComplexMatrix::identity(n) * complex(0.5, 0.25);
    const auto b = ComplexMatrix::identity(n) * complex(0.1, -0.3);
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_HermitianEigen16(benchmark::State& state) {
    const auto m = kron(bell_state(BellKind::PhiPlus).matrix(), werner_state(0.4).matrix());
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen16);

void BM_CorrectPipeline(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(audit::correct_loss_pipeline(0.6, 0.3));
}
BENCHMARK(BM_CorrectPipeline);

void BM_LinkBudgetCurve(benchmark::State& state) {
    const FsoParams p{};
    for (auto _ : state) benchmark::DoNotOptimize(link_budget_curve(p, 50'000.0, 100.0, true));
}
BENCHMARK(BM_LinkBudgetCurve);

}  // namespace
BENCHMARK_MAIN();
