// Serial reference versus OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "hopfkit/builtins.hpp"
#include "hopfkit/invariants.hpp"
#include "hopfkit/yd.hpp"

using namespace hopfkit;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& s) {
    s.SetLabel(s.range(0) == 0 ? "serial" : "parallel, " + std::to_string(max_threads()) + " threads");
}

void BM_VerifyAxiomsUqsl2(benchmark::State& s) {
    const HopfPtr u = uqsl2(3);
    for (auto _ : s) benchmark::DoNotOptimize(verify_axioms_uncached(*u, {VerifyMode::full, exec_of(s)}));
    label(s);
}
BENCHMARK(BM_VerifyAxiomsUqsl2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyAxiomsDual(benchmark::State& s) {
    const HopfPtr d = builtin_hopf("dual_of(of=uqsl2(n=3))");
    for (auto _ : s) benchmark::DoNotOptimize(verify_axioms_uncached(*d, {VerifyMode::full, exec_of(s)}));
    label(s);
}
BENCHMARK(BM_VerifyAxiomsDual)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GenerateUqsl2(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(uqsl2_data(5, exec_of(s)));
    label(s);
}
BENCHMARK(BM_GenerateUqsl2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DenseRref(benchmark::State& s) {
    const Field& f = Field::get(FieldSpec::cyclotomic(5));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> c(-3, 3);
    std::vector<Vec> rows(40, zero_vec(f, 40));
    for (auto& r : rows)
        for (auto& x : r) x = f.from_int(c(rng)) + f.from_int(c(rng)) * f.root();
    const Matrix a = Matrix::from_dense(f, 40, rows);
    for (auto _ : s) benchmark::DoNotOptimize(rref_dense(a, exec_of(s)));
    label(s);
}
BENCHMARK(BM_DenseRref)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LeftIntegralUqsl2(benchmark::State& s) {
    const HopfPtr u = uqsl2(5);
    for (auto _ : s) benchmark::DoNotOptimize(left_integral(*u, nullptr, exec_of(s)));
    label(s);
}
BENCHMARK(BM_LeftIntegralUqsl2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_YDDualTaft(benchmark::State& s) {
    const YDModule a = adjoint_yd(taft(3));
    for (auto _ : s) benchmark::DoNotOptimize(yd_dual(a, DualSide::right, exec_of(s)));
    label(s);
}
BENCHMARK(BM_YDDualTaft)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
