#include <benchmark/benchmark.h>

#include "etaq/eta.hpp"
#include "etaq/identities.hpp"
#include "etaq/oracle.hpp"
#include "etaq/series.hpp"

namespace {

void BM_expand_r49(benchmark::State& state) {
    const auto spec = etaq::lmu_regular_quotient(4, 9);
    const long order = state.range(0);
    for (auto _ : state) {
        auto series = etaq::expand_eta_quotient(spec, order);
        benchmark::DoNotOptimize(series);
    }
    state.SetComplexityN(order);
}
BENCHMARK(BM_expand_r49)->RangeMultiplier(2)->Range(1250, 10000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_mul_dense(benchmark::State& state) {
    const long order = state.range(0);
    const etaq::Series a = etaq::gen_ppo(order);
    const etaq::Series b = etaq::expand_eta_quotient(etaq::EtaQuotient{{1, -2}, {2, 1}}, order);
    for (auto _ : state) {
        auto product = etaq::mul(a, b);
        benchmark::DoNotOptimize(product);
    }
    state.SetComplexityN(order);
}
BENCHMARK(BM_mul_dense)->RangeMultiplier(2)->Range(256, 2048)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_invert_euler(benchmark::State& state) {
    const long order = state.range(0);
    const etaq::Series f1 = etaq::euler_series(1, order);
    for (auto _ : state) {
        auto inverse = etaq::invert(f1);
        benchmark::DoNotOptimize(inverse);
    }
}
BENCHMARK(BM_invert_euler)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_identity_registry(benchmark::State& state) {
    const auto& registry = etaq::IdentityRegistry::standard();
    for (auto _ : state) {
        auto reports = etaq::verify_all_identities(registry, state.range(0));
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(BM_identity_registry)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_oracle_overpartitions(benchmark::State& state) {
    for (auto _ : state) {
        auto count = etaq::count_overpartitions(state.range(0), etaq::PartsPredicate::all());
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_oracle_overpartitions)->Arg(20)->Arg(40);

} // namespace

BENCHMARK_MAIN();
