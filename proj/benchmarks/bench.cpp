#include <random>

#include <benchmark/benchmark.h>

#include "artin/artin.hpp"

using namespace artin;

namespace {

Word random_word(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> letter(0, 3);
    Word w(static_cast<std::size_t>(len));
    for (Letter& l : w) l = static_cast<Letter>(letter(rng));
    return w;
}

void BM_ToCanonical(benchmark::State& state) {
    const auto g = GroupParams::make(5);
    std::mt19937 rng(1);
    const Word w = random_word(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(to_canonical(w, g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ToCanonical)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_CanonicalMultiply(benchmark::State& state) {
    const auto g = GroupParams::make(6);
    std::mt19937 rng(2);
    const auto a = to_canonical(random_word(rng, 200), g), b = to_canonical(random_word(rng, 200), g);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_multiply(a, b, g));
}
BENCHMARK(BM_CanonicalMultiply);

void BM_GeodesicLength(benchmark::State& state) {
    const auto g = GroupParams::make(static_cast<int>(state.range(0)));
    std::mt19937 rng(3);
    const auto e = to_canonical(random_word(rng, 1000), g);
    for (auto _ : state) benchmark::DoNotOptimize(geodesic_length(e, g));
}
BENCHMARK(BM_GeodesicLength)->Arg(3)->Arg(4)->Arg(7)->Arg(10);

void BM_IsConjugate(benchmark::State& state) {
    const auto g = GroupParams::make(3);
    std::mt19937 rng(4);
    const Word u = random_word(rng, 300), t = random_word(rng, 50);
    const Word v = concat_words(concat_words(invert_word(t), u), t);
    for (auto _ : state) benchmark::DoNotOptimize(is_conjugate(u, v, g));
}
BENCHMARK(BM_IsConjugate);

void BM_GrowthTables(benchmark::State& state) {
    const auto g = GroupParams::make(4);
    for (auto _ : state) benchmark::DoNotOptimize(growth_tables(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GrowthTables)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BuildConjGeoDfa(benchmark::State& state) {
    const auto g = GroupParams::make(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_conjgeo_dfa(g));
}
BENCHMARK(BM_BuildConjGeoDfa)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DfaCount(benchmark::State& state) {
    const Dfa d = build_conjgeo_dfa(GroupParams::make(5));
    for (auto _ : state) benchmark::DoNotOptimize(dfa_count(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DfaCount)->Arg(50)->Arg(500);

void BM_FftpWitness(benchmark::State& state) {
    const auto g = GroupParams::make(3);
    const Word w = parse_word("yxYxyxYxy", g);
    for (auto _ : state) benchmark::DoNotOptimize(fftp_witness(w, g, 11));
}
BENCHMARK(BM_FftpWitness);

}  // namespace

BENCHMARK_MAIN();
