#include <benchmark/benchmark.h>

#include "relpat/relpat.hpp"

using namespace relpat;

namespace {

void BM_EnumerateAlpha(benchmark::State& state) {
    const auto alpha = parse_relational_pattern("alphabet:ab; pattern: x1 a a x2 b x3; rel: eq(x1,x2)");
    const auto max_len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_language(alpha, Mode::Erasing, max_len));
    }
}

void BM_BoundedInclusion(benchmark::State& state) {
    const auto a = parse_relational_pattern("alphabet:ab; pattern: x1 x2; rel: ab(x1,x2)");
    const auto b = parse_relational_pattern("alphabet:ab; pattern: x1 x2; rel: len(x1,x2)");
    const auto max_len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounded_included(a, b, Mode::NonErasing, max_len));
    }
}

void BM_Relation(benchmark::State& state, RelationKind kind) {
    const std::string u(static_cast<std::size_t>(state.range(0)), 'a');
    const std::string v = u;
    for (auto _ : state) {
        benchmark::DoNotOptimize(relation_holds(kind, u, v));
    }
    state.SetComplexityN(state.range(0));
}

void BM_Subsequence(benchmark::State& state) { BM_Relation(state, RelationKind::Subseq); }
void BM_AlphaPerm(benchmark::State& state) { BM_Relation(state, RelationKind::AlphaPerm); }
void BM_Star(benchmark::State& state) { BM_Relation(state, RelationKind::Star); }

} // namespace

BENCHMARK(BM_EnumerateAlpha)->DenseRange(4, 10, 2);
BENCHMARK(BM_BoundedInclusion)->DenseRange(4, 10, 2);
BENCHMARK(BM_Subsequence)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();
BENCHMARK(BM_AlphaPerm)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();
BENCHMARK(BM_Star)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();
