#include <benchmark/benchmark.h>

#include <random>
#include <utility>

#include "relpat/relpat.hpp"

using namespace relpat;

namespace {

// The same equality closure generated once as a forward chain and once
// as a backward chain, over a pattern of the given length.
std::pair<RelationalPattern, RelationalPattern> chain_pair(std::size_t length, RelationKind kind) {
    std::mt19937_64 rng(length);
    PatternBuilder pb;
    std::vector<VarId> vars;
    for (std::size_t i = 0; i < length / 2; ++i) {
        vars.push_back(pb.append_fresh());
        pb.append_terminal(rng() % 2 ? 'a' : 'b');
    }
    std::vector<Constraint> forward, backward;
    for (std::size_t i = 1; i < vars.size(); ++i) {
        if (rng() % 3 != 0) {
            forward.push_back({kind, vars[i - 1], vars[i]});
            backward.push_back({kind, vars[i], vars[i - 1]});
        }
    }
    const Alphabet ab("ab");
    return {RelationalPattern(ab, Pattern(pb.symbols()), forward), RelationalPattern(ab, Pattern(pb.symbols()), backward)};
}

void BM_NeEquivalent(benchmark::State& state, RelationKind kind) {
    const auto [a, b] = chain_pair(static_cast<std::size_t>(state.range(0)), kind);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ne_equivalent(a, b));
    }
    state.SetComplexityN(state.range(0));
}

void BM_Eq(benchmark::State& state) { BM_NeEquivalent(state, RelationKind::Eq); }
void BM_Abelian(benchmark::State& state) { BM_NeEquivalent(state, RelationKind::AbelianEq); }
void BM_ComPlus(benchmark::State& state) { BM_NeEquivalent(state, RelationKind::ComPlus); }

void BM_Closure(benchmark::State& state) {
    const auto [a, b] = chain_pair(static_cast<std::size_t>(state.range(0)), RelationKind::Eq);
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure(a));
    }
    state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(BM_Eq)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();
BENCHMARK(BM_Abelian)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();
BENCHMARK(BM_ComPlus)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();
BENCHMARK(BM_Closure)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();
