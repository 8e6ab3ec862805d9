#include <benchmark/benchmark.h>

#include <random>

#include "relpat/relpat.hpp"

using namespace relpat;

namespace {

// Membership on reduction instances of growing formula size. The argument is
// the number of variables; there are twice as many clauses.
void reduction_membership(benchmark::State& state, ReductionVariant variant) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    std::mt19937_64 rng(m);
    const CnfFormula phi = random_cnf(rng, m, 2 * m, requires_distinct_literals(variant));
    const ReductionInstance inst = generate(variant, phi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(match(inst.word, inst.rp, inst.mode));
    }
    state.counters["word_length"] = static_cast<double>(inst.word.size());
}

void BM_AngluinNE(benchmark::State& state) { reduction_membership(state, ReductionVariant::AngluinNE); }
void BM_JiangE(benchmark::State& state) { reduction_membership(state, ReductionVariant::JiangE); }
void BM_CommuteNE(benchmark::State& state) { reduction_membership(state, ReductionVariant::CommuteNE); }
void BM_OneSidedStarNE(benchmark::State& state) { reduction_membership(state, ReductionVariant::OneSidedStarNE); }

void BM_RunningExample(benchmark::State& state) {
    const auto beta = parse_relational_pattern("alphabet:abc; pattern: x1 c c x2; rel: rev(x1,x2)");
    const Word w = std::string(static_cast<std::size_t>(state.range(0)), 'a') + "cc" +
                   std::string(static_cast<std::size_t>(state.range(0)), 'a');
    for (auto _ : state) {
        benchmark::DoNotOptimize(match(w, beta, Mode::NonErasing));
    }
    state.SetComplexityN(state.range(0));
}

void BM_PruningOff(benchmark::State& state) {
    const auto alpha = parse_relational_pattern("alphabet:ab; pattern: x1 a a x2 b x3; rel: eq(x1,x2)");
    MatchOptions plain;
    plain.pruning = state.range(0) == 0;
    const Word w = "abbaabbabaabbababa";
    for (auto _ : state) {
        benchmark::DoNotOptimize(match(w, alpha, Mode::NonErasing, plain));
    }
}

} // namespace

BENCHMARK(BM_AngluinNE)->DenseRange(2, 6, 2);
BENCHMARK(BM_JiangE)->DenseRange(2, 6, 2);
BENCHMARK(BM_CommuteNE)->DenseRange(2, 6, 2);
BENCHMARK(BM_OneSidedStarNE)->DenseRange(2, 6, 2);
BENCHMARK(BM_RunningExample)->RangeMultiplier(4)->Range(4, 1024)->Complexity();
BENCHMARK(BM_PruningOff)->Arg(0)->Arg(1);
