#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relpat/pattern.hpp"

namespace relpat {

struct MatchEquation {
    SymbolString pattern;
    Word target;
};

struct MatchProblem {
    std::vector<MatchEquation> equations;
    std::vector<Constraint> constraints;
    Mode mode = Mode::NonErasing;
};

struct MatchOptions {
    std::uint64_t node_budget = 2'000'000'000;
    // Length-bound propagation and letter-domain pruning. Switching it off
    // never changes a verdict, only the amount of search.
    bool pruning = true;
    // Once a search has visited this many nodes it starts remembering failed
    // states. Part of pruning.
    std::uint64_t memo_after_nodes = 1 << 16;
};

std::optional<Substitution> solve_system(const MatchProblem& problem, const MatchOptions& options = {});
std::uint64_t count_system_witnesses(const MatchProblem& problem, std::uint64_t cap,
                                     const MatchOptions& options = {});

std::optional<Substitution> match(const Word& w, const RelationalPattern& rp, Mode mode,
                                  const MatchOptions& options = {});
std::uint64_t count_witnesses(const Word& w, const RelationalPattern& rp, Mode mode, std::uint64_t cap,
                              const MatchOptions& options = {});

} // namespace relpat
