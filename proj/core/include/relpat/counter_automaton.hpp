#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "relpat/alphabet.hpp"

namespace relpat {

struct CaTransition {
    std::uint32_t next;
    int r1;
    int r2;

    auto operator<=>(const CaTransition&) const = default;
};

struct CaConfiguration {
    std::uint32_t state = 0;
    std::uint64_t counter1 = 0;
    std::uint64_t counter2 = 0;

    auto operator<=>(const CaConfiguration&) const = default;
};

// Nondeterministic 2-counter automaton without input; q0 is the initial state.
class TwoCounterAutomaton {
public:
    explicit TwoCounterAutomaton(std::uint32_t num_states);

    std::uint32_t num_states() const noexcept { return num_states_; }
    void add_transition(std::uint32_t from, int c1, int c2, CaTransition t);
    void set_accepting(std::uint32_t state, bool accepting = true);

    bool is_accepting(std::uint32_t state) const;
    const std::set<CaTransition>& transitions(std::uint32_t from, int c1, int c2) const;
    bool has_transition(std::uint32_t from, int c1, int c2, const CaTransition& t) const;
    const std::set<std::uint32_t>& accepting() const noexcept { return accepting_; }

private:
    std::uint32_t num_states_;
    std::vector<std::set<CaTransition>> delta_; // index (state * 4 + c1 * 2 + c2)
    std::set<std::uint32_t> accepting_;
};

struct EncodingParams {
    std::uint64_t x = 1;
    std::uint64_t c1 = 1;
    std::uint64_t c2 = 1;
    std::uint64_t y2 = 1;
};

using CaRun = std::vector<CaConfiguration>;

std::vector<CaConfiguration> ca_step(const TwoCounterAutomaton& a, const CaConfiguration& c);
std::optional<CaRun> ca_find_accepting_run(const TwoCounterAutomaton& a, std::size_t max_steps);
bool ca_is_accepting_run(const TwoCounterAutomaton& a, const CaRun& run);

Word ca_encode_config(const CaConfiguration& c, const EncodingParams& params = {});
Word ca_encode(const CaRun& run, const EncodingParams& params = {});
std::optional<CaRun> ca_decode(std::string_view w, const EncodingParams& params = {});
bool ca_validate(std::string_view w, const TwoCounterAutomaton& a, const EncodingParams& params = {});

// Text format: "states: n", "accept: q1 q2", and lines "q<i> c1 c2 -> q<j> r1 r2".
TwoCounterAutomaton parse_automaton(std::string_view text);
std::string print_automaton(const TwoCounterAutomaton& a);

} // namespace relpat
