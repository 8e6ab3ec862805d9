#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include "relpat/alphabet.hpp"

namespace relpat {

enum class Move : std::uint8_t { Left, Right };

struct UtmAction {
    int write;
    Move move;
    int next;

    bool operator==(const UtmAction&) const = default;
};

inline constexpr int utm_state_count = 15;

// Table 3 of U_{15,2}; absent means HALT.
std::optional<UtmAction> utm_delta(int symbol, int state);

// t_L starts at the head cell and extends to the left, t_R starts right of the
// head. Side codes are positional: e(t) = sum 2^i t_i with t_0 nearest the head.
struct UtmConfiguration {
    int state = 1;
    std::uint64_t left = 0;
    std::uint64_t right = 0;

    bool operator==(const UtmConfiguration&) const = default;
};

bool utm_is_halting(const UtmConfiguration& c);
std::optional<UtmConfiguration> utm_step(const UtmConfiguration& c);
// Steps until halting; absent if max_steps configurations pass without a halt.
std::optional<std::vector<UtmConfiguration>> utm_run(const UtmConfiguration& start, std::size_t max_configs);

// Explicit-tape simulator kept independent of the code arithmetic.
class ExplicitTape {
public:
    explicit ExplicitTape(const UtmConfiguration& c);

    bool step(); // false on HALT
    UtmConfiguration configuration() const;
    int state() const noexcept { return state_; }

private:
    std::deque<int> cells_;
    std::size_t head_;
    int state_;
};

Word utm_encode_config(const UtmConfiguration& c);
Word utm_encode(const std::vector<UtmConfiguration>& computation);
std::optional<UtmConfiguration> utm_decode_config(std::string_view block);
std::optional<std::vector<UtmConfiguration>> utm_decode(std::string_view w);
bool utm_validate(std::string_view w, const UtmConfiguration& initial);

} // namespace relpat
