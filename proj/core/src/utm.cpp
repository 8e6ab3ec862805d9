#include "relpat/utm.hpp"

#include <array>

#include "relpat/errors.hpp"

namespace relpat {

namespace {

struct Entry {
    bool halt;
    UtmAction action;
};

constexpr Entry go(int write, Move move, int next) { return {false, {write, move, next}}; }
constexpr Entry halt() { return {true, {0, Move::Left, 0}}; }

constexpr Move L = Move::Left;
constexpr Move R = Move::Right;

// table[state - 1][symbol]
constexpr std::array<std::array<Entry, 2>, 15> table{{
    {go(0, R, 2), go(1, R, 1)},
    {go(1, R, 3), go(1, R, 1)},
    {go(0, L, 7), go(0, L, 5)},
    {go(0, L, 6), go(1, L, 5)},
    {go(1, R, 1), go(1, L, 4)},
    {go(1, L, 4), go(1, L, 4)},
    {go(0, L, 8), go(1, L, 7)},
    {go(1, L, 9), go(1, L, 7)},
    {go(0, R, 1), go(1, L, 10)},
    {go(1, L, 11), halt()},
    {go(0, R, 12), go(1, R, 14)},
    {go(0, R, 13), go(1, R, 12)},
    {go(0, L, 2), go(1, R, 12)},
    {go(0, L, 3), go(0, R, 15)},
    {go(0, R, 14), go(1, R, 14)},
}};

void require_state(int state) {
    if (state < 1 || state > utm_state_count) {
        throw PreconditionError("UTM state index must lie in 1..15");
    }
}

} // namespace

std::optional<UtmAction> utm_delta(int symbol, int state) {
    require_state(state);
    if (symbol != 0 && symbol != 1) {
        throw PreconditionError("UTM symbols are 0 and 1");
    }
    const Entry& e = table[static_cast<std::size_t>(state - 1)][static_cast<std::size_t>(symbol)];
    if (e.halt) {
        return std::nullopt;
    }
    return e.action;
}

bool utm_is_halting(const UtmConfiguration& c) { return !utm_delta(static_cast<int>(c.left & 1U), c.state); }

std::optional<UtmConfiguration> utm_step(const UtmConfiguration& c) {
    const int read = static_cast<int>(c.left & 1U);
    auto action = utm_delta(read, c.state);
    if (!action) {
        return std::nullopt;
    }
    const std::uint64_t written = c.left - static_cast<std::uint64_t>(read) + static_cast<std::uint64_t>(action->write);
    UtmConfiguration next{action->next, 0, 0};
    if (action->move == Move::Right) {
        // The cell right of the head becomes the new head cell on the left side.
        next.left = 2 * written + (c.right & 1U);
        next.right = c.right >> 1;
    } else {
        next.right = 2 * c.right + (written & 1U);
        next.left = written >> 1;
    }
    return next;
}

std::optional<std::vector<UtmConfiguration>> utm_run(const UtmConfiguration& start, std::size_t max_configs) {
    require_state(start.state);
    std::vector<UtmConfiguration> out{start};
    while (!utm_is_halting(out.back())) {
        if (out.size() >= max_configs) {
            return std::nullopt;
        }
        out.push_back(*utm_step(out.back()));
    }
    return out;
}

ExplicitTape::ExplicitTape(const UtmConfiguration& c) : state_(c.state) {
    require_state(c.state);
    std::vector<int> left_cells;
    for (std::uint64_t v = c.left; v != 0; v >>= 1) {
        left_cells.push_back(static_cast<int>(v & 1U));
    }
    if (left_cells.empty()) {
        left_cells.push_back(0);
    }
    for (auto it = left_cells.rbegin(); it != left_cells.rend(); ++it) {
        cells_.push_back(*it);
    }
    head_ = cells_.size() - 1;
    for (std::uint64_t v = c.right; v != 0; v >>= 1) {
        cells_.push_back(static_cast<int>(v & 1U));
    }
}

bool ExplicitTape::step() {
    auto action = utm_delta(cells_[head_], state_);
    if (!action) {
        return false;
    }
    cells_[head_] = action->write;
    state_ = action->next;
    if (action->move == Move::Right) {
        ++head_;
        if (head_ == cells_.size()) {
            cells_.push_back(0);
        }
    } else if (head_ == 0) {
        cells_.push_front(0);
    } else {
        --head_;
    }
    return true;
}

UtmConfiguration ExplicitTape::configuration() const {
    UtmConfiguration c{state_, 0, 0};
    std::uint64_t weight = 1;
    for (std::size_t i = head_ + 1; i-- > 0;) {
        c.left += weight * static_cast<std::uint64_t>(cells_[i]);
        weight <<= 1;
    }
    weight = 1;
    for (std::size_t i = head_ + 1; i < cells_.size(); ++i) {
        c.right += weight * static_cast<std::uint64_t>(cells_[i]);
        weight <<= 1;
    }
    return c;
}

Word utm_encode_config(const UtmConfiguration& c) {
    require_state(c.state);
    return std::string(7 + c.right, '0') + "#" + std::string(7 + c.left, '0') + "#" +
           std::string(static_cast<std::size_t>(c.state + 6), '0');
}

Word utm_encode(const std::vector<UtmConfiguration>& computation) {
    if (computation.empty()) {
        throw PreconditionError("cannot encode an empty computation");
    }
    Word out = "##";
    for (const UtmConfiguration& c : computation) {
        out += utm_encode_config(c) + "##";
    }
    return out;
}

std::optional<UtmConfiguration> utm_decode_config(std::string_view block) {
    std::size_t runs[3];
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        std::size_t start = pos;
        while (pos < block.size() && block[pos] == '0') {
            ++pos;
        }
        runs[k] = pos - start;
        if (k < 2) {
            if (pos >= block.size() || block[pos] != '#') {
                return std::nullopt;
            }
            ++pos;
        }
    }
    if (pos != block.size() || runs[0] < 7 || runs[1] < 7 || runs[2] < 7 || runs[2] > 21) {
        return std::nullopt;
    }
    return UtmConfiguration{static_cast<int>(runs[2] - 6), runs[1] - 7, runs[0] - 7};
}

std::optional<std::vector<UtmConfiguration>> utm_decode(std::string_view w) {
    if (w.size() < 4 || w.substr(0, 2) != "##" || w.substr(w.size() - 2) != "##") {
        return std::nullopt;
    }
    std::vector<UtmConfiguration> out;
    std::string_view inner = w.substr(2, w.size() - 4);
    while (true) {
        const std::size_t sep = inner.find("##");
        auto c = utm_decode_config(inner.substr(0, sep));
        if (!c) {
            return std::nullopt;
        }
        out.push_back(*c);
        if (sep == std::string_view::npos) {
            break;
        }
        inner.remove_prefix(sep + 2);
    }
    return out;
}

bool utm_validate(std::string_view w, const UtmConfiguration& initial) {
    auto computation = utm_decode(w);
    if (!computation || computation->front() != initial) {
        return false;
    }
    const auto& cs = *computation;
    for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
        auto next = utm_step(cs[k]);
        if (next && *next != cs[k + 1]) {
            return false;
        }
    }
    return utm_is_halting(cs.back());
}

} // namespace relpat
