#include "relpat/counter_automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "relpat/errors.hpp"

namespace relpat {

namespace {

std::size_t slot(std::uint32_t state, int c1, int c2) {
    return static_cast<std::size_t>(state) * 4 + static_cast<std::size_t>(c1 * 2 + c2);
}

int flag(std::uint64_t counter) { return counter > 0 ? 1 : 0; }

bool apply_delta(std::uint64_t counter, int r, std::uint64_t& out) {
    if (r < 0 && counter == 0) {
        return false;
    }
    out = r < 0 ? counter - 1 : counter + static_cast<std::uint64_t>(r);
    return true;
}

std::uint32_t parse_state(const std::string& token, std::size_t line_no) {
    if (token.size() < 2 || token[0] != 'q') {
        throw ParseError("expected a state q<i>, got '" + token + "'", line_no);
    }
    try {
        std::size_t used = 0;
        unsigned long value = std::stoul(token.substr(1), &used);
        if (used + 1 != token.size()) {
            throw std::invalid_argument(token);
        }
        return static_cast<std::uint32_t>(value);
    } catch (const std::logic_error&) {
        throw ParseError("expected a state q<i>, got '" + token + "'", line_no);
    }
}

int parse_small(const std::string& token, int lo, int hi, std::size_t line_no) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used == token.size() && value >= lo && value <= hi) {
            return value;
        }
    } catch (const std::logic_error&) {
    }
    throw ParseError("value '" + token + "' outside " + std::to_string(lo) + ".." + std::to_string(hi), line_no);
}

// Length of the run of '0' starting at pos.
std::size_t zero_run(std::string_view w, std::size_t pos) {
    std::size_t end = pos;
    while (end < w.size() && w[end] == '0') {
        ++end;
    }
    return end - pos;
}

std::optional<std::uint64_t> decode_counter(std::size_t run, std::uint64_t offset, std::uint64_t scale) {
    if (run < offset || (run - offset) % scale != 0) {
        return std::nullopt;
    }
    return (run - offset) / scale;
}

} // namespace

TwoCounterAutomaton::TwoCounterAutomaton(std::uint32_t num_states) : num_states_(num_states), delta_(num_states * 4) {
    if (num_states == 0) {
        throw PreconditionError("an automaton needs at least one state");
    }
}

void TwoCounterAutomaton::add_transition(std::uint32_t from, int c1, int c2, CaTransition t) {
    if (from >= num_states_ || t.next >= num_states_) {
        throw PreconditionError("transition mentions a state outside q0..q" + std::to_string(num_states_ - 1));
    }
    if ((c1 != 0 && c1 != 1) || (c2 != 0 && c2 != 1)) {
        throw PreconditionError("zero flags must be 0 or 1");
    }
    if (t.r1 < -1 || t.r1 > 1 || t.r2 < -1 || t.r2 > 1) {
        throw PreconditionError("counter changes must be -1, 0 or +1");
    }
    if ((c1 == 0 && t.r1 == -1) || (c2 == 0 && t.r2 == -1)) {
        throw PreconditionError("a transition may not decrement a counter that is zero");
    }
    delta_[slot(from, c1, c2)].insert(t);
}

void TwoCounterAutomaton::set_accepting(std::uint32_t state, bool accepting) {
    if (state >= num_states_) {
        throw PreconditionError("accepting state outside the automaton");
    }
    if (accepting) {
        accepting_.insert(state);
    } else {
        accepting_.erase(state);
    }
}

bool TwoCounterAutomaton::is_accepting(std::uint32_t state) const { return accepting_.contains(state); }

const std::set<CaTransition>& TwoCounterAutomaton::transitions(std::uint32_t from, int c1, int c2) const {
    return delta_.at(slot(from, c1, c2));
}

bool TwoCounterAutomaton::has_transition(std::uint32_t from, int c1, int c2, const CaTransition& t) const {
    return from < num_states_ && transitions(from, c1, c2).contains(t);
}

std::vector<CaConfiguration> ca_step(const TwoCounterAutomaton& a, const CaConfiguration& c) {
    std::vector<CaConfiguration> out;
    if (c.state >= a.num_states()) {
        return out;
    }
    for (const CaTransition& t : a.transitions(c.state, flag(c.counter1), flag(c.counter2))) {
        CaConfiguration next{t.next, 0, 0};
        if (apply_delta(c.counter1, t.r1, next.counter1) && apply_delta(c.counter2, t.r2, next.counter2)) {
            out.push_back(next);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<CaRun> ca_find_accepting_run(const TwoCounterAutomaton& a, std::size_t max_steps) {
    if (max_steps == 0) {
        throw PreconditionError("max_steps must be at least 1");
    }
    const CaConfiguration start{0, 0, 0};
    std::vector<CaConfiguration> nodes{start};
    std::vector<std::size_t> parent{0};
    std::vector<std::size_t> depth{1};
    std::set<CaConfiguration> seen{start};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        if (a.is_accepting(nodes[at].state)) {
            CaRun run;
            for (std::size_t k = at;; k = parent[k]) {
                run.push_back(nodes[k]);
                if (k == 0) {
                    break;
                }
            }
            std::reverse(run.begin(), run.end());
            return run;
        }
        if (depth[at] == max_steps) {
            continue;
        }
        for (const CaConfiguration& next : ca_step(a, nodes[at])) {
            if (seen.insert(next).second) {
                nodes.push_back(next);
                parent.push_back(at);
                depth.push_back(depth[at] + 1);
                queue.push_back(nodes.size() - 1);
            }
        }
    }
    return std::nullopt;
}

bool ca_is_accepting_run(const TwoCounterAutomaton& a, const CaRun& run) {
    if (run.empty() || run.front() != CaConfiguration{0, 0, 0}) {
        return false;
    }
    for (std::size_t k = 0; k + 1 < run.size(); ++k) {
        const auto next = ca_step(a, run[k]);
        if (!std::binary_search(next.begin(), next.end(), run[k + 1])) {
            return false;
        }
    }
    return run.back().state < a.num_states() && a.is_accepting(run.back().state);
}

Word ca_encode_config(const CaConfiguration& c, const EncodingParams& p) {
    return std::string(p.x + c.state, '0') + "#" + std::string(p.c1 + p.y2 * c.counter1, '0') + "#" +
           std::string(p.c2 + p.y2 * c.counter2, '0');
}

Word ca_encode(const CaRun& run, const EncodingParams& params) {
    if (run.empty()) {
        throw PreconditionError("cannot encode an empty run");
    }
    Word out = "##";
    for (const CaConfiguration& c : run) {
        out += ca_encode_config(c, params) + "##";
    }
    return out;
}

std::optional<CaRun> ca_decode(std::string_view w, const EncodingParams& p) {
    if (p.x == 0 || p.c1 == 0 || p.c2 == 0 || p.y2 == 0) {
        throw PreconditionError("encoding parameters must be positive");
    }
    if (w.size() < 2 || w.substr(0, 2) != "##") {
        return std::nullopt;
    }
    CaRun run;
    std::size_t pos = 2;
    while (pos < w.size()) {
        std::size_t runs[3];
        for (int k = 0; k < 3; ++k) {
            runs[k] = zero_run(w, pos);
            pos += runs[k];
            const std::size_t seps = k < 2 ? 1 : 2;
            if (w.substr(pos, seps) != std::string(seps, '#')) {
                return std::nullopt;
            }
            pos += seps;
        }
        if (runs[0] < p.x) {
            return std::nullopt;
        }
        auto m1 = decode_counter(runs[1], p.c1, p.y2);
        auto m2 = decode_counter(runs[2], p.c2, p.y2);
        if (!m1 || !m2) {
            return std::nullopt;
        }
        run.push_back({static_cast<std::uint32_t>(runs[0] - p.x), *m1, *m2});
    }
    if (run.empty()) {
        return std::nullopt;
    }
    return run;
}

bool ca_validate(std::string_view w, const TwoCounterAutomaton& a, const EncodingParams& params) {
    auto run = ca_decode(w, params);
    return run && ca_is_accepting_run(a, *run);
}

TwoCounterAutomaton parse_automaton(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::uint32_t> states;
    std::vector<std::uint32_t> accepting;
    struct Pending {
        std::uint32_t from;
        int c1;
        int c2;
        CaTransition t;
        std::size_t line_no;
    };
    std::vector<Pending> pending;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto comment = line.find("//"); comment != std::string::npos) {
            line.erase(comment);
        }
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string t; tokens >> t;) {
            words.push_back(t);
        }
        if (words.empty()) {
            continue;
        }
        if (words[0] == "states:") {
            if (words.size() != 2) {
                throw ParseError("expected 'states: <n>'", line_no);
            }
            states = static_cast<std::uint32_t>(parse_small(words[1], 1, 1'000'000, line_no));
        } else if (words[0] == "accept:") {
            for (std::size_t k = 1; k < words.size(); ++k) {
                accepting.push_back(parse_state(words[k], line_no));
            }
        } else {
            if (words.size() != 7 || words[3] != "->") {
                throw ParseError("expected 'q<i> c1 c2 -> q<j> r1 r2'", line_no);
            }
            Pending p{parse_state(words[0], line_no),
                      parse_small(words[1], 0, 1, line_no),
                      parse_small(words[2], 0, 1, line_no),
                      {parse_state(words[4], line_no), parse_small(words[5], -1, 1, line_no),
                       parse_small(words[6], -1, 1, line_no)},
                      line_no};
            pending.push_back(p);
        }
    }
    if (!states) {
        throw ParseError("missing 'states: <n>' line", line_no);
    }
    TwoCounterAutomaton a(*states);
    for (const Pending& p : pending) {
        try {
            a.add_transition(p.from, p.c1, p.c2, p.t);
        } catch (const PreconditionError& e) {
            throw ParseError(e.what(), p.line_no);
        }
    }
    for (std::uint32_t q : accepting) {
        if (q >= *states) {
            throw ParseError("accepting state q" + std::to_string(q) + " outside the automaton", line_no);
        }
        a.set_accepting(q);
    }
    return a;
}

std::string print_automaton(const TwoCounterAutomaton& a) {
    std::string out = "states: " + std::to_string(a.num_states()) + "\naccept:";
    for (std::uint32_t q : a.accepting()) {
        out += " q" + std::to_string(q);
    }
    out += "\n";
    for (std::uint32_t q = 0; q < a.num_states(); ++q) {
        for (int c1 = 0; c1 <= 1; ++c1) {
            for (int c2 = 0; c2 <= 1; ++c2) {
                for (const CaTransition& t : a.transitions(q, c1, c2)) {
                    out += "q" + std::to_string(q) + " " + std::to_string(c1) + " " + std::to_string(c2) + " -> q" +
                           std::to_string(t.next) + " " + std::to_string(t.r1) + " " + std::to_string(t.r2) + "\n";
                }
            }
        }
    }
    return out;
}

} // namespace relpat
