#include "relpat/matcher.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "relpat/errors.hpp"

namespace relpat {

namespace {

constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

struct Sym {
    bool is_var;
    char letter;
    std::uint32_t var;
};

struct DenseConstraint {
    RelationKind kind;
    std::uint32_t left;
    std::uint32_t right;
};

using LetterSet = std::bitset<256>;

std::size_t letter_index(char c) { return static_cast<unsigned char>(c); }

std::string_view primitive_root(std::string_view w) {
    const std::size_t n = w.size();
    if (n == 0) {
        return w;
    }
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) {
            k = border[k];
        }
        if (w[i] == w[k]) {
            ++k;
        }
        border[i + 1] = k;
    }
    const std::size_t period = n - border[n];
    return n % period == 0 ? w.substr(0, period) : w;
}

// What the remaining search can observe about a bound value, given the only
// relation kind it still takes part in. Full is the value itself.
enum class Signature : std::uint8_t { Full, Root, Length, Letters, Shape };

void append_signature(std::string& key, Signature sig, std::string_view value) {
    auto put = [&key](std::size_t x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
    switch (sig) {
    case Signature::Full:
        put(value.size());
        key.append(value);
        break;
    case Signature::Root: {
        const std::string_view root = primitive_root(value);
        put(root.size());
        key.append(root);
        break;
    }
    case Signature::Length:
        put(value.size());
        break;
    case Signature::Letters: {
        std::string sorted(value);
        std::sort(sorted.begin(), sorted.end());
        put(sorted.size());
        key.append(sorted);
        break;
    }
    case Signature::Shape: {
        std::array<char, 256> seen{};
        char next = 1;
        put(value.size());
        for (char c : value) {
            char& slot = seen[letter_index(c)];
            if (slot == 0) {
                slot = next++;
            }
            key.push_back(slot);
        }
        break;
    }
    }
}

Signature signature_for(RelationKind kind) {
    switch (kind) {
    case RelationKind::ComPlus:
    case RelationKind::ComStar:
        return Signature::Root;
    case RelationKind::LenEq:
        return Signature::Length;
    case RelationKind::AbelianEq:
        return Signature::Letters;
    case RelationKind::AlphaPerm:
        return Signature::Shape;
    default:
        return Signature::Full;
    }
}

class Solver {
public:
    Solver(const MatchProblem& problem, const MatchOptions& options)
        : options_(options), min_len_(problem.mode == Mode::NonErasing ? 1 : 0) {
        std::unordered_map<VarId, std::uint32_t> index;
        auto dense = [&](VarId v) {
            auto [it, inserted] = index.emplace(v, static_cast<std::uint32_t>(vars_.size()));
            if (inserted) {
                vars_.push_back(v);
            }
            return it->second;
        };
        for (const MatchEquation& eq : problem.equations) {
            std::vector<Sym> syms;
            syms.reserve(eq.pattern.size());
            for (const Symbol& s : eq.pattern) {
                syms.push_back(s.is_variable() ? Sym{true, '\0', dense(s.var())} : Sym{false, s.letter(), 0});
            }
            eqs_.push_back(std::move(syms));
            targets_.push_back(eq.target);
        }
        const std::size_t n = vars_.size();
        adj_.resize(n);
        for (const Constraint& c : problem.constraints) {
            auto l = index.find(c.left);
            auto r = index.find(c.right);
            if (l == index.end() || r == index.end()) {
                throw PreconditionError("constraint variable does not occur in any equation");
            }
            const auto id = static_cast<std::uint32_t>(cons_.size());
            cons_.push_back({c.kind, l->second, r->second});
            adj_[l->second].push_back(id);
            if (r->second != l->second) {
                adj_[r->second].push_back(id);
            }
        }
        value_.resize(n);
        bound_.assign(n, 0);
        compute_static_suffix();
        compute_live_sets();
        feasible_ = compute_bounds();
    }

    // Returns true if the search stopped early because on_solution asked for it.
    template <class OnSolution>
    bool run(OnSolution&& on_solution) {
        if (!feasible_) {
            return false;
        }
        on_solution_ = [&]() {
            ++solutions_;
            return on_solution();
        };
        return search(0, 0, 0);
    }

    Substitution substitution() const {
        Substitution h;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            h.emplace(vars_[i], Word(value_[i]));
        }
        return h;
    }

private:
    void compute_static_suffix() {
        suffix_.resize(eqs_.size());
        for (std::size_t e = 0; e < eqs_.size(); ++e) {
            const auto& syms = eqs_[e];
            auto& suf = suffix_[e];
            suf.assign(syms.size() + 1, 0);
            for (std::size_t i = syms.size(); i-- > 0;) {
                suf[i] = suf[i + 1] + (syms[i].is_var ? min_len_ : 1);
            }
        }
    }

    // For every position (e, s): the variables bound before it whose values the
    // rest of the search still reads, either through a later occurrence or
    // through a constraint with a variable that is still unbound there.
    void compute_live_sets() {
        const std::size_t n = vars_.size();
        std::vector<std::size_t> first(n, unbounded);
        std::vector<std::size_t> last(n, 0);
        std::vector<std::size_t> offset(eqs_.size() + 1, 0);
        for (std::size_t e = 0; e < eqs_.size(); ++e) {
            offset[e + 1] = offset[e] + eqs_[e].size();
            for (std::size_t s = 0; s < eqs_[e].size(); ++s) {
                if (eqs_[e][s].is_var) {
                    const std::uint32_t v = eqs_[e][s].var;
                    first[v] = std::min(first[v], offset[e] + s);
                    last[v] = offset[e] + s;
                }
            }
        }
        // A bound variable stays live up to its last occurrence or the first
        // occurrence of its latest constraint partner.
        std::vector<std::size_t> until(last);
        for (const DenseConstraint& c : cons_) {
            until[c.left] = std::max(until[c.left], first[c.right]);
            until[c.right] = std::max(until[c.right], first[c.left]);
        }
        signature_.assign(n, Signature::Full);
        std::vector<std::size_t> occurrences(n, 0);
        for (const auto& syms : eqs_) {
            for (const Sym& sym : syms) {
                if (sym.is_var) {
                    ++occurrences[sym.var];
                }
            }
        }
        for (std::uint32_t v = 0; v < n; ++v) {
            std::optional<RelationKind> only;
            bool mixed = occurrences[v] != 1;
            for (std::uint32_t id : adj_[v]) {
                const DenseConstraint& c = cons_[id];
                mixed = mixed || c.left == c.right || (only && *only != c.kind);
                only = c.kind;
            }
            if (!mixed && only) {
                signature_[v] = signature_for(*only);
            }
        }
        live_.resize(eqs_.size());
        for (std::size_t e = 0; e < eqs_.size(); ++e) {
            live_[e].resize(eqs_[e].size());
            for (std::size_t s = 0; s < eqs_[e].size(); ++s) {
                const std::size_t at = offset[e] + s;
                for (std::uint32_t v = 0; v < n; ++v) {
                    if (first[v] < at && until[v] >= at) {
                        live_[e][s].push_back(v);
                    }
                }
            }
        }
    }

    void state_key(std::size_t e, std::size_t s, std::size_t pos) {
        std::string& key = key_buffer_;
        key.clear();
        auto put = [&key](std::size_t x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
        put(e);
        put(s);
        put(pos);
        for (std::uint32_t v : live_[e][s]) {
            append_signature(key, signature_[v], value_[v]);
        }
    }

    bool compute_bounds() {
        const std::size_t n = vars_.size();
        lo_.assign(n, min_len_);
        hi_.assign(n, unbounded);
        for (std::size_t e = 0; e < eqs_.size(); ++e) {
            const std::size_t total_min = suffix_[e][0];
            if (total_min > targets_[e].size()) {
                return false;
            }
            for (const Sym& s : eqs_[e]) {
                if (s.is_var) {
                    hi_[s.var] = std::min(hi_[s.var], targets_[e].size() - (total_min - min_len_));
                }
            }
        }
        check_letters_.assign(n, 0);
        if (!options_.pruning) {
            return true;
        }

        allowed_.assign(n, LetterSet().set());
        for (std::size_t e = 0; e < eqs_.size(); ++e) {
            LetterSet present;
            for (char c : targets_[e]) {
                present.set(letter_index(c));
            }
            for (const Sym& s : eqs_[e]) {
                if (s.is_var) {
                    allowed_[s.var] &= present;
                }
            }
        }

        bool changed = true;
        for (std::size_t round = 0; changed && round < 4 * n + 8; ++round) {
            changed = false;
            auto raise = [&](std::size_t& slot, std::size_t value) {
                if (value > slot) {
                    slot = value;
                    changed = true;
                }
            };
            auto lower = [&](std::size_t& slot, std::size_t value) {
                if (value < slot) {
                    slot = value;
                    changed = true;
                }
            };
            auto narrow = [&](LetterSet& slot, const LetterSet& value) {
                LetterSet next = slot & value;
                if (next != slot) {
                    slot = next;
                    changed = true;
                }
            };
            for (const DenseConstraint& c : cons_) {
                const auto a = c.left;
                const auto b = c.right;
                switch (length_profile(c.kind)) {
                case LengthProfile::EqualLengths:
                    raise(lo_[a], lo_[b]);
                    raise(lo_[b], lo_[a]);
                    lower(hi_[a], hi_[b]);
                    lower(hi_[b], hi_[a]);
                    break;
                case LengthProfile::LeftAtMostRight:
                    lower(hi_[a], hi_[b]);
                    raise(lo_[b], lo_[a]);
                    break;
                case LengthProfile::LeftMultipleOfRight:
                    if (lo_[a] > 0) {
                        raise(lo_[b], 1);
                        lower(hi_[b], hi_[a]);
                    }
                    if (hi_[b] == 0) {
                        lower(hi_[a], 0);
                    }
                    break;
                case LengthProfile::Unconstrained:
                    if (c.kind == RelationKind::ComPlus) {
                        raise(lo_[a], 1);
                        raise(lo_[b], 1);
                    }
                    break;
                }
                switch (c.kind) {
                case RelationKind::Eq:
                case RelationKind::Reversal:
                case RelationKind::AbelianEq:
                case RelationKind::ComPlus:
                    narrow(allowed_[a], allowed_[b]);
                    narrow(allowed_[b], allowed_[a]);
                    break;
                case RelationKind::Subseq:
                case RelationKind::Star:
                    narrow(allowed_[a], allowed_[b]);
                    break;
                default:
                    break;
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (lo_[v] > hi_[v]) {
                return false;
            }
            check_letters_[v] = allowed_[v].all() ? 0 : 1;
        }
        return true;
    }

    std::uint32_t other_end(const DenseConstraint& c, std::uint32_t v) const { return c.left == v ? c.right : c.left; }

    // Lower bound on the length consumed by symbols [from, end) of equation e.
    std::size_t rest_min(std::size_t e, std::size_t from) const {
        if (!options_.pruning) {
            return suffix_[e][from];
        }
        std::size_t total = 0;
        const auto& syms = eqs_[e];
        for (std::size_t i = from; i < syms.size(); ++i) {
            const Sym& s = syms[i];
            if (!s.is_var) {
                ++total;
            } else if (bound_[s.var]) {
                total += value_[s.var].size();
            } else {
                std::size_t need = lo_[s.var];
                for (std::uint32_t id : adj_[s.var]) {
                    const DenseConstraint& c = cons_[id];
                    const std::uint32_t o = other_end(c, s.var);
                    if (o == s.var || !bound_[o]) {
                        continue;
                    }
                    const auto profile = length_profile(c.kind);
                    if (profile == LengthProfile::EqualLengths ||
                        (profile == LengthProfile::LeftAtMostRight && c.right == s.var)) {
                        need = std::max(need, value_[o].size());
                    }
                }
                total += need;
            }
        }
        return total;
    }

    bool constraints_hold(std::uint32_t v, std::string_view candidate) const {
        for (std::uint32_t id : adj_[v]) {
            const DenseConstraint& c = cons_[id];
            if (c.left == v && c.right == v) {
                if (!relation_holds(c.kind, candidate, candidate)) {
                    return false;
                }
                continue;
            }
            const std::uint32_t o = other_end(c, v);
            if (!bound_[o]) {
                continue;
            }
            const bool ok = c.left == v ? relation_holds(c.kind, candidate, value_[o])
                                        : relation_holds(c.kind, value_[o], candidate);
            if (!ok) {
                return false;
            }
        }
        return true;
    }

    // The known pieces of the rest of equation e (runs of terminals and bound
    // values) must occur in order and without overlap in the rest of the
    // target, the first one exactly at pos unless a free variable precedes it.
    bool factors_fit(std::size_t e, std::size_t from, std::size_t pos) {
        const auto& syms = eqs_[e];
        const std::string_view target = targets_[e];
        std::string& piece = piece_buffer_;
        std::size_t cursor = pos;
        std::size_t gap = 0;
        bool anchored = true;
        auto place = [&]() {
            if (piece.empty()) {
                return true;
            }
            if (cursor + gap > target.size()) {
                return false;
            }
            const std::size_t at = anchored ? cursor : target.find(piece, cursor + gap);
            if (at == std::string_view::npos || target.substr(at, piece.size()) != piece) {
                return false;
            }
            cursor = at + piece.size();
            gap = 0;
            piece.clear();
            return true;
        };
        piece.clear();
        for (std::size_t i = from; i < syms.size(); ++i) {
            const Sym& sym = syms[i];
            if (!sym.is_var) {
                piece.push_back(sym.letter);
            } else if (bound_[sym.var]) {
                piece.append(value_[sym.var]);
            } else {
                if (!place()) {
                    return false;
                }
                anchored = false;
                gap += lo_[sym.var];
            }
        }
        return place() && cursor + gap <= target.size();
    }

    void count_node() {
        if (++nodes_ > options_.node_budget) {
            throw ResourceLimitError("matcher exceeded its node budget of " + std::to_string(options_.node_budget));
        }
    }

    bool search(std::size_t e, std::size_t s, std::size_t pos) {
        if (e == eqs_.size()) {
            return on_solution_();
        }
        const auto& syms = eqs_[e];
        const std::string_view target = targets_[e];
        if (s == syms.size()) {
            return pos == target.size() && search(e + 1, 0, 0);
        }
        const Sym& sym = syms[s];
        if (!sym.is_var) {
            return pos < target.size() && target[pos] == sym.letter && search(e, s + 1, pos + 1);
        }
        const std::uint32_t v = sym.var;
        if (bound_[v]) {
            const std::string_view val = value_[v];
            return target.substr(pos, val.size()) == val && search(e, s + 1, pos + val.size());
        }
        // A subtree that produced no solution fails again from an equal state.
        // Keys cost time, so only searches that are already large use them.
        if (!options_.pruning || nodes_ < options_.memo_after_nodes) {
            return branch(e, s, pos);
        }
        state_key(e, s, pos);
        if (failed_.contains(key_buffer_)) {
            return false;
        }
        std::string key = key_buffer_;
        const std::uint64_t before = solutions_;
        const bool stopped = branch(e, s, pos);
        if (!stopped && solutions_ == before && memo_bytes_ + key.size() <= max_memo_bytes) {
            memo_bytes_ += key.size() + sizeof(std::string);
            failed_.insert(std::move(key));
        }
        return stopped;
    }

    bool branch(std::size_t e, std::size_t s, std::size_t pos) {
        const auto& syms = eqs_[e];
        const std::string_view target = targets_[e];
        const std::uint32_t v = syms[s].var;

        const std::size_t remaining = target.size() - pos;
        const std::size_t rest = rest_min(e, s + 1);
        if (rest > remaining) {
            return false;
        }
        const std::size_t max_len = remaining - rest;
        std::size_t lo = min_len_;
        std::size_t hi = max_len;
        if (options_.pruning) {
            lo = std::max(lo, lo_[v]);
            hi = std::min(hi, hi_[v]);
        }
        if (s + 1 == syms.size()) {
            lo = std::max(lo, max_len);
        }
        std::size_t multiple_of = 0;
        std::size_t divides = 0;
        if (options_.pruning) {
            for (std::uint32_t id : adj_[v]) {
                const DenseConstraint& c = cons_[id];
                const std::uint32_t o = other_end(c, v);
                if (o == v || !bound_[o]) {
                    continue;
                }
                const std::size_t len = value_[o].size();
                switch (length_profile(c.kind)) {
                case LengthProfile::EqualLengths:
                    lo = std::max(lo, len);
                    hi = std::min(hi, len);
                    break;
                case LengthProfile::LeftAtMostRight:
                    if (c.left == v) {
                        hi = std::min(hi, len);
                    } else {
                        lo = std::max(lo, len);
                    }
                    break;
                case LengthProfile::LeftMultipleOfRight:
                    if (c.left == v) {
                        if (len == 0) {
                            hi = 0;
                        } else {
                            multiple_of = len;
                        }
                    } else if (len > 0) {
                        lo = std::max<std::size_t>(lo, 1);
                        hi = std::min(hi, len);
                        divides = len;
                    }
                    break;
                case LengthProfile::Unconstrained:
                    if (c.kind == RelationKind::ComPlus) {
                        lo = std::max<std::size_t>(lo, 1);
                    }
                    break;
                }
            }
        }
        if (lo > hi) {
            return false;
        }
        const bool check_letters = options_.pruning && check_letters_[v];
        if (check_letters) {
            for (std::size_t i = 0; i < lo; ++i) {
                if (!allowed_[v].test(letter_index(target[pos + i]))) {
                    return false;
                }
            }
        }
        for (std::size_t len = lo; len <= hi; ++len) {
            if (check_letters && len > lo && !allowed_[v].test(letter_index(target[pos + len - 1]))) {
                break;
            }
            if ((multiple_of != 0 && len % multiple_of != 0) || (divides != 0 && (len == 0 || divides % len != 0))) {
                continue;
            }
            count_node();
            const std::string_view candidate = target.substr(pos, len);
            if (!constraints_hold(v, candidate)) {
                continue;
            }
            value_[v] = candidate;
            bound_[v] = 1;
            if ((!options_.pruning || factors_fit(e, s + 1, pos + len)) && search(e, s + 1, pos + len)) {
                return true;
            }
            bound_[v] = 0;
        }
        return false;
    }

    static constexpr std::size_t max_memo_bytes = std::size_t{1} << 27;

    MatchOptions options_;
    std::size_t min_len_;
    std::vector<VarId> vars_;
    std::vector<std::vector<Sym>> eqs_;
    std::vector<std::string_view> targets_;
    std::vector<DenseConstraint> cons_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::vector<std::size_t>> suffix_;
    std::vector<std::size_t> lo_;
    std::vector<std::size_t> hi_;
    std::vector<LetterSet> allowed_;
    std::vector<char> check_letters_;
    std::vector<std::string_view> value_;
    std::vector<char> bound_;
    std::uint64_t nodes_ = 0;
    std::uint64_t solutions_ = 0;
    std::vector<std::vector<std::vector<std::uint32_t>>> live_;
    std::vector<Signature> signature_;
    std::unordered_set<std::string> failed_;
    std::size_t memo_bytes_ = 0;
    std::string piece_buffer_;
    std::string key_buffer_;
    bool feasible_ = true;
    std::function<bool()> on_solution_;
};

MatchProblem single_problem(const Word& w, const RelationalPattern& rp, Mode mode) {
    MatchProblem p;
    p.equations.push_back({rp.pattern().symbols(), w});
    p.constraints.assign(rp.constraints().begin(), rp.constraints().end());
    p.mode = mode;
    return p;
}

} // namespace

std::optional<Substitution> solve_system(const MatchProblem& problem, const MatchOptions& options) {
    if (problem.equations.empty()) {
        throw PreconditionError("a match problem needs at least one equation");
    }
    Solver solver(problem, options);
    std::optional<Substitution> found;
    solver.run([&]() {
        found = solver.substitution();
        return true;
    });
    return found;
}

std::uint64_t count_system_witnesses(const MatchProblem& problem, std::uint64_t cap, const MatchOptions& options) {
    if (problem.equations.empty()) {
        throw PreconditionError("a match problem needs at least one equation");
    }
    if (cap == 0) {
        throw PreconditionError("witness cap must be positive");
    }
    Solver solver(problem, options);
    std::uint64_t count = 0;
    solver.run([&]() { return ++count >= cap; });
    return count;
}

std::optional<Substitution> match(const Word& w, const RelationalPattern& rp, Mode mode, const MatchOptions& options) {
    if (!rp.alphabet().contains_all(w)) {
        return std::nullopt;
    }
    return solve_system(single_problem(w, rp, mode), options);
}

std::uint64_t count_witnesses(const Word& w, const RelationalPattern& rp, Mode mode, std::uint64_t cap,
                              const MatchOptions& options) {
    if (!rp.alphabet().contains_all(w)) {
        return 0;
    }
    return count_system_witnesses(single_problem(w, rp, mode), cap, options);
}

} // namespace relpat
