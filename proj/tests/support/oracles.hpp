#pragma once

// Reference implementations used only by the tests. They follow the textbook
// definitions as literally as possible and trade speed for obviousness.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "relpat/cnf.hpp"
#include "relpat/inclusion.hpp"
#include "relpat/pattern.hpp"
#include "relpat/relations.hpp"

namespace oracle {

using relpat::Word;

inline std::vector<Word> words_up_to(const std::string& letters, std::size_t max_len) {
    std::vector<Word> out{""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (char c : letters) {
                out.push_back(out[i] + c);
            }
        }
        begin = end;
    }
    return out;
}

inline std::string letters_of(const Word& u, const Word& v) {
    std::set<char> s(u.begin(), u.end());
    s.insert(v.begin(), v.end());
    return {s.begin(), s.end()};
}

// Choose |u| positions of v and compare.
inline bool subsequence(const Word& u, const Word& v) {
    if (u.size() > v.size()) {
        return false;
    }
    const std::uint32_t n = static_cast<std::uint32_t>(v.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) {
            continue;
        }
        Word picked;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                picked.push_back(v[i]);
            }
        }
        if (picked == u) {
            return true;
        }
    }
    return false;
}

// Some bijection of the letters occurring in u and v maps v onto u.
inline bool letter_bijection(const Word& u, const Word& v) {
    if (u.size() != v.size()) {
        return false;
    }
    std::string letters = letters_of(u, v);
    std::string image = letters;
    do {
        Word mapped = v;
        for (char& c : mapped) {
            c = image[letters.find(c)];
        }
        if (mapped == u) {
            return true;
        }
    } while (std::next_permutation(image.begin(), image.end()));
    return false;
}

inline bool is_power_of(const Word& w, const Word& z, bool allow_zero) {
    if (z.empty()) {
        return w.empty() && allow_zero;
    }
    if (w.empty()) {
        return allow_zero;
    }
    Word acc;
    while (acc.size() < w.size()) {
        acc += z;
    }
    return acc == w;
}

// Exists z with u, v in {z}* (star) or {z}+ with z non-empty (plus).
inline bool common_root(const Word& u, const Word& v, bool plus) {
    const std::string letters = letters_of(u, v);
    for (const Word& z : words_up_to(letters.empty() ? "a" : letters, std::max(u.size(), v.size()))) {
        if (plus && z.empty()) {
            continue;
        }
        if (is_power_of(u, z, !plus) && is_power_of(v, z, !plus)) {
            return true;
        }
    }
    return false;
}

inline std::map<char, int> counts(const Word& w) {
    std::map<char, int> m;
    for (char c : w) {
        ++m[c];
    }
    return m;
}

inline bool relation(relpat::RelationKind kind, const Word& u, const Word& v) {
    using relpat::RelationKind;
    switch (kind) {
    case RelationKind::Eq:
        return u == v;
    case RelationKind::LenEq:
        return u.size() == v.size();
    case RelationKind::Subseq:
        return subsequence(u, v);
    case RelationKind::AbelianEq:
        return counts(u) == counts(v);
    case RelationKind::AlphaPerm:
        return letter_bijection(u, v);
    case RelationKind::Reversal:
        return u == Word(v.rbegin(), v.rend());
    case RelationKind::ComStar:
        return common_root(u, v, false);
    case RelationKind::ComPlus:
        return common_root(u, v, true);
    case RelationKind::Star:
        return is_power_of(u, v, true);
    }
    return false;
}

// All substitutions with images up to max_len, filtered by validity.
inline std::set<Word> naive_language(const relpat::RelationalPattern& rp, relpat::Mode mode, std::size_t max_len) {
    const auto vars = rp.pattern().variables();
    const std::size_t min_len = mode == relpat::Mode::NonErasing ? 1 : 0;
    const auto pool = words_up_to(rp.alphabet().letters(), max_len);
    std::set<Word> out;
    std::map<relpat::VarId, Word> h;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t used) {
        if (i == vars.size()) {
            Word w;
            for (const relpat::Symbol& s : rp.pattern().symbols()) {
                w += s.is_variable() ? h[s.var()] : Word(1, s.letter());
            }
            if (w.size() > max_len) {
                return;
            }
            for (const relpat::Constraint& c : rp.constraints()) {
                if (!relation(c.kind, h[c.left], h[c.right])) {
                    return;
                }
            }
            out.insert(w);
            return;
        }
        for (const Word& img : pool) {
            if (img.size() < min_len || used + img.size() + rp.pattern().terminal_count() > max_len) {
                continue;
            }
            h[vars[i]] = img;
            go(i + 1, used + img.size());
        }
    };
    go(0, 0);
    return out;
}

// Classical pattern membership through std::regex; only for constraint-free patterns.
inline bool regex_member(const relpat::Pattern& p, const Word& w, relpat::Mode mode) {
    std::string re;
    for (const relpat::Symbol& s : p.symbols()) {
        if (s.is_variable()) {
            re += mode == relpat::Mode::NonErasing ? "(.+)" : "(.*)";
        } else {
            re += std::string("\\x") + "0123456789abcdef"[(s.letter() >> 4) & 15] + "0123456789abcdef"[s.letter() & 15];
        }
    }
    return std::regex_match(w, std::regex(re));
}

inline bool sat_truth_table(const relpat::CnfFormula& phi) {
    std::vector<bool> value(phi.num_vars() + 1, false);
    std::function<bool(std::uint32_t)> go = [&](std::uint32_t var) {
        if (var > phi.num_vars()) {
            for (const auto& clause : phi.clauses()) {
                bool any = false;
                for (const auto& lit : clause) {
                    any = any || (value[lit.var] != lit.negated);
                }
                if (!any) {
                    return false;
                }
            }
            return true;
        }
        value[var] = false;
        if (go(var + 1)) {
            return true;
        }
        value[var] = true;
        return go(var + 1);
    };
    return go(1);
}

// sigma(x) in L1 . S(p) . L2 checked by trying every parameter value directly.
inline bool simple_predicate_holds(const relpat::SimplePredicate& sp, const Word& x) {
    std::vector<int> classes;
    for (const auto& item : sp.skeleton) {
        if (item.is_param() && std::find(classes.begin(), classes.end(), item.param_class) == classes.end()) {
            classes.push_back(item.param_class);
        }
    }
    std::map<int, std::size_t> value;
    std::function<bool(std::size_t)> go = [&](std::size_t k) {
        if (k == classes.size()) {
            Word s;
            for (const auto& item : sp.skeleton) {
                s += item.is_param() ? Word(value[item.param_class], '0') : Word(1, item.letter);
            }
            if (s.size() > x.size()) {
                return false;
            }
            const bool empty_left = sp.l1 == relpat::Boundary::EmptyOnly;
            const bool empty_right = sp.l2 == relpat::Boundary::EmptyOnly;
            for (std::size_t at = 0; at + s.size() <= x.size(); ++at) {
                if (empty_left && at != 0) {
                    break;
                }
                if (empty_right && at + s.size() != x.size()) {
                    continue;
                }
                if (x.compare(at, s.size(), s) == 0) {
                    return true;
                }
            }
            return false;
        }
        for (std::size_t n = 0; n <= x.size(); ++n) {
            value[classes[k]] = n;
            if (go(k + 1)) {
                return true;
            }
        }
        return false;
    };
    return go(0);
}

} // namespace oracle
