#include "relpat/semantics.hpp"

#include <cmath>

#include "relpat/errors.hpp"
#include "relpat/matcher.hpp"

namespace relpat {

namespace {

long double binomial(std::size_t n, std::size_t k) {
    long double r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    }
    return r;
}

// Calls f(parts) for every composition of total into parts.size() pieces, each >= lo.
template <class F>
void for_each_composition(std::size_t total, std::size_t lo, std::vector<std::size_t>& parts, std::size_t index,
                          F&& f) {
    if (index + 1 == parts.size()) {
        parts[index] = total;
        f(parts);
        return;
    }
    const std::size_t reserve = lo * (parts.size() - index - 1);
    for (std::size_t len = lo; len + reserve <= total; ++len) {
        parts[index] = len;
        for_each_composition(total - len, lo, parts, index + 1, f);
    }
}

void require_same_alphabet(const RelationalPattern& a, const RelationalPattern& b) {
    if (!a.alphabet().same_letters(b.alphabet())) {
        throw PreconditionError("patterns must share one alphabet");
    }
}

} // namespace

Word apply(const Substitution& h, const SymbolString& symbols) {
    Word out;
    for (const Symbol& s : symbols) {
        if (s.is_terminal()) {
            out.push_back(s.letter());
            continue;
        }
        auto it = h.find(s.var());
        if (it == h.end()) {
            throw PreconditionError("substitution does not assign x" + std::to_string(s.var()));
        }
        out += it->second;
    }
    return out;
}

Word apply(const Substitution& h, const RelationalPattern& rp) { return apply(h, rp.pattern().symbols()); }

bool is_valid(const Substitution& h, const RelationalPattern& rp, Mode mode) {
    for (VarId v : rp.pattern().variables()) {
        auto it = h.find(v);
        if (it == h.end()) {
            throw PreconditionError("substitution does not assign x" + std::to_string(v));
        }
        if (mode == Mode::NonErasing && it->second.empty()) {
            return false;
        }
    }
    for (const Constraint& c : rp.constraints()) {
        if (!relation_holds(c.kind, h.at(c.left), h.at(c.right))) {
            return false;
        }
    }
    return true;
}

BoundedLanguage enumerate_language(const RelationalPattern& rp, Mode mode, std::size_t max_len,
                                   const EnumerationOptions& options) {
    BoundedLanguage out;
    out.max_len = max_len;
    const std::vector<VarId> vars = rp.pattern().variables();
    const std::size_t terminals = rp.pattern().terminal_count();
    const std::size_t lo = mode == Mode::NonErasing ? 1 : 0;
    const std::string& letters = rp.alphabet().letters();
    const std::size_t sigma = letters.size();

    if (terminals + lo * vars.size() > max_len) {
        return out;
    }
    if (vars.empty()) {
        out.words.insert(relpat::apply({}, rp));
        return out;
    }

    const std::size_t k = vars.size();
    const std::size_t first = lo * k;
    const std::size_t last = max_len - terminals;
    long double space = 0;
    for (std::size_t len = first; len <= last; ++len) {
        space += binomial(len - first + k - 1, k - 1) * std::pow(static_cast<long double>(sigma), len);
    }
    if (space > static_cast<long double>(options.node_budget)) {
        throw ResourceLimitError("enumeration would visit about " + std::to_string(static_cast<double>(space)) +
                                 " substitutions, above the budget of " + std::to_string(options.node_budget));
    }

    std::vector<std::size_t> parts(k);
    std::vector<std::size_t> digits;
    Substitution h;
    for (std::size_t len = first; len <= last; ++len) {
        for_each_composition(len, lo, parts, 0, [&](const std::vector<std::size_t>& lengths) {
            digits.assign(len, 0);
            while (true) {
                std::size_t at = 0;
                for (std::size_t i = 0; i < k; ++i) {
                    Word& w = h[vars[i]];
                    w.resize(lengths[i]);
                    for (std::size_t j = 0; j < lengths[i]; ++j) {
                        w[j] = letters[digits[at++]];
                    }
                }
                if (is_valid(h, rp, mode)) {
                    out.words.insert(relpat::apply(h, rp));
                }
                std::size_t pos = 0;
                while (pos < len && ++digits[pos] == sigma) {
                    digits[pos++] = 0;
                }
                if (pos == len) {
                    break;
                }
            }
        });
    }
    return out;
}

std::optional<Word> inclusion_counterexample(const RelationalPattern& a, const RelationalPattern& b, Mode mode,
                                             std::size_t max_len, const EnumerationOptions& options) {
    require_same_alphabet(a, b);
    for (const Word& w : enumerate_language(a, mode, max_len, options).words) {
        if (!match(w, b, mode)) {
            return w;
        }
    }
    return std::nullopt;
}

std::optional<Word> equality_counterexample(const RelationalPattern& a, const RelationalPattern& b, Mode mode,
                                            std::size_t max_len, const EnumerationOptions& options) {
    if (auto w = inclusion_counterexample(a, b, mode, max_len, options)) {
        return w;
    }
    return inclusion_counterexample(b, a, mode, max_len, options);
}

bool bounded_included(const RelationalPattern& a, const RelationalPattern& b, Mode mode, std::size_t max_len,
                      const EnumerationOptions& options) {
    return !inclusion_counterexample(a, b, mode, max_len, options);
}

bool bounded_equal(const RelationalPattern& a, const RelationalPattern& b, Mode mode, std::size_t max_len,
                   const EnumerationOptions& options) {
    return !equality_counterexample(a, b, mode, max_len, options);
}

} // namespace relpat
