#include "relpat/generators.hpp"

#include <algorithm>

#include "relpat/errors.hpp"

namespace relpat {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

RelationalPattern random_relational_pattern(std::mt19937_64& rng, const PatternShape& shape) {
    if (shape.kinds.empty() || shape.alphabet.empty() || shape.min_vars > shape.max_vars) {
        throw PreconditionError("invalid pattern shape");
    }
    const std::size_t vars = pick(rng, shape.min_vars, shape.max_vars);
    std::size_t terminals = pick(rng, 0, shape.max_terminals);
    if (vars == 0 && terminals == 0) {
        terminals = 1;
    }
    std::vector<bool> is_var(vars + terminals, false);
    std::fill(is_var.begin(), is_var.begin() + static_cast<std::ptrdiff_t>(vars), true);
    std::shuffle(is_var.begin(), is_var.end(), rng);

    SymbolString symbols;
    VarId next = 1;
    for (bool v : is_var) {
        if (v) {
            symbols.push_back(Symbol::variable(next++));
        } else {
            symbols.push_back(Symbol::terminal(shape.alphabet[pick(rng, 0, shape.alphabet.size() - 1)]));
        }
    }

    std::vector<Constraint> constraints;
    if (vars >= 1 && shape.max_constraints > 0) {
        const std::size_t count = pick(rng, 0, shape.max_constraints);
        const RelationKind shared = shape.kinds[pick(rng, 0, shape.kinds.size() - 1)];
        for (std::size_t k = 0; k < count; ++k) {
            const RelationKind kind = shape.single_kind ? shared : shape.kinds[pick(rng, 0, shape.kinds.size() - 1)];
            const auto left = static_cast<VarId>(pick(rng, 1, vars));
            const auto right = static_cast<VarId>(pick(rng, 1, vars));
            if (left != right || vars == 1) {
                constraints.push_back({kind, left, right});
            }
        }
    }
    return RelationalPattern(Alphabet(shape.alphabet), Pattern(std::move(symbols)), constraints);
}

Word random_word(std::mt19937_64& rng, std::string_view letters, std::size_t length) {
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
        w.push_back(letters[pick(rng, 0, letters.size() - 1)]);
    }
    return w;
}

std::vector<Word> all_words(std::string_view letters, std::size_t max_len) {
    std::vector<Word> out{""};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (char c : letters) {
                out.push_back(out[i] + c);
            }
        }
        level_start = level_end;
    }
    return out;
}

} // namespace relpat
