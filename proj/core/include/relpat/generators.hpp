#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "relpat/pattern.hpp"

namespace relpat {

struct PatternShape {
    std::string alphabet = "ab";
    std::size_t min_vars = 1;
    std::size_t max_vars = 3;
    std::size_t max_terminals = 3;
    std::vector<RelationKind> kinds{all_relation_kinds.begin(), all_relation_kinds.end()};
    std::size_t max_constraints = 2;
    bool single_kind = true;
};

// A normal-form relational pattern with random terminals, variables and constraints.
RelationalPattern random_relational_pattern(std::mt19937_64& rng, const PatternShape& shape);

Word random_word(std::mt19937_64& rng, std::string_view letters, std::size_t length);
// All words over letters of length at most max_len, shortest first.
std::vector<Word> all_words(std::string_view letters, std::size_t max_len);

} // namespace relpat
