#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>

#include "relpat/pattern.hpp"

namespace relpat {

struct BoundedLanguage {
    std::size_t max_len = 0;
    std::set<Word> words;
};

struct EnumerationOptions {
    std::uint64_t node_budget = 10'000'000;
};

Word apply(const Substitution& h, const SymbolString& symbols);
Word apply(const Substitution& h, const RelationalPattern& rp);

bool is_valid(const Substitution& h, const RelationalPattern& rp, Mode mode);

BoundedLanguage enumerate_language(const RelationalPattern& rp, Mode mode, std::size_t max_len,
                                   const EnumerationOptions& options = {});

// A word of a's bounded slice that is not a member of L(b), if any.
std::optional<Word> inclusion_counterexample(const RelationalPattern& a, const RelationalPattern& b,
                                             Mode mode, std::size_t max_len,
                                             const EnumerationOptions& options = {});
std::optional<Word> equality_counterexample(const RelationalPattern& a, const RelationalPattern& b,
                                            Mode mode, std::size_t max_len,
                                            const EnumerationOptions& options = {});

bool bounded_included(const RelationalPattern& a, const RelationalPattern& b, Mode mode,
                      std::size_t max_len, const EnumerationOptions& options = {});
bool bounded_equal(const RelationalPattern& a, const RelationalPattern& b, Mode mode,
                   std::size_t max_len, const EnumerationOptions& options = {});

} // namespace relpat
