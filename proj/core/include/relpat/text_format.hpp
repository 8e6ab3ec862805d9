#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relpat/pattern.hpp"

namespace relpat {

struct ParsedDocument {
    RelationalPattern pattern;
    std::optional<Mode> mode;
    std::vector<std::string> warnings;
};

// Grammar: clauses separated by ';' or newlines.
//   alphabet:<letters>
//   pattern: <tokens>        (a token is one letter or x<int>)
//   rel: name(xi,xj), ...
//   mode: E|NE
ParsedDocument parse_document(std::string_view text);
RelationalPattern parse_relational_pattern(std::string_view text);

std::string print_relational_pattern(const RelationalPattern& rp);
std::string print_document(const RelationalPattern& rp, std::optional<Mode> mode);

std::string format_symbols(const SymbolString& symbols);
// "x1=ab x2=ba"; the empty word prints as an empty right-hand side.
std::string format_substitution(const Substitution& h);

} // namespace relpat
