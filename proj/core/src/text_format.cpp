#include "relpat/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "relpat/errors.hpp"

namespace relpat {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

struct Clause {
    std::string key;
    std::string_view value;
    std::size_t value_offset;
    std::size_t offset;
};

struct RawConstraint {
    RelationKind kind;
    VarId left;
    VarId right;
    std::size_t offset;
};

std::vector<Clause> split_clauses(std::string_view text) {
    std::vector<Clause> clauses;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find_first_of(";\n", start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(start, end - start);
        std::size_t lead = 0;
        while (lead < raw.size() && is_space(raw[lead])) {
            ++lead;
        }
        raw.remove_prefix(lead);
        while (!raw.empty() && is_space(raw.back())) {
            raw.remove_suffix(1);
        }
        if (!raw.empty()) {
            const std::size_t offset = start + lead;
            const std::size_t colon = raw.find(':');
            if (colon == std::string_view::npos) {
                throw ParseError("expected '<key>: <value>'", offset);
            }
            std::string key;
            for (char c : raw.substr(0, colon)) {
                if (!is_space(c)) {
                    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
                }
            }
            std::string_view value = raw.substr(colon + 1);
            std::size_t value_offset = offset + colon + 1;
            while (!value.empty() && is_space(value.front())) {
                value.remove_prefix(1);
                ++value_offset;
            }
            clauses.push_back({key, value, value_offset, offset});
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return clauses;
}

std::optional<VarId> parse_variable_token(std::string_view token) {
    if (token.size() < 2 || token[0] != 'x') {
        return std::nullopt;
    }
    VarId value = 0;
    for (char c : token.substr(1)) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
        if (value > 100'000'000) {
            return std::nullopt;
        }
        value = value * 10 + static_cast<VarId>(c - '0');
    }
    if (value == 0) {
        return std::nullopt;
    }
    return value;
}

class RelScanner {
public:
    RelScanner(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    std::vector<RawConstraint> parse() {
        std::vector<RawConstraint> out;
        skip_space();
        if (at_end()) {
            return out;
        }
        while (true) {
            skip_space();
            const std::size_t name_at = pos_;
            std::string name;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
                name.push_back(text_[pos_++]);
            }
            if (name.empty()) {
                fail("expected a relation name");
            }
            auto kind = relation_from_name(name);
            if (!kind) {
                throw ParseError("unknown relation name '" + name + "'", base_ + name_at);
            }
            expect('(');
            VarId left = variable();
            expect(',');
            VarId right = variable();
            expect(')');
            out.push_back({*kind, left, right, base_ + name_at});
            skip_space();
            if (at_end()) {
                break;
            }
            expect(',');
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space() {
        while (!at_end() && is_space(peek())) {
            ++pos_;
        }
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, base_ + pos_); }
    void expect(char c) {
        skip_space();
        if (at_end() || peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    VarId variable() {
        skip_space();
        const std::size_t at = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        auto v = parse_variable_token(text_.substr(at, pos_ - at));
        if (!v) {
            throw ParseError("expected a variable x<int>", base_ + at);
        }
        return *v;
    }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

} // namespace

ParsedDocument parse_document(std::string_view text) {
    std::optional<std::string> alphabet_letters;
    std::size_t alphabet_offset = 0;
    std::optional<Clause> pattern_clause;
    std::vector<RawConstraint> raw_constraints;
    std::optional<Mode> mode;
    std::set<std::string> seen;

    for (const Clause& clause : split_clauses(text)) {
        if (!seen.insert(clause.key).second) {
            throw ParseError("duplicate '" + clause.key + "' clause", clause.offset);
        }
        if (clause.key == "alphabet") {
            std::string letters;
            for (char c : clause.value) {
                if (!is_space(c)) {
                    letters.push_back(c);
                }
            }
            alphabet_letters = letters;
            alphabet_offset = clause.value_offset;
        } else if (clause.key == "pattern") {
            pattern_clause = clause;
        } else if (clause.key == "rel") {
            raw_constraints = RelScanner(clause.value, clause.value_offset).parse();
        } else if (clause.key == "mode") {
            try {
                mode = parse_mode(clause.value);
            } catch (const PreconditionError& e) {
                throw ParseError(e.what(), clause.value_offset);
            }
        } else {
            throw ParseError("unknown clause '" + clause.key + "'", clause.offset);
        }
    }
    if (!alphabet_letters) {
        throw ParseError("missing 'alphabet:' clause", 0);
    }
    if (!pattern_clause) {
        throw ParseError("missing 'pattern:' clause", text.size());
    }

    Alphabet alphabet;
    try {
        alphabet = Alphabet(*alphabet_letters);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), alphabet_offset);
    }

    SymbolString symbols;
    std::map<VarId, std::size_t> first_offset;
    std::string_view value = pattern_clause->value;
    std::size_t i = 0;
    while (i < value.size()) {
        if (is_space(value[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < value.size() && !is_space(value[i])) {
            ++i;
        }
        std::string_view token = value.substr(start, i - start);
        const std::size_t at = pattern_clause->value_offset + start;
        if (auto v = parse_variable_token(token)) {
            if (!first_offset.emplace(*v, at).second) {
                throw ParseError("variable " + std::string(token) + " is repeated in the pattern", at);
            }
            symbols.push_back(Symbol::variable(*v));
        } else if (token.size() == 1 && alphabet.contains(token[0])) {
            symbols.push_back(Symbol::terminal(token[0]));
        } else {
            throw ParseError("token '" + std::string(token) + "' is neither a letter of the alphabet nor x<int>", at);
        }
    }
    if (symbols.empty()) {
        throw ParseError("pattern must not be empty", pattern_clause->value_offset);
    }
    for (const RawConstraint& c : raw_constraints) {
        for (VarId v : {c.left, c.right}) {
            if (!first_offset.contains(v)) {
                throw ParseError("constraint variable x" + std::to_string(v) + " does not occur in the pattern",
                                 c.offset);
            }
        }
    }

    std::vector<std::string> warnings;
    std::map<VarId, VarId> rename;
    for (const Symbol& s : symbols) {
        if (s.is_variable()) {
            rename.emplace(s.var(), static_cast<VarId>(rename.size() + 1));
        }
    }
    const bool normal = std::all_of(rename.begin(), rename.end(), [](const auto& kv) { return kv.first == kv.second; });
    if (!normal) {
        warnings.push_back("variables renumbered to normal form (first occurrences x1, x2, ...)");
        for (Symbol& s : symbols) {
            if (s.is_variable()) {
                s = Symbol::variable(rename.at(s.var()));
            }
        }
    }
    std::set<Constraint> constraints;
    for (const RawConstraint& c : raw_constraints) {
        constraints.insert({c.kind, rename.at(c.left), rename.at(c.right)});
    }
    return {RelationalPattern(alphabet, Pattern(std::move(symbols)), std::move(constraints)), mode,
            std::move(warnings)};
}

RelationalPattern parse_relational_pattern(std::string_view text) { return parse_document(text).pattern; }

std::string format_symbols(const SymbolString& symbols) {
    std::string out;
    for (const Symbol& s : symbols) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        if (s.is_variable()) {
            out += "x" + std::to_string(s.var());
        } else {
            out.push_back(s.letter());
        }
    }
    return out;
}

std::string print_relational_pattern(const RelationalPattern& rp) {
    std::string out = "alphabet:" + rp.alphabet().letters() + "; pattern: " + format_symbols(rp.pattern().symbols());
    if (!rp.constraints().empty()) {
        out += "; rel: ";
        bool first = true;
        for (const Constraint& c : rp.constraints()) {
            if (!first) {
                out += ", ";
            }
            first = false;
            out += std::string(relation_name(c.kind)) + "(x" + std::to_string(c.left) + ",x" +
                   std::to_string(c.right) + ")";
        }
    }
    return out;
}

std::string print_document(const RelationalPattern& rp, std::optional<Mode> mode) {
    std::string out = print_relational_pattern(rp);
    if (mode) {
        out += "; mode: " + std::string(mode_name(*mode));
    }
    return out;
}

std::string format_substitution(const Substitution& h) {
    std::string out;
    for (const auto& [var, word] : h) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out += "x" + std::to_string(var) + "=" + word;
    }
    return out;
}

} // namespace relpat
