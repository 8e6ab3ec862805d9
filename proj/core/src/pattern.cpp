#include "relpat/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "relpat/errors.hpp"

namespace relpat {

Pattern::Pattern(SymbolString symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw PreconditionError("pattern must not be empty");
    }
    std::unordered_set<VarId> seen;
    for (const Symbol& s : symbols_) {
        if (!s.is_variable()) {
            continue;
        }
        if (s.var() == 0) {
            throw PreconditionError("variable indices start at 1");
        }
        if (!seen.insert(s.var()).second) {
            throw PreconditionError("variable x" + std::to_string(s.var()) + " occurs more than once");
        }
    }
}

std::vector<VarId> Pattern::variables() const {
    std::vector<VarId> out;
    for (const Symbol& s : symbols_) {
        if (s.is_variable()) {
            out.push_back(s.var());
        }
    }
    return out;
}

std::size_t Pattern::variable_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.is_variable(); }));
}

std::size_t Pattern::terminal_count() const noexcept { return symbols_.size() - variable_count(); }

bool Pattern::contains_variable(VarId id) const noexcept {
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [id](const Symbol& s) { return s.is_variable() && s.var() == id; });
}

bool Pattern::is_normal() const noexcept {
    VarId expected = 1;
    for (const Symbol& s : symbols_) {
        if (s.is_variable()) {
            if (s.var() != expected) {
                return false;
            }
            ++expected;
        }
    }
    return true;
}

RelationalPattern::RelationalPattern(Alphabet alphabet, Pattern pattern, std::set<Constraint> constraints)
    : alphabet_(std::move(alphabet)), pattern_(std::move(pattern)), constraints_(std::move(constraints)) {
    if (alphabet_.size() == 0) {
        throw PreconditionError("relational pattern needs a non-empty alphabet");
    }
    for (const Symbol& s : pattern_.symbols()) {
        if (s.is_terminal() && !alphabet_.contains(s.letter())) {
            throw PreconditionError(std::string("terminal '") + s.letter() + "' is not in the alphabet");
        }
    }
    std::unordered_set<VarId> present;
    for (const Symbol& s : pattern_.symbols()) {
        if (s.is_variable()) {
            present.insert(s.var());
        }
    }
    for (const Constraint& c : constraints_) {
        for (VarId v : {c.left, c.right}) {
            if (!present.contains(v)) {
                throw PreconditionError("constraint mentions x" + std::to_string(v) +
                                        ", which does not occur in the pattern");
            }
        }
    }
}

RelationalPattern::RelationalPattern(Alphabet alphabet, Pattern pattern, const std::vector<Constraint>& constraints)
    : RelationalPattern(std::move(alphabet), std::move(pattern),
                        std::set<Constraint>(constraints.begin(), constraints.end())) {}

std::string_view mode_name(Mode mode) noexcept { return mode == Mode::Erasing ? "E" : "NE"; }

Mode parse_mode(std::string_view text) {
    std::string lower;
    for (char c : text) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (lower == "e" || lower == "erasing") {
        return Mode::Erasing;
    }
    if (lower == "ne" || lower == "non-erasing" || lower == "nonerasing") {
        return Mode::NonErasing;
    }
    throw PreconditionError("unknown mode '" + std::string(text) + "' (expected E or NE)");
}

VarId PatternBuilder::fresh() { return next_++; }

VarId PatternBuilder::append_fresh() {
    VarId id = fresh();
    symbols_.push_back(Symbol::variable(id));
    return id;
}

PatternBuilder& PatternBuilder::append(VarId id) {
    symbols_.push_back(Symbol::variable(id));
    return *this;
}

PatternBuilder& PatternBuilder::append_terminal(char letter, std::size_t count) {
    symbols_.insert(symbols_.end(), count, Symbol::terminal(letter));
    return *this;
}

PatternBuilder& PatternBuilder::append_word(std::string_view word) {
    for (char c : word) {
        symbols_.push_back(Symbol::terminal(c));
    }
    return *this;
}

PatternBuilder& PatternBuilder::relate(RelationKind kind, VarId left, VarId right) {
    constraints_.push_back({kind, left, right});
    return *this;
}

RelationalPattern PatternBuilder::build(const Alphabet& alphabet) const {
    return RelationalPattern(alphabet, Pattern(symbols_), constraints_);
}

} // namespace relpat
