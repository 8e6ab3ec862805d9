#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "relpat/alphabet.hpp"
#include "relpat/relations.hpp"

namespace relpat {

using VarId = std::uint32_t;

class Symbol {
public:
    static Symbol terminal(char letter) noexcept { return Symbol(false, letter, 0); }
    static Symbol variable(VarId id) noexcept { return Symbol(true, '\0', id); }

    bool is_variable() const noexcept { return is_var_; }
    bool is_terminal() const noexcept { return !is_var_; }
    char letter() const noexcept { return letter_; }
    VarId var() const noexcept { return var_; }

    auto operator<=>(const Symbol&) const = default;

private:
    Symbol(bool is_var, char letter, VarId var) noexcept : is_var_(is_var), letter_(letter), var_(var) {}

    bool is_var_;
    char letter_;
    VarId var_;
};

using SymbolString = std::vector<Symbol>;

// A regular pattern: non-empty, every variable at most once.
class Pattern {
public:
    explicit Pattern(SymbolString symbols);

    const SymbolString& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    std::vector<VarId> variables() const;
    std::size_t variable_count() const noexcept;
    std::size_t terminal_count() const noexcept;
    bool contains_variable(VarId id) const noexcept;
    // First occurrences are x1, x2, ... without gaps.
    bool is_normal() const noexcept;

    bool operator==(const Pattern&) const = default;

private:
    SymbolString symbols_;
};

struct Constraint {
    RelationKind kind;
    VarId left;
    VarId right;

    auto operator<=>(const Constraint&) const = default;
};

enum class Mode : std::uint8_t { Erasing, NonErasing };

using Substitution = std::map<VarId, Word>;

class RelationalPattern {
public:
    RelationalPattern(Alphabet alphabet, Pattern pattern, std::set<Constraint> constraints = {});
    RelationalPattern(Alphabet alphabet, Pattern pattern, const std::vector<Constraint>& constraints);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Pattern& pattern() const noexcept { return pattern_; }
    const std::set<Constraint>& constraints() const noexcept { return constraints_; }

    bool operator==(const RelationalPattern&) const = default;

private:
    Alphabet alphabet_;
    Pattern pattern_;
    std::set<Constraint> constraints_;
};

std::string_view mode_name(Mode mode) noexcept;
Mode parse_mode(std::string_view text);

// Builds symbol strings with fresh variables allocated in order of appearance,
// which keeps generated patterns in normal form.
class PatternBuilder {
public:
    VarId fresh();
    VarId append_fresh();
    PatternBuilder& append(VarId id);
    PatternBuilder& append_terminal(char letter, std::size_t count = 1);
    PatternBuilder& append_word(std::string_view word);
    PatternBuilder& relate(RelationKind kind, VarId left, VarId right);

    const SymbolString& symbols() const noexcept { return symbols_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    RelationalPattern build(const Alphabet& alphabet) const;

private:
    VarId next_ = 1;
    SymbolString symbols_;
    std::vector<Constraint> constraints_;
};

} // namespace relpat
