#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace relpat {

struct Literal {
    std::uint32_t var; // 1-based
    bool negated = false;

    auto operator<=>(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

class CnfFormula {
public:
    CnfFormula(std::uint32_t num_vars, std::vector<Clause> clauses);

    std::uint32_t num_vars() const noexcept { return num_vars_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    // No clause lists the same literal twice; X and not-X may share a clause.
    bool has_distinct_clause_literals() const noexcept;

private:
    std::uint32_t num_vars_;
    std::vector<Clause> clauses_;
};

// DIMACS CNF; shorter clauses are padded by repeating their last literal.
CnfFormula parse_dimacs(std::string_view text);
std::string print_dimacs(const CnfFormula& phi);

bool evaluate(const CnfFormula& phi, std::uint64_t assignment_bits);
bool sat_brute_force(const CnfFormula& phi);

CnfFormula random_cnf(std::mt19937_64& rng, std::uint32_t num_vars, std::size_t num_clauses,
                      bool distinct_literals);
// Every formula with exactly num_vars variables and num_clauses clauses, clauses
// drawn from the given literal triples (multisets, so clause order is canonical).
std::vector<CnfFormula> all_cnfs(std::uint32_t num_vars, std::size_t num_clauses, bool distinct_literals);

} // namespace relpat
