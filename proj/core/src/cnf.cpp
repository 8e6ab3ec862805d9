#include "relpat/cnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "relpat/errors.hpp"

namespace relpat {

CnfFormula::CnfFormula(std::uint32_t num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars_ == 0) {
        throw PreconditionError("a CNF formula needs at least one variable");
    }
    for (const Clause& clause : clauses_) {
        for (const Literal& l : clause) {
            if (l.var == 0 || l.var > num_vars_) {
                throw PreconditionError("literal variable " + std::to_string(l.var) + " outside 1.." +
                                        std::to_string(num_vars_));
            }
        }
    }
}

bool CnfFormula::has_distinct_clause_literals() const noexcept {
    return std::all_of(clauses_.begin(), clauses_.end(),
                       [](const Clause& c) { return c[0] != c[1] && c[0] != c[2] && c[1] != c[2]; });
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long long declared_vars = -1;
    long long declared_clauses = -1;
    std::vector<Clause> clauses;
    std::vector<Literal> current;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first[0] == 'c' || first[0] == '%') {
            continue;
        }
        if (first == "p") {
            std::string format;
            if (!(tokens >> format >> declared_vars >> declared_clauses) || format != "cnf" || declared_vars <= 0 ||
                declared_clauses < 0) {
                throw ParseError("malformed DIMACS header on line " + std::to_string(line_no), line_no);
            }
            continue;
        }
        if (declared_vars < 0) {
            throw ParseError("clause before the 'p cnf' header on line " + std::to_string(line_no), line_no);
        }
        std::istringstream values(line);
        long long lit = 0;
        while (values >> lit) {
            if (lit == 0) {
                if (current.empty()) {
                    throw ParseError("empty clause on line " + std::to_string(line_no), line_no);
                }
                if (current.size() > 3) {
                    throw ParseError("clause with more than 3 literals on line " + std::to_string(line_no), line_no);
                }
                while (current.size() < 3) {
                    current.push_back(current.back());
                }
                clauses.push_back({current[0], current[1], current[2]});
                current.clear();
                continue;
            }
            const long long var = lit < 0 ? -lit : lit;
            if (var > declared_vars) {
                throw ParseError("literal " + std::to_string(lit) + " exceeds the declared variable count", line_no);
            }
            current.push_back({static_cast<std::uint32_t>(var), lit < 0});
        }
        if (!values.eof()) {
            throw ParseError("non-numeric token on line " + std::to_string(line_no), line_no);
        }
    }
    if (declared_vars < 0) {
        throw ParseError("missing 'p cnf' header", 0);
    }
    if (!current.empty()) {
        throw ParseError("last clause is not terminated by 0", line_no);
    }
    if (static_cast<long long>(clauses.size()) != declared_clauses) {
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses but " +
                             std::to_string(clauses.size()) + " were given",
                         line_no);
    }
    return CnfFormula(static_cast<std::uint32_t>(declared_vars), std::move(clauses));
}

std::string print_dimacs(const CnfFormula& phi) {
    std::string out = "p cnf " + std::to_string(phi.num_vars()) + " " + std::to_string(phi.clauses().size()) + "\n";
    for (const Clause& c : phi.clauses()) {
        for (const Literal& l : c) {
            out += (l.negated ? "-" : "") + std::to_string(l.var) + " ";
        }
        out += "0\n";
    }
    return out;
}

bool evaluate(const CnfFormula& phi, std::uint64_t assignment_bits) {
    return std::all_of(phi.clauses().begin(), phi.clauses().end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
            const bool value = ((assignment_bits >> (l.var - 1)) & 1U) != 0;
            return value != l.negated;
        });
    });
}

bool sat_brute_force(const CnfFormula& phi) {
    if (phi.num_vars() > 24) {
        throw PreconditionError("sat_brute_force is limited to 24 variables");
    }
    const std::uint64_t limit = std::uint64_t{1} << phi.num_vars();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        if (evaluate(phi, bits)) {
            return true;
        }
    }
    return false;
}

CnfFormula random_cnf(std::mt19937_64& rng, std::uint32_t num_vars, std::size_t num_clauses, bool distinct_literals) {
    if (distinct_literals && num_vars < 2) {
        throw PreconditionError("three distinct literals per clause need at least 2 variables");
    }
    std::uniform_int_distribution<std::uint32_t> pick_var(1, num_vars);
    std::bernoulli_distribution pick_sign(0.5);
    std::vector<Clause> clauses;
    for (std::size_t j = 0; j < num_clauses; ++j) {
        Clause c{};
        for (std::size_t k = 0; k < 3; ++k) {
            Literal l{pick_var(rng), pick_sign(rng)};
            while (distinct_literals && std::find(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k), l) !=
                                            c.begin() + static_cast<std::ptrdiff_t>(k)) {
                l = {pick_var(rng), pick_sign(rng)};
            }
            c[k] = l;
        }
        clauses.push_back(c);
    }
    return CnfFormula(num_vars, std::move(clauses));
}

std::vector<CnfFormula> all_cnfs(std::uint32_t num_vars, std::size_t num_clauses, bool distinct_literals) {
    std::vector<Literal> literals;
    for (std::uint32_t v = 1; v <= num_vars; ++v) {
        literals.push_back({v, false});
        literals.push_back({v, true});
    }
    std::vector<Clause> clause_pool;
    for (std::size_t a = 0; a < literals.size(); ++a) {
        for (std::size_t b = a; b < literals.size(); ++b) {
            for (std::size_t c = b; c < literals.size(); ++c) {
                Clause clause{literals[a], literals[b], literals[c]};
                if (distinct_literals && (clause[0] == clause[1] || clause[1] == clause[2])) {
                    continue;
                }
                clause_pool.push_back(clause);
            }
        }
    }
    std::vector<CnfFormula> out;
    std::vector<std::size_t> pick(num_clauses, 0);
    if (num_clauses == 0 || clause_pool.empty()) {
        return out;
    }
    // Non-decreasing index sequences enumerate clause multisets.
    while (true) {
        std::vector<Clause> clauses;
        for (std::size_t i : pick) {
            clauses.push_back(clause_pool[i]);
        }
        out.emplace_back(num_vars, std::move(clauses));
        std::size_t k = num_clauses;
        while (k > 0 && pick[k - 1] + 1 == clause_pool.size()) {
            --k;
        }
        if (k == 0) {
            break;
        }
        ++pick[k - 1];
        for (std::size_t i = k; i < num_clauses; ++i) {
            pick[i] = pick[k - 1];
        }
    }
    return out;
}

} // namespace relpat
