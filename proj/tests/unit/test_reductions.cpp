#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "relpat/relpat.hpp"

using namespace relpat;

namespace {

CnfFormula single_positive() { return CnfFormula(1, {Clause{Literal{1}, Literal{1}, Literal{1}}}); }

CnfFormula contradiction() {
    return CnfFormula(1, {Clause{Literal{1}, Literal{1}, Literal{1}},
                          Clause{Literal{1, true}, Literal{1, true}, Literal{1, true}}});
}

std::size_t count_factor(const Word& w, const std::string& f) {
    std::size_t n = 0;
    for (std::size_t at = w.find(f); at != Word::npos; at = w.find(f, at + f.size())) {
        ++n;
    }
    return n;
}

} // namespace

TEST_SUITE("sat-reductions") {

TEST_CASE("dimacs round trip and padding") {
    const CnfFormula phi = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 0\n");
    CHECK(phi.num_vars() == 3);
    REQUIRE(phi.clauses().size() == 2);
    CHECK(phi.clauses()[1][2] == Literal{2, false});
    const CnfFormula again = parse_dimacs(print_dimacs(phi));
    CHECK(again.clauses() == phi.clauses());
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 -1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
}

TEST_CASE("brute force satisfiability") {
    CHECK(sat_brute_force(CnfFormula(1, {Clause{Literal{1}, Literal{1}, Literal{1, true}}})));
    CHECK_FALSE(sat_brute_force(contradiction()));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const CnfFormula phi = random_cnf(rng, 1 + rng() % 5, 1 + rng() % 8, false);
        CHECK(sat_brute_force(phi) == oracle::sat_truth_table(phi));
    }
}

TEST_CASE("exhaustive generation counts") {
    // Clauses are multisets of 3 literals over 2m literals; formulas are multisets of clauses.
    CHECK(all_cnfs(1, 1, false).size() == 4);
    CHECK(all_cnfs(2, 1, false).size() == 20);
    CHECK(all_cnfs(2, 2, false).size() == 210);
    CHECK(all_cnfs(1, 1, true).empty());
    CHECK(all_cnfs(2, 1, true).size() == 4);
    CHECK(all_cnfs(2, 2, true).size() == 10);
}

TEST_CASE("distinct literals") {
    std::mt19937_64 rng(4);
    CHECK_FALSE(single_positive().has_distinct_clause_literals());
    CHECK(CnfFormula(2, {Clause{Literal{1}, Literal{1, true}, Literal{2}}}).has_distinct_clause_literals());
    CHECK_THROWS_AS(random_cnf(rng, 1, 1, true), PreconditionError);
    for (int i = 0; i < 100; ++i) {
        CHECK(random_cnf(rng, 2 + rng() % 3, 1 + rng() % 5, true).has_distinct_clause_literals());
    }
    CHECK(requires_distinct_literals(ReductionVariant::CommuteNE));
    CHECK(requires_distinct_literals(ReductionVariant::ComStarE));
    CHECK_FALSE(requires_distinct_literals(ReductionVariant::AngluinNE));
}

TEST_CASE("commutation instances with distinct literals") {
    std::mt19937_64 rng(5);
    MatchOptions budget;
    budget.node_budget = 5'000'000;
    for (ReductionVariant v : {ReductionVariant::CommuteNE, ReductionVariant::ComPlusE, ReductionVariant::ComStarE}) {
        for (RelationKind k : supported_kinds(v)) {
            for (int i = 0; i < 15; ++i) {
                const CnfFormula phi = random_cnf(rng, 2 + rng() % 3, 1 + rng() % 4, true);
                INFO(variant_name(v), " ", relation_name(k), "\n", print_dimacs(phi));
                CHECK(verify_reduction(v, k, phi, budget));
            }
        }
    }
}

TEST_CASE("documented words") {
    CHECK(generate(ReductionVariant::AngluinNE, RelationKind::Eq, single_positive()).word == "#111#1111111#1111#");
    CHECK(generate(ReductionVariant::JiangE, RelationKind::Eq, single_positive()).word == "#1#1111111#11#");
    const std::string t = std::string(10, '1') + "#" + std::string(10, '1') + "#" + std::string(10, '1');
    CHECK(generate(ReductionVariant::CommuteNE, single_positive()).word == "##1#1##" + t + "##");
}

TEST_CASE("modes and alphabets") {
    for (ReductionVariant v : all_reduction_variants) {
        const ReductionInstance inst = generate(v, single_positive());
        CHECK(inst.rp.alphabet().letters() == "1#");
        const std::string name(variant_name(v));
        CHECK(inst.mode == (name.ends_with("-ne") ? Mode::NonErasing : Mode::Erasing));
        CHECK(variant_from_name(name) == v);
    }
    CHECK_THROWS_AS(generate(ReductionVariant::AngluinNE, RelationKind::ComPlus, single_positive()),
                    PreconditionError);
}

TEST_CASE("structural separators") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        const std::uint32_t m = 1 + rng() % 4;
        const std::size_t n = 1 + rng() % 4;
        const CnfFormula phi = random_cnf(rng, m, n, false);
        const Word angluin = generate(ReductionVariant::AngluinNE, phi).word;
        CHECK(static_cast<std::size_t>(std::count(angluin.begin(), angluin.end(), '#')) == m + 2 * n + 1);
        const ReductionInstance commute = generate(ReductionVariant::CommuteNE, phi);
        CHECK(count_factor(commute.word, "##") == m + n + 1);
        std::string terminals;
        for (const Symbol& s : commute.rp.pattern().symbols()) {
            terminals += s.is_terminal() ? s.letter() : ' ';
        }
        CHECK(count_factor(terminals, "##") == m + n + 1);
    }
}

TEST_CASE("one-sided star NE uses 1^6 clause blocks") {
    const Word w = generate(ReductionVariant::OneSidedStarNE, single_positive()).word;
    CHECK(w.find(std::string(6, '1')) != Word::npos);
    CHECK(w.find(std::string(7, '1')) == Word::npos);
}

TEST_CASE("soundness on small formulas for every variant and kind") {
    for (ReductionVariant v : all_reduction_variants) {
        for (RelationKind k : supported_kinds(v)) {
            for (const CnfFormula& phi : all_cnfs(1, 2, false)) {
                const ReductionInstance inst = generate(v, k, phi);
                if (match(inst.word, inst.rp, inst.mode).has_value() != oracle::sat_truth_table(phi)) {
                    FAIL_CHECK(variant_name(v) << "/" << relation_name(k) << "\n" << print_dimacs(phi));
                }
            }
            CHECK(verify_reduction(v, k, contradiction()));
        }
    }
}

TEST_CASE("satisfiable and unsatisfiable seeds") {
    const ReductionInstance sat = generate(ReductionVariant::AngluinNE, single_positive());
    CHECK(match(sat.word, sat.rp, sat.mode).has_value());
    const ReductionInstance unsat = generate(ReductionVariant::JiangE, contradiction());
    CHECK_FALSE(match(unsat.word, unsat.rp, unsat.mode).has_value());
}

}
