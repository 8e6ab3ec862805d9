#include <doctest.h>

#include <random>

#include "relpat/relpat.hpp"

using namespace relpat;

namespace {

RelationalPattern rp(const char* text) { return parse_document(text).pattern; }

RelationalPattern raw(const SymbolString& s, std::vector<Constraint> cs) {
    return RelationalPattern(Alphabet("ab"), Pattern(s), cs);
}

} // namespace

TEST_SUITE("equivalence") {

TEST_CASE("disjoint sets") {
    DisjointSet d(5);
    d.unite(0, 1);
    d.unite(3, 4);
    d.unite(1, 4);
    CHECK(d.find(0) == d.find(3));
    CHECK(d.find(2) != d.find(0));
}

TEST_CASE("closure examples") {
    auto p = rp("alphabet:ab; pattern: x1 x2 x3; rel: eq(x1,x2), eq(x2,x3)");
    CHECK(closure(p).blocks == std::vector<std::vector<VarId>>{{1, 2, 3}});
    p = rp("alphabet:ab; pattern: x1 x2");
    CHECK(closure(p).blocks == std::vector<std::vector<VarId>>{{1}, {2}});
    p = rp("alphabet:ab; pattern: x1 x2; rel: ab(x2,x1)");
    CHECK(closure(p).blocks == std::vector<std::vector<VarId>>{{1, 2}});
    CHECK_THROWS_AS(closure(rp("alphabet:ab; pattern: x1 x2 x3; rel: eq(x1,x2), ab(x2,x3)")), PreconditionError);
}

TEST_CASE("normalize renames by first occurrence") {
    const auto odd = raw({Symbol::variable(7), Symbol::terminal('a'), Symbol::variable(2)}, {{RelationKind::Eq, 2, 7}});
    const auto n = normalize(odd);
    CHECK(print_relational_pattern(n) == "alphabet:ab; pattern: x1 a x2; rel: eq(x2,x1)");
    CHECK(normalize(n) == n);
    CHECK(bounded_equal(odd, n, Mode::Erasing, 6));
}

TEST_CASE("decider examples") {
    const auto a = rp("alphabet:ab; pattern: x1 a x2; rel: ab(x1,x2)");
    const auto b = rp("alphabet:ab; pattern: x1 a x2");
    CHECK(ne_equivalent(a, a));
    const auto e1 = rp("alphabet:ab; pattern: x1 a x2; rel: eq(x1,x2)");
    const auto e2 = rp("alphabet:ab; pattern: x1 a x2; rel: eq(x2,x1)");
    CHECK(ne_equivalent(e1, e2));
    const auto e3 = rp("alphabet:ab; pattern: x1 a x2");
    CHECK_FALSE(ne_equivalent(e1, e3));
    CHECK(enumerate_language(e3, Mode::NonErasing, 3).words.contains("aab"));
    CHECK_FALSE(enumerate_language(e1, Mode::NonErasing, 3).words.contains("aab"));
}

TEST_CASE("an unconstrained pattern is compared against any kind") {
    const auto a = rp("alphabet:ab; pattern: x1 a x2; rel: ab(x1,x2)");
    const auto b = rp("alphabet:ab; pattern: x1 a x2");
    CHECK_FALSE(ne_equivalent(a, b));
    CHECK(ne_equivalent(b, b));
}

TEST_CASE("preconditions") {
    const auto rev = rp("alphabet:ab; pattern: x1 x2; rel: rev(x1,x2)");
    const auto len = rp("alphabet:ab; pattern: x1 x2; rel: len(x1,x2)");
    CHECK_THROWS_AS(ne_equivalent(rev, rev), PreconditionError);
    CHECK_THROWS_AS(ne_equivalent(len, len), PreconditionError);
    const auto unary = rp("alphabet:a; pattern: x1 x2; rel: eq(x1,x2)");
    CHECK_THROWS_AS(ne_equivalent(unary, unary), PreconditionError);
    const auto e = rp("alphabet:ab; pattern: x1 x2; rel: eq(x1,x2)");
    const auto ab = rp("alphabet:ab; pattern: x1 x2; rel: ab(x1,x2)");
    CHECK_THROWS_AS(ne_equivalent(e, ab), PreconditionError);
}

TEST_CASE("decider is an equivalence relation on samples") {
    std::mt19937_64 rng(41);
    PatternShape shape;
    shape.kinds = {RelationKind::Eq};
    shape.max_terminals = 1;
    shape.max_vars = 2;
    std::vector<RelationalPattern> pool;
    for (int i = 0; i < 40; ++i) {
        pool.push_back(random_relational_pattern(rng, shape));
    }
    for (const auto& a : pool) {
        CHECK(ne_equivalent(a, a));
        for (const auto& b : pool) {
            const bool ab = ne_equivalent(a, b);
            CHECK(ab == ne_equivalent(b, a));
            if (!ab) {
                continue;
            }
            for (const auto& c : pool) {
                if (ne_equivalent(b, c)) {
                    CHECK(ne_equivalent(a, c));
                }
            }
        }
    }
}

TEST_CASE("decider agrees with bounded equality") {
    std::mt19937_64 rng(42);
    for (RelationKind k : {RelationKind::Eq, RelationKind::AbelianEq, RelationKind::ComPlus}) {
        PatternShape shape;
        shape.kinds = {k};
        shape.max_vars = 3;
        shape.max_terminals = 2;
        shape.max_constraints = 3;
        for (int i = 0; i < 80; ++i) {
            const auto a = random_relational_pattern(rng, shape);
            const auto b = i % 2 ? saturate(a) : random_relational_pattern(rng, shape);
            const std::size_t n = std::max(a.pattern().size(), b.pattern().size()) + 3;
            CHECK(ne_equivalent(a, b) == bounded_equal(a, b, Mode::NonErasing, n));
        }
    }
}

}
