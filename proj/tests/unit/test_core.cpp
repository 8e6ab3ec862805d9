#include <doctest.h>

#include <random>

#include "relpat/relpat.hpp"

using namespace relpat;

TEST_SUITE("core") {

TEST_CASE("alphabet rejects reserved and repeated letters") {
    CHECK(Alphabet("01#").size() == 3);
    CHECK_THROWS_AS(Alphabet(""), PreconditionError);
    CHECK_THROWS_AS(Alphabet("aa"), PreconditionError);
    CHECK_THROWS_AS(Alphabet("ax"), PreconditionError);
    CHECK_THROWS_AS(Alphabet("a;"), PreconditionError);
    CHECK(Alphabet("ab").same_letters(Alphabet("ba")));
    CHECK_FALSE(Alphabet("ab") == Alphabet("ba"));
}

TEST_CASE("patterns keep each variable once") {
    const SymbolString ok{Symbol::variable(1), Symbol::terminal('a'), Symbol::variable(2)};
    Pattern p(ok);
    CHECK(p.variable_count() == 2);
    CHECK(p.terminal_count() == 1);
    CHECK(p.is_normal());
    CHECK_THROWS_AS(Pattern(SymbolString{Symbol::variable(1), Symbol::variable(1)}), PreconditionError);
    CHECK_THROWS_AS(Pattern(SymbolString{}), PreconditionError);
    CHECK_FALSE(Pattern(SymbolString{Symbol::variable(2), Symbol::variable(1)}).is_normal());
}

TEST_CASE("constraints must mention pattern variables") {
    const Pattern p(SymbolString{Symbol::variable(1), Symbol::variable(2)});
    CHECK_NOTHROW(RelationalPattern(Alphabet("ab"), p, std::vector<Constraint>{{RelationKind::Eq, 1, 2}}));
    CHECK_THROWS_AS(RelationalPattern(Alphabet("ab"), p, std::vector<Constraint>{{RelationKind::Eq, 1, 3}}), PreconditionError);
    CHECK_THROWS_AS(RelationalPattern(Alphabet("a"), Pattern(SymbolString{Symbol::terminal('b')})),
                    PreconditionError);
}

TEST_CASE("parse the introduction's beta") {
    const auto rp = parse_relational_pattern("alphabet:abc; pattern: x1 c c x2; rel: rev(x1,x2)");
    CHECK(rp.alphabet().letters() == "abc");
    CHECK(rp.pattern().size() == 4);
    REQUIRE(rp.constraints().size() == 1);
    const Constraint c = *rp.constraints().begin();
    CHECK(c.kind == RelationKind::Reversal);
    CHECK(c.left == 1);
    CHECK(c.right == 2);
    CHECK(print_relational_pattern(rp) == "alphabet:abc; pattern: x1 c c x2; rel: rev(x1,x2)");
}

TEST_CASE("terminal-only pattern has no constraints and no rel clause") {
    const auto rp = parse_relational_pattern("alphabet:ab; pattern: a b");
    CHECK(rp.constraints().empty());
    CHECK(rp.pattern().variable_count() == 0);
    CHECK(print_relational_pattern(rp) == "alphabet:ab; pattern: a b");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_relational_pattern("alphabet:ab; pattern: x1 x1"), ParseError);
    CHECK_THROWS_AS(parse_relational_pattern("alphabet:ab; pattern: x1 x2; rel: foo(x1,x2)"), ParseError);
    CHECK_THROWS_AS(parse_relational_pattern("alphabet:ab; pattern: x1; rel: eq(x1,x2)"), ParseError);
    CHECK_THROWS_AS(parse_relational_pattern("alphabet:ab; pattern: x1 c"), ParseError);
    CHECK_THROWS_AS(parse_relational_pattern("pattern: x1"), ParseError);
    CHECK_THROWS_AS(parse_relational_pattern("alphabet:ab; pattern:"), ParseError);
    try {
        parse_relational_pattern("alphabet:ab; pattern: x1 x2; rel: bogus(x1,x2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("constraint direction is data") {
    const auto rp = parse_relational_pattern("alphabet:ab; pattern: x1 x2; rel: eq(x2,x1), eq(x2,x1)");
    CHECK(rp.constraints().size() == 1);
    CHECK(print_relational_pattern(rp) == "alphabet:ab; pattern: x1 x2; rel: eq(x2,x1)");
}

TEST_CASE("non-normal input is renumbered with a warning") {
    const auto doc = parse_document("alphabet:ab\npattern: x7 a x2\nrel: ab(x2,x7)\nmode: NE\n");
    CHECK(doc.warnings.size() == 1);
    CHECK(doc.mode == Mode::NonErasing);
    CHECK(print_relational_pattern(doc.pattern) == "alphabet:ab; pattern: x1 a x2; rel: ab(x2,x1)");
}

TEST_CASE("print_document writes the mode clause") {
    const auto rp = parse_relational_pattern("alphabet:ab; pattern: x1 a");
    const auto doc = parse_document(print_document(rp, Mode::Erasing));
    CHECK(doc.mode == Mode::Erasing);
    CHECK(doc.pattern == rp);
}

TEST_CASE("parse inverts print on random patterns") {
    std::mt19937_64 rng(5);
    PatternShape shape;
    shape.alphabet = "01#";
    shape.max_vars = 5;
    shape.max_constraints = 4;
    shape.single_kind = false;
    for (int i = 0; i < 300; ++i) {
        const RelationalPattern rp = random_relational_pattern(rng, shape);
        const ParsedDocument doc = parse_document(print_relational_pattern(rp));
        CHECK(doc.warnings.empty());
        CHECK(doc.pattern == rp);
    }
}

TEST_CASE("substitution formatting") {
    CHECK(format_substitution({{1, "ab"}, {2, "ba"}}) == "x1=ab x2=ba");
    CHECK(format_substitution({{1, ""}}) == "x1=");
}

TEST_CASE("pattern builder") {
    PatternBuilder b;
    const VarId x = b.append_fresh();
    b.append_word("ab");
    const VarId y = b.append_fresh();
    b.relate(RelationKind::Reversal, x, y);
    const RelationalPattern rp = b.build(Alphabet("ab"));
    CHECK(print_relational_pattern(rp) == "alphabet:ab; pattern: x1 a b x2; rel: rev(x1,x2)");
}

}
