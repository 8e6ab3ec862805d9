#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relpat/relpat.hpp"

using namespace relpat;

namespace {

const RelationalPattern& intro_alpha() {
    static const RelationalPattern rp = parse_document("alphabet:ab; pattern: x1 a a x3 b x2; rel: eq(x1,x3)").pattern;
    return rp;
}

const RelationalPattern& intro_beta() {
    static const RelationalPattern rp = parse_relational_pattern("alphabet:abc; pattern: x1 c c x2; rel: rev(x1,x2)");
    return rp;
}

} // namespace

TEST_SUITE("semantics") {

TEST_CASE("apply on the introduction's alpha") {
    // After renumbering, alpha reads x1 a a x2 b x3 with eq(x1,x2).
    CHECK(relpat::apply({{1, "bb"}, {2, "bb"}, {3, "a"}}, intro_alpha()) == "bbaabbba");
    CHECK(relpat::apply({{1, ""}, {2, ""}, {3, ""}}, intro_alpha()) == "aab");
    const auto ab = parse_relational_pattern("alphabet:ab; pattern: a b");
    CHECK(relpat::apply({}, ab) == "ab");
    CHECK_THROWS(relpat::apply({{1, "a"}}, intro_alpha()));
}

TEST_CASE("validity") {
    CHECK(is_valid({{1, "ab"}, {2, "ba"}}, intro_beta(), Mode::NonErasing));
    CHECK_FALSE(is_valid({{1, "ab"}, {2, "ab"}}, intro_beta(), Mode::NonErasing));
    const auto free = parse_relational_pattern("alphabet:ab; pattern: x1 x2");
    CHECK(is_valid({{1, ""}, {2, ""}}, free, Mode::Erasing));
    CHECK_FALSE(is_valid({{1, ""}, {2, "a"}}, free, Mode::NonErasing));
}

TEST_CASE("enumeration examples") {
    CHECK(enumerate_language(intro_beta(), Mode::NonErasing, 4).words == std::set<Word>{"acca", "bccb", "cccc"});
    const auto ab = parse_relational_pattern("alphabet:ab; pattern: a b");
    CHECK(enumerate_language(ab, Mode::Erasing, 5).words == std::set<Word>{"ab"});
    CHECK(enumerate_language(ab, Mode::NonErasing, 1).words.empty());
    const auto x = parse_relational_pattern("alphabet:a; pattern: x1");
    CHECK(enumerate_language(x, Mode::Erasing, 1).words == std::set<Word>{"", "a"});
}

TEST_CASE("the node budget is enforced") {
    const auto rp = parse_relational_pattern("alphabet:ab; pattern: x1 x2 x3 x4");
    EnumerationOptions tight;
    tight.node_budget = 100;
    CHECK_THROWS_AS(enumerate_language(rp, Mode::Erasing, 10, tight), ResourceLimitError);
}

TEST_CASE("enumeration agrees with naive substitution search") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        PatternShape shape;
        shape.kinds = {all_relation_kinds[i % all_relation_kinds.size()]};
        const RelationalPattern rp = random_relational_pattern(rng, shape);
        for (Mode mode : {Mode::Erasing, Mode::NonErasing}) {
            const auto fast = enumerate_language(rp, mode, 5).words;
            const auto slow = oracle::naive_language(rp, mode, 5);
            if (fast != slow) {
                FAIL_CHECK(print_document(rp, mode));
            }
        }
    }
}

TEST_CASE("NE slice is inside the E slice") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const RelationalPattern rp = random_relational_pattern(rng, PatternShape{});
        const auto e = enumerate_language(rp, Mode::Erasing, 6).words;
        for (const Word& w : enumerate_language(rp, Mode::NonErasing, 6).words) {
            CHECK(e.contains(w));
        }
    }
}

TEST_CASE("constraint-free patterns give the classical language") {
    std::mt19937_64 rng(13);
    PatternShape shape;
    shape.max_constraints = 0;
    for (int i = 0; i < 100; ++i) {
        const RelationalPattern rp = random_relational_pattern(rng, shape);
        for (Mode mode : {Mode::Erasing, Mode::NonErasing}) {
            const auto lang = enumerate_language(rp, mode, 6).words;
            for (const Word& w : all_words("ab", 6)) {
                CHECK(lang.contains(w) == oracle::regex_member(rp.pattern(), w, mode));
            }
        }
    }
}

TEST_CASE("bounded inclusion and equality") {
    const auto ssq = parse_relational_pattern("alphabet:ab; pattern: x1 x2; rel: ssq(x1,x2), ssq(x2,x1)");
    const auto eq = parse_relational_pattern("alphabet:ab; pattern: x1 x2; rel: eq(x1,x2)");
    CHECK(bounded_included(ssq, eq, Mode::NonErasing, 6));
    CHECK(bounded_included(eq, ssq, Mode::NonErasing, 6));
    CHECK(bounded_equal(ssq, ssq, Mode::NonErasing, 6));

    const auto x = parse_relational_pattern("alphabet:ab; pattern: x1");
    const auto a = parse_relational_pattern("alphabet:ab; pattern: a");
    CHECK_FALSE(bounded_included(x, a, Mode::Erasing, 2));
    const auto cx = inclusion_counterexample(x, a, Mode::Erasing, 2);
    REQUIRE(cx.has_value());
    CHECK(*cx != "a");

    const auto loose = parse_relational_pattern("alphabet:ab; pattern: x1 a a x2 b x3");
    CHECK_FALSE(bounded_equal(intro_alpha(), loose, Mode::NonErasing, 8));

    const auto renamed = parse_document("alphabet:ab; pattern: x4 a a x9 b x2; rel: eq(x4,x9)").pattern;
    CHECK(bounded_equal(intro_alpha(), renamed, Mode::Erasing, 7));
}

TEST_CASE("closure saturation keeps NE languages for the equivalence kinds") {
    std::mt19937_64 rng(14);
    for (RelationKind k : {RelationKind::Eq, RelationKind::AbelianEq, RelationKind::ComPlus}) {
        PatternShape shape;
        shape.kinds = {k};
        shape.max_constraints = 3;
        for (int i = 0; i < 60; ++i) {
            const RelationalPattern rp = random_relational_pattern(rng, shape);
            const std::size_t n = rp.pattern().size() + 3;
            CHECK(enumerate_language(rp, Mode::NonErasing, n).words ==
                  enumerate_language(saturate(rp), Mode::NonErasing, n).words);
        }
    }
}

}
