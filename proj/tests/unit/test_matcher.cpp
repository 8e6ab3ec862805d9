#include <doctest.h>

#include <random>

#include "relpat/relpat.hpp"

using namespace relpat;

namespace {

SymbolString vars(std::initializer_list<VarId> ids) {
    SymbolString s;
    for (VarId id : ids) {
        s.push_back(Symbol::variable(id));
    }
    return s;
}

} // namespace

TEST_SUITE("matcher") {

TEST_CASE("introduction examples") {
    const auto beta = parse_relational_pattern("alphabet:abc; pattern: x1 c c x2; rel: rev(x1,x2)");
    auto h = match("abccba", beta, Mode::NonErasing);
    REQUIRE(h.has_value());
    CHECK(h->at(1) == "ab");
    CHECK(h->at(2) == "ba");
    CHECK_FALSE(match("abccab", beta, Mode::NonErasing).has_value());

    const auto alpha = parse_document("alphabet:ab; pattern: x1 a a x3 b x2; rel: eq(x1,x3)").pattern;
    h = match("aab", alpha, Mode::Erasing);
    REQUIRE(h.has_value());
    for (const auto& [var, image] : *h) {
        CHECK(image.empty());
    }
    CHECK_FALSE(match("aab", alpha, Mode::NonErasing).has_value());
    CHECK(match("bbaabbba", alpha, Mode::NonErasing).has_value());
}

TEST_CASE("words outside the alphabet never match") {
    const auto rp = parse_relational_pattern("alphabet:ab; pattern: x1");
    CHECK_FALSE(match("abc", rp, Mode::Erasing).has_value());
}

TEST_CASE("systems of equations") {
    MatchProblem p;
    p.mode = Mode::NonErasing;
    p.equations = {{vars({1, 2}), "ab"}, {vars({2, 1}), "ba"}};
    auto h = solve_system(p);
    REQUIRE(h.has_value());
    CHECK(h->at(1) == "a");
    CHECK(h->at(2) == "b");

    MatchProblem q;
    q.equations = {{vars({1}), "a"}, {vars({2}), "b"}};
    q.constraints = {{RelationKind::Eq, 1, 2}};
    CHECK_FALSE(solve_system(q).has_value());

    MatchProblem shared;
    shared.mode = Mode::Erasing;
    shared.equations = {{vars({1, 2}), "aab"}, {vars({3}), "aa"}};
    shared.constraints = {{RelationKind::Eq, 1, 3}};
    h = solve_system(shared);
    REQUIRE(h.has_value());
    CHECK(h->at(1) == "aa");
    CHECK(h->at(2) == "b");
}

TEST_CASE("witness counts") {
    const auto beta = parse_relational_pattern("alphabet:abc; pattern: x1 c c x2; rel: rev(x1,x2)");
    CHECK(count_witnesses("abccba", beta, Mode::NonErasing, 100) == 1);
    const auto ab = parse_relational_pattern("alphabet:ab; pattern: a b");
    CHECK(count_witnesses("ab", ab, Mode::Erasing, 100) == 1);
    const auto xy = parse_relational_pattern("alphabet:ab; pattern: x1 x2");
    CHECK(count_witnesses("aa", xy, Mode::Erasing, 100) == 3);
    CHECK(count_witnesses("aa", xy, Mode::Erasing, 2) == 2);
    CHECK(count_witnesses("aa", xy, Mode::NonErasing, 100) == 1);
}

TEST_CASE("witnesses are sound and searches are deterministic") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        PatternShape shape;
        shape.kinds = {all_relation_kinds[i % all_relation_kinds.size()]};
        const RelationalPattern rp = random_relational_pattern(rng, shape);
        const Mode mode = i % 2 ? Mode::Erasing : Mode::NonErasing;
        for (const Word& w : all_words("ab", 6)) {
            auto h = match(w, rp, mode);
            if (h) {
                CHECK(relpat::apply(*h, rp) == w);
                CHECK(is_valid(*h, rp, mode));
                CHECK(match(w, rp, mode) == h);
            }
        }
    }
}

TEST_CASE("pruning never changes a verdict") {
    std::mt19937_64 rng(22);
    MatchOptions plain;
    plain.pruning = false;
    for (int i = 0; i < 300; ++i) {
        PatternShape shape;
        shape.kinds = {all_relation_kinds[i % all_relation_kinds.size()]};
        const RelationalPattern rp = random_relational_pattern(rng, shape);
        const Mode mode = i % 2 ? Mode::Erasing : Mode::NonErasing;
        for (const Word& w : all_words("ab", 6)) {
            CHECK(match(w, rp, mode).has_value() == match(w, rp, mode, plain).has_value());
        }
    }
}

TEST_CASE("witness counts do not depend on pruning") {
    std::mt19937_64 rng(24);
    MatchOptions plain;
    plain.pruning = false;
    MatchOptions eager;
    eager.memo_after_nodes = 0;
    for (int i = 0; i < 200; ++i) {
        PatternShape shape;
        shape.kinds = {all_relation_kinds[i % all_relation_kinds.size()]};
        const RelationalPattern rp = random_relational_pattern(rng, shape);
        const Mode mode = i % 2 ? Mode::Erasing : Mode::NonErasing;
        for (const Word& w : all_words("ab", 5)) {
            const auto expected = count_witnesses(w, rp, mode, 1000, plain);
            CHECK(count_witnesses(w, rp, mode, 1000) == expected);
            CHECK(count_witnesses(w, rp, mode, 1000, eager) == expected);
            CHECK(match(w, rp, mode, eager).has_value() == (expected > 0));
        }
    }
}

TEST_CASE("dead ends are not searched twice") {
    // Each free block splits many ways, but the constrained variables only
    // ever take a handful of primitive roots, so a failing suffix is cached.
    const auto rp = parse_relational_pattern(
        "alphabet:ab; pattern: x1 x2 x3 b x4 x5 x6 b x7 x8 x9 b b; "
        "rel: comstar(x2,x5), comstar(x5,x8)");
    MatchOptions small;
    small.node_budget = 200'000;
    small.memo_after_nodes = 0;
    const Word w = std::string(20, 'a') + "b" + std::string(20, 'a') + "b" + std::string(20, 'a') + "ba";
    CHECK_FALSE(match(w, rp, Mode::NonErasing, small).has_value());
}

TEST_CASE("membership coincides with the bounded slice") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const RelationalPattern rp = random_relational_pattern(rng, PatternShape{});
        for (Mode mode : {Mode::Erasing, Mode::NonErasing}) {
            const auto lang = enumerate_language(rp, mode, 7).words;
            for (const Word& w : all_words("ab", 7)) {
                CHECK(match(w, rp, mode).has_value() == lang.contains(w));
            }
        }
    }
}

TEST_CASE("the node budget is enforced") {
    const auto rp = parse_relational_pattern("alphabet:ab; pattern: x1 x2 x3 x4 x5 x6; rel: eq(x1,x6)");
    MatchOptions tiny;
    tiny.node_budget = 10;
    CHECK_THROWS_AS(match("abababababababababab", rp, Mode::NonErasing, tiny), ResourceLimitError);
}

}
