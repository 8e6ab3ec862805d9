#include <doctest.h>

#include "oracles.hpp"
#include "relpat/relpat.hpp"

using namespace relpat;

TEST_SUITE("relations") {

TEST_CASE("documented instances") {
    CHECK(relation_holds(RelationKind::Reversal, "ab", "ba"));
    CHECK_FALSE(relation_holds(RelationKind::Reversal, "ab", "ab"));
    CHECK(relation_holds(RelationKind::Eq, "", ""));
    CHECK(relation_holds(RelationKind::ComStar, "", "abc"));
    CHECK_FALSE(relation_holds(RelationKind::ComPlus, "", ""));
    CHECK(relation_holds(RelationKind::Star, "abab", "ab"));
    CHECK(relation_holds(RelationKind::AlphaPerm, "aab", "bba"));
    CHECK(relation_holds(RelationKind::Subseq, "ab", "acb"));
    CHECK(relation_holds(RelationKind::AbelianEq, "ab", "ba"));
}

TEST_CASE("edge cases around the empty word") {
    CHECK(relation_holds(RelationKind::Star, "", ""));
    CHECK(relation_holds(RelationKind::Star, "", "ab"));
    CHECK_FALSE(relation_holds(RelationKind::Star, "a", ""));
    CHECK_FALSE(relation_holds(RelationKind::ComPlus, "", "a"));
    CHECK(relation_holds(RelationKind::ComStar, "", ""));
    CHECK(relation_holds(RelationKind::ComPlus, "aa", "a"));
    CHECK_FALSE(relation_holds(RelationKind::ComPlus, "ab", "ba"));
    CHECK(relation_holds(RelationKind::AlphaPerm, "", ""));
    CHECK_FALSE(relation_holds(RelationKind::AlphaPerm, "ab", "aa"));
    CHECK(relation_holds(RelationKind::AlphaPerm, "ab", "ba"));
}

TEST_CASE("length profiles") {
    CHECK(length_profile(RelationKind::AbelianEq) == LengthProfile::EqualLengths);
    CHECK(length_profile(RelationKind::Star) == LengthProfile::LeftMultipleOfRight);
    CHECK(length_profile(RelationKind::ComPlus) == LengthProfile::Unconstrained);
    CHECK(length_profile(RelationKind::Subseq) == LengthProfile::LeftAtMostRight);
    CHECK(length_profile(RelationKind::Reversal) == LengthProfile::EqualLengths);
}

TEST_CASE("equivalence gate") {
    for (RelationKind k : all_relation_kinds) {
        const bool expected = k == RelationKind::Eq || k == RelationKind::AbelianEq || k == RelationKind::ComPlus;
        CHECK(is_letter_antisymmetric_equivalence(k) == expected);
    }
}

TEST_CASE("names round-trip") {
    for (RelationKind k : all_relation_kinds) {
        CHECK(relation_from_name(relation_name(k)) == k);
    }
    CHECK(relation_name(RelationKind::ComPlus) == "composplus");
    CHECK_FALSE(relation_from_name("hd").has_value());
}

TEST_CASE("agreement with the definitions on a three-letter alphabet") {
    const auto words = oracle::words_up_to("abc", 4);
    for (RelationKind k : all_relation_kinds) {
        for (const Word& u : words) {
            for (const Word& v : words) {
                if (relation_holds(k, u, v) != oracle::relation(k, u, v)) {
                    FAIL_CHECK(relation_name(k) << "(" << u << "," << v << ")");
                }
            }
        }
    }
}

TEST_CASE("parikh vectors count letters") {
    const ParikhVector p = parikh_vector("abcab");
    CHECK(p.at('a') == 2);
    CHECK(p.at('b') == 2);
    CHECK(p.at('c') == 1);
}

}
