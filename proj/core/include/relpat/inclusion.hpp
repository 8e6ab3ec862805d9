#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "relpat/counter_automaton.hpp"
#include "relpat/matcher.hpp"
#include "relpat/pattern.hpp"

namespace relpat {

enum class Boundary : std::uint8_t { AnyWord, EmptyOnly };

// One skeleton position: a letter of {0,#}, or a parameter of class 1..3.
struct SkeletonItem {
    char letter = '\0';
    int param_class = 0;

    static SkeletonItem lit(char c) { return {c, 0}; }
    static SkeletonItem param(int cls) { return {'\0', cls}; }
    bool is_param() const noexcept { return param_class != 0; }
};

using Skeleton = std::vector<SkeletonItem>;

// sigma(x) in L1 . S(p) . L2, parameters ranging over 0* with equal values per class.
struct SimplePredicate {
    Skeleton skeleton;
    Boundary l1 = Boundary::AnyWord;
    Boundary l2 = Boundary::AnyWord;
    std::string label;
};

// Shorthand: letters as given, '1'..'3' for parameters of that class.
Skeleton parse_skeleton(std::string_view text);

struct SigmaAssignment {
    Word x_image;
    Word y_image;
};

enum class SolveOrder : std::uint8_t { EtaGammaDelta, EtaDeltaGamma };

struct PredicateTriple {
    SymbolString gamma;
    SymbolString delta;
    SymbolString eta;
    std::vector<Constraint> constraints;
    Word eta_target;
    SolveOrder order = SolveOrder::EtaGammaDelta;
    std::string label;

    std::vector<VarId> variables() const;
};

struct Theorem3Options {
    RelationKind kind = RelationKind::Reversal; // AbelianEq gives the r_ab variant
    std::string extra_letters;                   // a_1 ... a_n beyond {0,#}
};

Alphabet theorem3_alphabet(const Theorem3Options& options = {});
Word theorem3_u(const Theorem3Options& options = {});

RelationalPattern build_alpha_A(const Theorem3Options& options = {});

std::vector<PredicateTriple> fixed_predicates(const Theorem3Options& options = {});
std::vector<SimplePredicate> build_simple_predicates(const TwoCounterAutomaton& a);
PredicateTriple simple_to_triple(const SimplePredicate& sp, const Theorem3Options& options = {});
std::vector<PredicateTriple> build_predicates(const TwoCounterAutomaton& a, const Theorem3Options& options = {});

RelationalPattern build_beta_A(const std::vector<PredicateTriple>& predicates,
                               const Theorem3Options& options = {});
RelationalPattern build_beta_A(const TwoCounterAutomaton& a, const Theorem3Options& options = {});

bool predicate_satisfied(const SigmaAssignment& sigma, const PredicateTriple& t,
                         const MatchOptions& options = {});
// 1-based indices of the satisfied predicates.
std::vector<std::size_t> satisfied_predicates(const SigmaAssignment& sigma,
                                              const std::vector<PredicateTriple>& predicates,
                                              const MatchOptions& options = {});

bool good_form(const SigmaAssignment& sigma);
bool good_structure(std::string_view w);

} // namespace relpat
