#pragma once

#include <string>
#include <vector>

#include "relpat/inclusion.hpp"
#include "relpat/matcher.hpp"
#include "relpat/pattern.hpp"
#include "relpat/utm.hpp"

namespace relpat {

// Non-erasing predicate over r_ab: gamma is matched against h(0 alpha_1 0) and
// delta against h(0 alpha_2 0).
struct NePredicate {
    SymbolString gamma;
    SymbolString delta;
    std::vector<Constraint> constraints;
    SolveOrder order = SolveOrder::EtaGammaDelta; // there is no eta here; only gamma/delta order matters
    std::string label;

    std::vector<VarId> variables() const;
};

inline constexpr std::size_t prop6_block_params = 13;

// In this setting Boundary::AnyWord stands for 0 Sigma* and EmptyOnly for {0}.
NePredicate simple_to_ne_predicate(const SimplePredicate& sp);
// pi_1 .. pi_3 followed by the converted extra predicates.
std::vector<NePredicate> prop6_predicates(const std::vector<SimplePredicate>& extra = {});

Word prop6_alpha1(const UtmConfiguration& initial, std::string_view x_image);
Word prop6_alpha2(std::string_view y_image);

RelationalPattern build_alpha_prop6(const UtmConfiguration& initial, const std::vector<NePredicate>& predicates);
RelationalPattern build_beta_prop6(const std::vector<NePredicate>& predicates);

// psi maps every variable of beta to 0.
struct Prop6PsiImages {
    Word t;
    std::vector<Word> blocks;
};
Prop6PsiImages prop6_psi_images(const std::vector<NePredicate>& predicates);
bool psi_images_well_formed(const Prop6PsiImages& images);

bool ne_predicate_satisfied(std::string_view x_image, std::string_view y_image, const UtmConfiguration& initial,
                            const NePredicate& p, const MatchOptions& options = {});

} // namespace relpat
