#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "relpat/cnf.hpp"
#include "relpat/matcher.hpp"
#include "relpat/pattern.hpp"

namespace relpat {

enum class ReductionVariant : std::uint8_t {
    AngluinNE,
    JiangE,
    CommuteNE,
    ComPlusE,
    ComStarE,
    OneSidedStarE,
    OneSidedSubseqE,
    OneSidedStarNE,
    OneSidedSubseqNE,
};

inline constexpr std::array<ReductionVariant, 9> all_reduction_variants{
    ReductionVariant::AngluinNE,     ReductionVariant::JiangE,          ReductionVariant::CommuteNE,
    ReductionVariant::ComPlusE,      ReductionVariant::ComStarE,        ReductionVariant::OneSidedStarE,
    ReductionVariant::OneSidedSubseqE, ReductionVariant::OneSidedStarNE, ReductionVariant::OneSidedSubseqNE,
};

struct ReductionInstance {
    Word word;
    RelationalPattern rp;
    Mode mode;
};

std::string_view variant_name(ReductionVariant variant) noexcept;
std::optional<ReductionVariant> variant_from_name(std::string_view name) noexcept;

// Relation kinds a variant accepts; the first one is the default.
std::vector<RelationKind> supported_kinds(ReductionVariant variant);
// DIMACS input for the commutation constructions must not repeat a literal
// within a clause. generate() itself accepts such formulas.
bool requires_distinct_literals(ReductionVariant variant) noexcept;

ReductionInstance generate(ReductionVariant variant, RelationKind kind, const CnfFormula& phi);
ReductionInstance generate(ReductionVariant variant, const CnfFormula& phi);

bool verify_reduction(ReductionVariant variant, RelationKind kind, const CnfFormula& phi,
                      const MatchOptions& options = {});

} // namespace relpat
