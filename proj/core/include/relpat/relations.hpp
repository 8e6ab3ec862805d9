#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

namespace relpat {

enum class RelationKind : std::uint8_t {
    Eq,
    LenEq,
    Subseq,
    AbelianEq,
    AlphaPerm,
    Reversal,
    ComStar,
    ComPlus,
    Star,
};

inline constexpr std::array<RelationKind, 9> all_relation_kinds{
    RelationKind::Eq,       RelationKind::LenEq,   RelationKind::Subseq,
    RelationKind::AbelianEq, RelationKind::AlphaPerm, RelationKind::Reversal,
    RelationKind::ComStar,  RelationKind::ComPlus, RelationKind::Star,
};

enum class LengthProfile : std::uint8_t {
    EqualLengths,
    LeftAtMostRight,
    LeftMultipleOfRight,
    Unconstrained,
};

using ParikhVector = std::map<char, std::size_t>;

// Serialization names used by the text grammar ("eq", "len", "ssq", ...).
std::string_view relation_name(RelationKind kind) noexcept;
std::optional<RelationKind> relation_from_name(std::string_view name) noexcept;

bool relation_holds(RelationKind kind, std::string_view u, std::string_view v);
LengthProfile length_profile(RelationKind kind) noexcept;
bool is_letter_antisymmetric_equivalence(RelationKind kind) noexcept;

ParikhVector parikh_vector(std::string_view w);
bool is_subsequence(std::string_view u, std::string_view v) noexcept;
bool commute(std::string_view u, std::string_view v) noexcept;

} // namespace relpat
