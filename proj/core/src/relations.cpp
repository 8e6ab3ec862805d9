#include "relpat/relations.hpp"

#include <algorithm>
#include <array>

namespace relpat {

namespace {

constexpr std::array<std::string_view, 9> names{
    "eq", "len", "ssq", "ab", "perm", "rev", "comstar", "composplus", "star",
};

bool abelian_equal(std::string_view u, std::string_view v) noexcept {
    if (u.size() != v.size()) {
        return false;
    }
    std::array<std::size_t, 256> counts{};
    for (char c : u) {
        ++counts[static_cast<unsigned char>(c)];
    }
    for (char c : v) {
        auto& n = counts[static_cast<unsigned char>(c)];
        if (n == 0) {
            return false;
        }
        --n;
    }
    return true;
}

// Some injective letter map sends v to u position by position.
bool letter_bijective(std::string_view u, std::string_view v) noexcept {
    if (u.size() != v.size()) {
        return false;
    }
    std::array<int, 256> forward;
    std::array<int, 256> backward;
    forward.fill(-1);
    backward.fill(-1);
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto from = static_cast<unsigned char>(v[i]);
        auto to = static_cast<unsigned char>(u[i]);
        if (forward[from] == -1 && backward[to] == -1) {
            forward[from] = to;
            backward[to] = from;
        } else if (forward[from] != to || backward[to] != from) {
            return false;
        }
    }
    return true;
}

bool is_reversal(std::string_view u, std::string_view v) noexcept {
    return u.size() == v.size() && std::equal(u.begin(), u.end(), v.rbegin());
}

bool in_star_of(std::string_view u, std::string_view v) noexcept {
    if (v.empty()) {
        return u.empty();
    }
    if (u.size() % v.size() != 0) {
        return false;
    }
    for (std::size_t i = 0; i < u.size(); i += v.size()) {
        if (u.substr(i, v.size()) != v) {
            return false;
        }
    }
    return true;
}

} // namespace

std::string_view relation_name(RelationKind kind) noexcept { return names[static_cast<std::size_t>(kind)]; }

std::optional<RelationKind> relation_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            return static_cast<RelationKind>(i);
        }
    }
    return std::nullopt;
}

bool is_subsequence(std::string_view u, std::string_view v) noexcept {
    std::size_t i = 0;
    for (char c : v) {
        if (i < u.size() && u[i] == c) {
            ++i;
        }
    }
    return i == u.size();
}

bool commute(std::string_view u, std::string_view v) noexcept {
    const std::size_t n = u.size() + v.size();
    for (std::size_t i = 0; i < n; ++i) {
        char a = i < u.size() ? u[i] : v[i - u.size()];
        char b = i < v.size() ? v[i] : u[i - v.size()];
        if (a != b) {
            return false;
        }
    }
    return true;
}

bool relation_holds(RelationKind kind, std::string_view u, std::string_view v) {
    switch (kind) {
    case RelationKind::Eq:
        return u == v;
    case RelationKind::LenEq:
        return u.size() == v.size();
    case RelationKind::Subseq:
        return u.size() <= v.size() && is_subsequence(u, v);
    case RelationKind::AbelianEq:
        return abelian_equal(u, v);
    case RelationKind::AlphaPerm:
        return letter_bijective(u, v);
    case RelationKind::Reversal:
        return is_reversal(u, v);
    case RelationKind::ComStar:
        return u.empty() || v.empty() || commute(u, v);
    case RelationKind::ComPlus:
        return !u.empty() && !v.empty() && commute(u, v);
    case RelationKind::Star:
        return in_star_of(u, v);
    }
    return false;
}

LengthProfile length_profile(RelationKind kind) noexcept {
    switch (kind) {
    case RelationKind::Eq:
    case RelationKind::LenEq:
    case RelationKind::AbelianEq:
    case RelationKind::AlphaPerm:
    case RelationKind::Reversal:
        return LengthProfile::EqualLengths;
    case RelationKind::Subseq:
        return LengthProfile::LeftAtMostRight;
    case RelationKind::Star:
        return LengthProfile::LeftMultipleOfRight;
    case RelationKind::ComStar:
    case RelationKind::ComPlus:
        return LengthProfile::Unconstrained;
    }
    return LengthProfile::Unconstrained;
}

bool is_letter_antisymmetric_equivalence(RelationKind kind) noexcept {
    return kind == RelationKind::Eq || kind == RelationKind::AbelianEq || kind == RelationKind::ComPlus;
}

ParikhVector parikh_vector(std::string_view w) {
    ParikhVector p;
    for (char c : w) {
        ++p[c];
    }
    return p;
}

} // namespace relpat
