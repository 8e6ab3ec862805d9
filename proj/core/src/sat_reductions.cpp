#include "relpat/sat_reductions.hpp"

#include <algorithm>
#include <string>

#include "relpat/errors.hpp"

namespace relpat {

namespace {

constexpr std::array<std::string_view, 9> variant_names{
    "angluin-ne", "jiang-e", "commute-ne", "composplus-e", "comstar-e", "star-e", "ssq-e", "star-ne", "ssq-ne",
};

const Alphabet& sat_alphabet() {
    static const Alphabet sigma("1#");
    return sigma;
}

std::string ones(std::size_t n) { return std::string(n, '1'); }

// Variables u_i, v_i for one classical variable X_i.
struct VariablePair {
    VarId u;
    VarId v;
};

void relate_copy(PatternBuilder& b, RelationKind kind, VarId copy, VarId base) {
    b.relate(kind, copy, base);
    if (kind == RelationKind::Subseq || kind == RelationKind::Star) {
        b.relate(kind, base, copy);
    }
}

// Word "# s # ... # t # ... # w # ... #" and the matching Angluin-style pattern.
// true_is_v: the positive literal X_i maps to a copy of v_i, the negative to u_i.
ReductionInstance angluin_like(RelationKind kind, const CnfFormula& phi, Mode mode, std::size_t s, std::size_t t,
                               std::size_t w, std::size_t clause_padding) {
    std::string word = "#";
    for (std::uint32_t i = 0; i < phi.num_vars(); ++i) {
        word += ones(s) + "#";
    }
    for (std::size_t j = 0; j < phi.clauses().size(); ++j) {
        word += ones(t) + "#";
    }
    for (std::size_t j = 0; j < phi.clauses().size(); ++j) {
        word += ones(w) + "#";
    }

    PatternBuilder b;
    b.append_terminal('#');
    std::vector<VariablePair> pairs;
    for (std::uint32_t i = 0; i < phi.num_vars(); ++i) {
        VarId u = b.append_fresh();
        VarId v = b.append_fresh();
        pairs.push_back({u, v});
        b.append_terminal('#');
    }
    std::vector<VarId> z;
    for (const Clause& clause : phi.clauses()) {
        b.append_terminal('1', clause_padding);
        for (const Literal& l : clause) {
            const VariablePair& p = pairs[l.var - 1];
            relate_copy(b, kind, b.append_fresh(), l.negated ? p.u : p.v);
        }
        z.push_back(b.append_fresh());
        b.append_terminal('#');
    }
    for (VarId zj : z) {
        relate_copy(b, kind, b.append_fresh(), zj);
        b.append_fresh();
        b.append_terminal('#');
    }
    return {word, b.build(sat_alphabet()), mode};
}

// "## 1#1 ## ... ## t_j ## ... ##" with commutation constraints among all
// occurrences of each u_i (and of each v_i).
ReductionInstance commute_like(RelationKind kind, const CnfFormula& phi, Mode mode, bool padded_clauses) {
    const std::string block = padded_clauses ? ones(10) + "#" + ones(10) + "#" + ones(10) : "1";
    std::string word = "##";
    for (std::uint32_t i = 0; i < phi.num_vars(); ++i) {
        word += "1#1##";
    }
    for (std::size_t j = 0; j < phi.clauses().size(); ++j) {
        word += block + "##";
    }

    PatternBuilder b;
    b.append_terminal('#', 2);
    std::vector<std::vector<VarId>> u_family(phi.num_vars());
    std::vector<std::vector<VarId>> v_family(phi.num_vars());
    for (std::uint32_t i = 0; i < phi.num_vars(); ++i) {
        u_family[i].push_back(b.append_fresh());
        v_family[i].push_back(b.append_fresh());
        b.append_terminal('#', 2);
    }
    for (const Clause& clause : phi.clauses()) {
        if (padded_clauses) {
            b.append_fresh();
        }
        for (const Literal& l : clause) {
            auto& family = l.negated ? v_family[l.var - 1] : u_family[l.var - 1];
            family.push_back(b.append_fresh());
            if (padded_clauses) {
                b.append_fresh();
            }
        }
        b.append_terminal('#', 2);
    }
    for (const auto* families : {&u_family, &v_family}) {
        for (const auto& family : *families) {
            for (std::size_t a = 0; a < family.size(); ++a) {
                for (std::size_t c = a + 1; c < family.size(); ++c) {
                    b.relate(kind, family[a], family[c]);
                }
            }
        }
    }
    return {word, b.build(sat_alphabet()), mode};
}

std::string joined_blocks(std::size_t count, std::size_t len) {
    std::string out;
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0) {
            out += "#";
        }
        out += ones(len);
    }
    return out;
}

// "## s # ... # s ## t # ... # t ##" with one-sided copies constrained toward
// their base; positive literals copy u_i in the erasing case and v_i otherwise.
ReductionInstance one_sided(RelationKind kind, const CnfFormula& phi, Mode mode, std::size_t s, std::size_t t,
                            bool positive_is_v, bool with_z) {
    const std::size_t m = phi.num_vars();
    const std::size_t n = phi.clauses().size();
    std::string word = "##" + joined_blocks(m, s) + "##" + joined_blocks(n, t) + "##";

    PatternBuilder b;
    b.append_terminal('#', 2);
    std::vector<VariablePair> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0) {
            b.append_terminal('#');
        }
        VarId u = b.append_fresh();
        VarId v = b.append_fresh();
        pairs.push_back({u, v});
    }
    b.append_terminal('#', 2);
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) {
            b.append_terminal('#');
        }
        for (const Literal& l : phi.clauses()[j]) {
            const VariablePair& p = pairs[l.var - 1];
            const VarId base = (l.negated != positive_is_v) ? p.v : p.u;
            b.relate(kind, b.append_fresh(), base);
        }
        if (with_z) {
            b.append_fresh();
        }
    }
    b.append_terminal('#', 2);
    return {word, b.build(sat_alphabet()), mode};
}

} // namespace

std::string_view variant_name(ReductionVariant variant) noexcept {
    return variant_names[static_cast<std::size_t>(variant)];
}

std::optional<ReductionVariant> variant_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < variant_names.size(); ++i) {
        if (variant_names[i] == name) {
            return static_cast<ReductionVariant>(i);
        }
    }
    return std::nullopt;
}

std::vector<RelationKind> supported_kinds(ReductionVariant variant) {
    using K = RelationKind;
    switch (variant) {
    case ReductionVariant::AngluinNE:
    case ReductionVariant::JiangE:
        return {K::Eq, K::LenEq, K::Subseq, K::AbelianEq, K::AlphaPerm, K::Reversal, K::Star};
    case ReductionVariant::CommuteNE:
        return {K::ComPlus, K::ComStar};
    case ReductionVariant::ComPlusE:
        return {K::ComPlus};
    case ReductionVariant::ComStarE:
        return {K::ComStar};
    case ReductionVariant::OneSidedStarE:
    case ReductionVariant::OneSidedStarNE:
        return {K::Star};
    case ReductionVariant::OneSidedSubseqE:
    case ReductionVariant::OneSidedSubseqNE:
        return {K::Subseq};
    }
    return {};
}

bool requires_distinct_literals(ReductionVariant variant) noexcept {
    return variant == ReductionVariant::CommuteNE || variant == ReductionVariant::ComPlusE ||
           variant == ReductionVariant::ComStarE;
}

ReductionInstance generate(ReductionVariant variant, RelationKind kind, const CnfFormula& phi) {
    const auto kinds = supported_kinds(variant);
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
        throw PreconditionError("relation " + std::string(relation_name(kind)) + " is not supported by variant " +
                                std::string(variant_name(variant)));
    }
    switch (variant) {
    case ReductionVariant::AngluinNE:
        return angluin_like(kind, phi, Mode::NonErasing, 3, 7, 4, 0);
    case ReductionVariant::JiangE:
        // The clause block 1^7 is reached through a terminal prefix 1^4: the
        // literal images are 1 or empty, so they alone could never fill it.
        return angluin_like(kind, phi, Mode::Erasing, 1, 7, 2, 4);
    case ReductionVariant::CommuteNE:
        return commute_like(kind, phi, Mode::NonErasing, true);
    case ReductionVariant::ComPlusE:
        return commute_like(kind, phi, Mode::Erasing, true);
    case ReductionVariant::ComStarE:
        return commute_like(kind, phi, Mode::Erasing, false);
    case ReductionVariant::OneSidedStarE:
        return one_sided(kind, phi, Mode::Erasing, 1, 1, false, false);
    case ReductionVariant::OneSidedSubseqE:
        return one_sided(kind, phi, Mode::Erasing, 1, 1, false, false);
    case ReductionVariant::OneSidedStarNE:
        return one_sided(kind, phi, Mode::NonErasing, 3, 6, true, true);
    case ReductionVariant::OneSidedSubseqNE:
        return one_sided(kind, phi, Mode::NonErasing, 3, 4, true, false);
    }
    throw PreconditionError("unknown reduction variant");
}

ReductionInstance generate(ReductionVariant variant, const CnfFormula& phi) {
    return generate(variant, supported_kinds(variant).front(), phi);
}

bool verify_reduction(ReductionVariant variant, RelationKind kind, const CnfFormula& phi, const MatchOptions& options) {
    const ReductionInstance inst = generate(variant, kind, phi);
    const bool member = match(inst.word, inst.rp, inst.mode, options).has_value();
    return member == sat_brute_force(phi);
}

} // namespace relpat
