#include "relpat/prop6.hpp"

#include <map>
#include <set>

#include "relpat/errors.hpp"

namespace relpat {

namespace {

constexpr RelationKind ab = RelationKind::AbelianEq;
const std::string v_block = "0####0";

struct NeBuilder {
    NePredicate p;
    VarId next = 1;

    VarId push(SymbolString& where) {
        VarId v = next++;
        where.push_back(Symbol::variable(v));
        return v;
    }
    static void put(SymbolString& where, std::string_view letters) {
        for (char c : letters) {
            where.push_back(Symbol::terminal(c));
        }
    }
};

void append_psi(Word& out, const SymbolString& symbols) {
    for (const Symbol& s : symbols) {
        out.push_back(s.is_variable() ? '0' : s.letter());
    }
}

// psi image of 0 x x x x 0 gamma 0 x x x x 0 delta 0 x x x x 0.
Word block_image(const NePredicate& p) {
    Word out = "0" + std::string(4, '0') + "0";
    append_psi(out, p.gamma);
    out += "0" + std::string(4, '0') + "0";
    append_psi(out, p.delta);
    out += "0" + std::string(4, '0') + "0";
    return out;
}

} // namespace

std::vector<VarId> NePredicate::variables() const {
    std::set<VarId> seen;
    for (const SymbolString* part : {&gamma, &delta}) {
        for (const Symbol& s : *part) {
            if (s.is_variable()) {
                seen.insert(s.var());
            }
        }
    }
    return {seen.begin(), seen.end()};
}

NePredicate simple_to_ne_predicate(const SimplePredicate& sp) {
    NeBuilder b;
    b.p.label = sp.label;
    std::map<int, std::vector<VarId>> params;
    if (sp.l1 == Boundary::AnyWord) {
        b.push(b.p.gamma);
    } else {
        NeBuilder::put(b.p.gamma, "0");
    }
    for (const SkeletonItem& item : sp.skeleton) {
        if (item.is_param()) {
            if (item.param_class < 1 || item.param_class > 3) {
                throw PreconditionError("parameter classes are 1..3");
            }
            params[item.param_class].push_back(b.push(b.p.gamma));
        } else {
            b.p.gamma.push_back(Symbol::terminal(item.letter));
        }
    }
    if (sp.l2 == Boundary::AnyWord) {
        b.push(b.p.gamma);
    } else {
        NeBuilder::put(b.p.gamma, "0");
    }
    NeBuilder::put(b.p.delta, "0");
    for (auto& [cls, family] : params) {
        family.insert(family.begin(), b.push(b.p.delta));
    }
    b.push(b.p.delta);
    NeBuilder::put(b.p.delta, "0");
    for (const auto& [cls, family] : params) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                b.p.constraints.push_back({ab, family[i], family[j]});
            }
        }
    }
    return std::move(b.p);
}

std::vector<NePredicate> prop6_predicates(const std::vector<SimplePredicate>& extra) {
    std::vector<NePredicate> out;
    {
        NeBuilder b;
        b.p.label = "pi_1: h(x) contains ###";
        b.push(b.p.gamma);
        NeBuilder::put(b.p.gamma, "###");
        b.push(b.p.gamma);
        NeBuilder::put(b.p.delta, "0");
        b.push(b.p.delta);
        NeBuilder::put(b.p.delta, "0");
        out.push_back(std::move(b.p));
    }
    {
        NeBuilder b;
        b.p.label = "pi_2: h(y) contains #";
        NeBuilder::put(b.p.gamma, "0");
        b.push(b.p.gamma);
        NeBuilder::put(b.p.gamma, "0");
        b.push(b.p.delta);
        NeBuilder::put(b.p.delta, "#");
        b.push(b.p.delta);
        out.push_back(std::move(b.p));
    }
    {
        // The factor variables occur in gamma and, as abelian-equivalent
        // copies, in delta; every variable of beta occurs once.
        NeBuilder b;
        b.p.label = "pi_3: h(y)00 is 0 followed by three factors of the first equation";
        b.p.order = SolveOrder::EtaDeltaGamma;
        std::vector<VarId> factors;
        for (int k = 0; k < 3; ++k) {
            b.push(b.p.gamma);
            factors.push_back(b.push(b.p.gamma));
        }
        b.push(b.p.gamma);
        NeBuilder::put(b.p.delta, "0");
        for (VarId f : factors) {
            b.p.constraints.push_back({ab, f, b.push(b.p.delta)});
        }
        out.push_back(std::move(b.p));
    }
    for (const SimplePredicate& sp : extra) {
        out.push_back(simple_to_ne_predicate(sp));
    }
    return out;
}

Word prop6_alpha1(const UtmConfiguration& initial, std::string_view x_image) {
    return "##" + utm_encode_config(initial) + "##" + std::string(x_image) + "#" + std::string(6, '0') + "0" + "0" +
           "##";
}

Word prop6_alpha2(std::string_view y_image) { return std::string(y_image) + "00"; }

Prop6PsiImages prop6_psi_images(const std::vector<NePredicate>& predicates) {
    Prop6PsiImages images;
    images.t = "0";
    for (const NePredicate& p : predicates) {
        images.blocks.push_back(block_image(p));
        images.t += images.blocks.back() + "0";
    }
    return images;
}

bool psi_images_well_formed(const Prop6PsiImages& images) {
    auto ok = [](const Word& w) {
        return !w.empty() && w.front() == '0' && w.back() == '0' && w.find("####") == std::string::npos;
    };
    if (!ok(images.t)) {
        return false;
    }
    for (const Word& w : images.blocks) {
        if (!ok(w)) {
            return false;
        }
    }
    return true;
}

RelationalPattern build_alpha_prop6(const UtmConfiguration& initial, const std::vector<NePredicate>& predicates) {
    const std::size_t mu = predicates.size();
    const Word t = prop6_psi_images(predicates).t;
    PatternBuilder b;
    b.append_word(std::string(mu + 1, '0') + "#####" + std::string(mu, '0') + "#" + std::string(mu, '0') + "#####");
    b.append_word(t + v_block + "0");
    b.append_word("##" + utm_encode_config(initial) + "##");
    b.append_fresh();
    b.append_word("#" + std::string(6, '0') + "0" + "0" + "##");
    b.append_word("0" + v_block + "0");
    b.append_fresh();
    b.append_word("00");
    b.append_word("0" + v_block + t);
    return b.build(Alphabet("0#"));
}

RelationalPattern build_beta_prop6(const std::vector<NePredicate>& predicates) {
    const std::size_t mu = predicates.size();
    PatternBuilder b;
    const VarId a1 = b.append_fresh();
    const VarId b1 = b.append_fresh();
    b.append_terminal('#', 5);
    b.relate(ab, a1, b.append_fresh());
    std::vector<std::vector<VarId>> params(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        params[i].push_back(b.append_fresh());
    }
    b.relate(ab, b1, b.append_fresh());
    b.append_terminal('#', 5);

    auto four = [&](std::size_t i) {
        b.append_terminal('0');
        for (int k = 0; k < 4; ++k) {
            params[i].push_back(b.append_fresh());
        }
        b.append_terminal('0');
    };
    for (std::size_t i = 0; i < mu; ++i) {
        b.append_fresh();
        std::map<VarId, VarId> rename;
        auto splice = [&](const SymbolString& part) {
            for (const Symbol& s : part) {
                if (s.is_terminal()) {
                    b.append_terminal(s.letter());
                    continue;
                }
                auto [it, inserted] = rename.emplace(s.var(), 0);
                if (inserted) {
                    it->second = b.append_fresh();
                } else {
                    b.append(it->second);
                }
            }
        };
        four(i);
        splice(predicates[i].gamma);
        four(i);
        splice(predicates[i].delta);
        four(i);
        for (const Constraint& c : predicates[i].constraints) {
            b.relate(c.kind, rename.at(c.left), rename.at(c.right));
        }
    }
    b.append_fresh();
    for (const auto& family : params) {
        for (std::size_t j = 0; j < family.size(); ++j) {
            for (std::size_t k = j + 1; k < family.size(); ++k) {
                b.relate(ab, family[j], family[k]);
            }
        }
    }
    return b.build(Alphabet("0#"));
}

bool ne_predicate_satisfied(std::string_view x_image, std::string_view y_image, const UtmConfiguration& initial,
                            const NePredicate& p, const MatchOptions& options) {
    MatchProblem problem;
    problem.mode = Mode::NonErasing;
    problem.constraints = p.constraints;
    MatchEquation first{p.gamma, "0" + prop6_alpha1(initial, x_image) + "0"};
    MatchEquation second{p.delta, "0" + prop6_alpha2(y_image) + "0"};
    if (p.order == SolveOrder::EtaDeltaGamma) {
        std::swap(first, second);
    }
    problem.equations.push_back(std::move(first));
    problem.equations.push_back(std::move(second));
    return solve_system(problem, options).has_value();
}

} // namespace relpat
