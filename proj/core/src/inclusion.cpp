#include "relpat/inclusion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "relpat/errors.hpp"

namespace relpat {

namespace {

const std::string v_block = "0###0";

// Variable pool of one predicate; ids are allocated in creation order.
struct TripleBuilder {
    PredicateTriple triple;
    VarId next = 1;

    VarId fresh() { return next++; }
    VarId push(SymbolString& where) {
        VarId v = fresh();
        where.push_back(Symbol::variable(v));
        return v;
    }
    void relate(RelationKind kind, VarId a, VarId b) { triple.constraints.push_back({kind, a, b}); }
    void star(RelationKind kind, const std::vector<VarId>& family) {
        for (std::size_t k = 1; k < family.size(); ++k) {
            relate(kind, family[0], family[k]);
        }
    }
};

// eta = z zh1..zh5 [a-pairs] z', matched against u. Returns the variables as
// (zero family, hash family, letter pairs).
struct EtaVars {
    VarId z;
    std::vector<VarId> hashes;
    std::vector<std::pair<VarId, VarId>> letters;
    VarId z_prime;
};

EtaVars push_eta(TripleBuilder& b, const Theorem3Options& options) {
    EtaVars e;
    e.z = b.push(b.triple.eta);
    for (int k = 0; k < 5; ++k) {
        e.hashes.push_back(b.push(b.triple.eta));
    }
    for (std::size_t k = 0; k < options.extra_letters.size(); ++k) {
        VarId first = b.push(b.triple.eta);
        VarId second = b.push(b.triple.eta);
        e.letters.emplace_back(first, second);
    }
    e.z_prime = b.push(b.triple.eta);
    return e;
}

void relate_letter_pairs(TripleBuilder& b, const EtaVars& e, RelationKind kind) {
    for (const auto& [first, second] : e.letters) {
        b.relate(kind, first, second);
    }
}

void relate_standard_eta(TripleBuilder& b, const EtaVars& e, RelationKind kind) {
    b.relate(kind, e.z, e.z_prime);
    b.star(kind, e.hashes);
    relate_letter_pairs(b, e, kind);
}

TripleBuilder start_triple(const Theorem3Options& options, std::string label) {
    TripleBuilder b;
    b.triple.eta_target = theorem3_u(options);
    b.triple.label = std::move(label);
    return b;
}

void require_binary_skeleton(const Skeleton& skeleton) {
    for (const SkeletonItem& item : skeleton) {
        if (item.is_param() ? (item.param_class < 1 || item.param_class > 3)
                            : (item.letter != '0' && item.letter != '#')) {
            throw PreconditionError("skeleton items are 0, # or parameters of class 1..3");
        }
    }
}

SimplePredicate simple(std::string_view skeleton, Boundary l1, Boundary l2, std::string label) {
    return {parse_skeleton(skeleton), l1, l2, std::move(label)};
}

std::string zeros(std::size_t n) { return std::string(n, '0'); }

// Current counter block for zero flag c, parameterized by class cls.
std::string counter_now(int c, char cls) { return c == 0 ? "0" : std::string("00") + cls; }
std::string counter_next(int c, int r, char cls) {
    return c == 0 ? zeros(static_cast<std::size_t>(1 + r)) : zeros(static_cast<std::size_t>(2 + r)) + cls;
}

} // namespace

Skeleton parse_skeleton(std::string_view text) {
    Skeleton out;
    for (char c : text) {
        if (c >= '1' && c <= '3') {
            out.push_back(SkeletonItem::param(c - '0'));
        } else if (c == '0' || c == '#') {
            out.push_back(SkeletonItem::lit(c));
        } else {
            throw PreconditionError(std::string("invalid skeleton character '") + c + "'");
        }
    }
    return out;
}

std::vector<VarId> PredicateTriple::variables() const {
    std::set<VarId> seen;
    for (const SymbolString* part : {&gamma, &delta, &eta}) {
        for (const Symbol& s : *part) {
            if (s.is_variable()) {
                seen.insert(s.var());
            }
        }
    }
    return {seen.begin(), seen.end()};
}

Alphabet theorem3_alphabet(const Theorem3Options& options) { return Alphabet("0#" + options.extra_letters); }

Word theorem3_u(const Theorem3Options& options) {
    Word u = "0#####";
    for (char a : options.extra_letters) {
        u += std::string(2, a);
    }
    return u + "0";
}

RelationalPattern build_alpha_A(const Theorem3Options& options) {
    PatternBuilder b;
    b.append_word(v_block + v_block + "######" + v_block);
    b.append_fresh();
    b.append_word(v_block);
    b.append_fresh();
    b.append_word(v_block + "######" + v_block + theorem3_u(options) + v_block);
    return b.build(theorem3_alphabet(options));
}

std::vector<PredicateTriple> fixed_predicates(const Theorem3Options& options) {
    const RelationKind kind = options.kind;
    std::vector<PredicateTriple> out;
    {
        TripleBuilder b = start_triple(options, "pi_1: sigma(x) contains ###");
        EtaVars e = push_eta(b, options);
        b.push(b.triple.gamma);
        std::vector<VarId> hashes = e.hashes;
        for (int k = 0; k < 3; ++k) {
            hashes.push_back(b.push(b.triple.gamma));
        }
        b.push(b.triple.gamma);
        b.push(b.triple.delta);
        b.relate(kind, e.z, e.z_prime);
        b.star(kind, hashes);
        relate_letter_pairs(b, e, kind);
        out.push_back(std::move(b.triple));
    }
    {
        TripleBuilder b = start_triple(options, "pi_2: sigma(y) contains #");
        EtaVars e = push_eta(b, options);
        b.push(b.triple.gamma);
        b.push(b.triple.delta);
        std::vector<VarId> hashes = e.hashes;
        hashes.push_back(b.push(b.triple.delta));
        b.push(b.triple.delta);
        b.relate(kind, e.z, e.z_prime);
        b.star(kind, hashes);
        relate_letter_pairs(b, e, kind);
        out.push_back(std::move(b.triple));
    }
    {
        TripleBuilder b = start_triple(options, "pi_3: sigma(y) is three reversed factors of sigma(x)");
        b.triple.order = SolveOrder::EtaDeltaGamma;
        EtaVars e = push_eta(b, options);
        std::vector<VarId> factors;
        for (int k = 0; k < 3; ++k) {
            b.push(b.triple.gamma);
            factors.push_back(b.push(b.triple.gamma));
        }
        b.push(b.triple.gamma);
        for (VarId f : factors) {
            b.relate(kind, f, b.push(b.triple.delta));
        }
        relate_standard_eta(b, e, kind);
        out.push_back(std::move(b.triple));
    }
    return out;
}

PredicateTriple simple_to_triple(const SimplePredicate& sp, const Theorem3Options& options) {
    require_binary_skeleton(sp.skeleton);
    const RelationKind kind = options.kind;
    TripleBuilder b = start_triple(options, sp.label);
    std::vector<VarId> zero_family;
    std::vector<VarId> hash_family;
    std::map<int, std::vector<VarId>> params;

    if (sp.l1 == Boundary::AnyWord) {
        b.push(b.triple.gamma);
    }
    for (const SkeletonItem& item : sp.skeleton) {
        VarId v = b.push(b.triple.gamma);
        if (item.is_param()) {
            params[item.param_class].push_back(v);
        } else {
            (item.letter == '0' ? zero_family : hash_family).push_back(v);
        }
    }
    if (sp.l2 == Boundary::AnyWord) {
        b.push(b.triple.gamma);
    }
    for (auto& [cls, family] : params) {
        family.insert(family.begin(), b.push(b.triple.delta));
    }
    b.push(b.triple.delta);

    EtaVars e = push_eta(b, options);
    zero_family.push_back(e.z);
    zero_family.push_back(e.z_prime);
    hash_family.insert(hash_family.end(), e.hashes.begin(), e.hashes.end());
    b.star(kind, zero_family);
    b.star(kind, hash_family);
    relate_letter_pairs(b, e, kind);
    for (const auto& [cls, family] : params) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                b.relate(kind, family[i], family[j]);
            }
        }
    }
    return std::move(b.triple);
}

std::vector<SimplePredicate> build_simple_predicates(const TwoCounterAutomaton& a) {
    using B = Boundary;
    const std::size_t s = a.num_states() - 1;
    std::vector<SimplePredicate> out{
        simple("", B::EmptyOnly, B::EmptyOnly, "pi_4: sigma(x) = eps"),
        simple("#", B::EmptyOnly, B::EmptyOnly, "pi_5: sigma(x) = #"),
        simple("##", B::EmptyOnly, B::EmptyOnly, "pi_6: sigma(x) = ##"),
        simple("0", B::EmptyOnly, B::AnyWord, "pi_7: sigma(x) begins with 0"),
        simple("#0", B::EmptyOnly, B::AnyWord, "pi_8: sigma(x) begins with #0"),
        simple("0", B::AnyWord, B::EmptyOnly, "pi_9: sigma(x) ends with 0"),
        simple("0#", B::AnyWord, B::EmptyOnly, "pi_10: sigma(x) ends with 0#"),
        simple("##1##", B::AnyWord, B::AnyWord, "pi_11: contains ##0*##"),
        simple("##1#2##", B::AnyWord, B::AnyWord, "pi_12: contains ##0*#0*##"),
        simple("##1#2#3#0", B::AnyWord, B::AnyWord, "pi_13: contains ##0*#0*#0*#0"),
        simple("##" + zeros(s + 2), B::AnyWord, B::AnyWord, "state index above q" + std::to_string(s)),
        simple("##00", B::EmptyOnly, B::AnyWord, "initial state is not q0"),
        simple("##1#00", B::EmptyOnly, B::AnyWord, "initial counter 1 is not 0"),
        simple("##1#2#00", B::EmptyOnly, B::AnyWord, "initial counter 2 is not 0"),
    };
    for (std::uint32_t q = 0; q <= s; ++q) {
        if (!a.is_accepting(q)) {
            out.push_back(simple("##" + zeros(q + 1) + "#1#2##", B::AnyWord, B::EmptyOnly,
                                 "final state q" + std::to_string(q) + " is not accepting"));
        }
    }
    out.push_back(simple("#1#2##3#001", B::AnyWord, B::AnyWord, "counter 1 grows by 2 or more"));
    out.push_back(simple("100#2##3#1#", B::AnyWord, B::AnyWord, "counter 1 shrinks by 2 or more"));
    out.push_back(simple("#1##2#3#001", B::AnyWord, B::AnyWord, "counter 2 grows by 2 or more"));
    out.push_back(simple("100##2#3#1#", B::AnyWord, B::AnyWord, "counter 2 shrinks by 2 or more"));

    for (std::uint32_t i = 0; i <= s; ++i) {
        for (int c1 = 0; c1 <= 1; ++c1) {
            for (int c2 = 0; c2 <= 1; ++c2) {
                for (std::uint32_t j = 0; j <= s; ++j) {
                    for (int r1 = -1; r1 <= 1; ++r1) {
                        for (int r2 = -1; r2 <= 1; ++r2) {
                            if ((c1 == 0 && r1 < 0) || (c2 == 0 && r2 < 0) ||
                                a.has_transition(i, c1, c2, {j, r1, r2})) {
                                continue;
                            }
                            std::string factor = "##" + zeros(i + 1) + "#" + counter_now(c1, '1') + "#" +
                                                 counter_now(c2, '2') + "##" + zeros(j + 1) + "#" +
                                                 counter_next(c1, r1, '1') + "#" + counter_next(c2, r2, '2') + "##";
                            out.push_back(simple(factor, B::AnyWord, B::AnyWord,
                                                 "no transition q" + std::to_string(i) + " " + std::to_string(c1) +
                                                     " " + std::to_string(c2) + " -> q" + std::to_string(j) + " " +
                                                     std::to_string(r1) + " " + std::to_string(r2)));
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<PredicateTriple> build_predicates(const TwoCounterAutomaton& a, const Theorem3Options& options) {
    std::vector<PredicateTriple> out = fixed_predicates(options);
    for (const SimplePredicate& sp : build_simple_predicates(a)) {
        out.push_back(simple_to_triple(sp, options));
    }
    for (std::size_t k = 0; k < options.extra_letters.size(); ++k) {
        const std::string letter(1, options.extra_letters[k]);
        for (bool in_x : {true, false}) {
            TripleBuilder b = start_triple(options, "letter " + letter + (in_x ? " in sigma(x)" : " in sigma(y)"));
            EtaVars e = push_eta(b, options);
            SymbolString& carrier = in_x ? b.triple.gamma : b.triple.delta;
            SymbolString& other = in_x ? b.triple.delta : b.triple.gamma;
            b.push(carrier);
            VarId copy = b.push(carrier);
            b.push(carrier);
            b.push(other);
            relate_standard_eta(b, e, options.kind);
            b.relate(options.kind, e.letters[k].first, copy);
            out.push_back(std::move(b.triple));
        }
    }
    return out;
}

RelationalPattern build_beta_A(const std::vector<PredicateTriple>& predicates, const Theorem3Options& options) {
    const RelationKind kind = options.kind;
    const std::size_t mu = predicates.size();
    PatternBuilder b;
    std::vector<VarId> selectors;
    for (std::size_t i = 0; i < mu; ++i) {
        VarId x = b.append_fresh();
        b.relate(kind, x, b.append_fresh());
        selectors.push_back(x);
    }
    std::vector<std::map<VarId, VarId>> renames(mu);
    auto splice = [&](std::size_t i, const SymbolString& part) {
        for (const Symbol& s : part) {
            auto [it, inserted] = renames[i].emplace(s.var(), 0);
            if (inserted) {
                it->second = b.append_fresh();
            } else {
                b.append(it->second);
            }
        }
    };
    auto guard = [&](std::size_t i) { b.relate(kind, selectors[i], b.append_fresh()); };

    b.append_terminal('#', 6);
    for (std::size_t i = 0; i < mu; ++i) {
        guard(i);
        splice(i, predicates[i].gamma);
        guard(i);
        splice(i, predicates[i].delta);
        guard(i);
    }
    b.append_terminal('#', 6);
    for (std::size_t i = 0; i < mu; ++i) {
        guard(i);
        splice(i, predicates[i].eta);
        guard(i);
    }
    for (std::size_t i = 0; i < mu; ++i) {
        for (const Constraint& c : predicates[i].constraints) {
            b.relate(c.kind, renames[i].at(c.left), renames[i].at(c.right));
        }
    }
    return b.build(theorem3_alphabet(options));
}

RelationalPattern build_beta_A(const TwoCounterAutomaton& a, const Theorem3Options& options) {
    return build_beta_A(build_predicates(a, options), options);
}

bool predicate_satisfied(const SigmaAssignment& sigma, const PredicateTriple& t, const MatchOptions& options) {
    MatchProblem problem;
    problem.mode = Mode::Erasing;
    problem.constraints = t.constraints;
    problem.equations.push_back({t.eta, t.eta_target});
    if (t.order == SolveOrder::EtaGammaDelta) {
        problem.equations.push_back({t.gamma, sigma.x_image});
        problem.equations.push_back({t.delta, sigma.y_image});
    } else {
        problem.equations.push_back({t.delta, sigma.y_image});
        problem.equations.push_back({t.gamma, sigma.x_image});
    }
    return solve_system(problem, options).has_value();
}

std::vector<std::size_t> satisfied_predicates(const SigmaAssignment& sigma, const std::vector<PredicateTriple>& predicates,
                                              const MatchOptions& options) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < predicates.size(); ++i) {
        if (predicate_satisfied(sigma, predicates[i], options)) {
            out.push_back(i + 1);
        }
    }
    return out;
}

bool good_form(const SigmaAssignment& sigma) {
    return sigma.x_image.find("###") == std::string::npos &&
           std::all_of(sigma.y_image.begin(), sigma.y_image.end(), [](char c) { return c == '0'; });
}

bool good_structure(std::string_view w) {
    if (w.size() < 2 || w.substr(0, 2) != "##") {
        return false;
    }
    std::size_t pos = 2;
    bool any_block = false;
    while (pos < w.size()) {
        for (int k = 0; k < 3; ++k) {
            const std::size_t start = pos;
            while (pos < w.size() && w[pos] == '0') {
                ++pos;
            }
            if (pos == start) {
                return false;
            }
            const std::size_t seps = k < 2 ? 1 : 2;
            if (w.substr(pos, seps) != std::string(seps, '#')) {
                return false;
            }
            pos += seps;
        }
        any_block = true;
    }
    return any_block;
}

} // namespace relpat
