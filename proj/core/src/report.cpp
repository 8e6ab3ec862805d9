#include "relpat/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "relpat/cnf.hpp"
#include "relpat/counter_automaton.hpp"
#include "relpat/equivalence.hpp"
#include "relpat/generators.hpp"
#include "relpat/inclusion.hpp"
#include "relpat/matcher.hpp"
#include "relpat/sat_reductions.hpp"
#include "relpat/semantics.hpp"
#include "relpat/utm.hpp"

namespace relpat {

namespace {

using Case = std::function<bool(std::mt19937_64&)>;

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::uint64_t cases, const Case& body) {
    SuiteResult r;
    r.suite = name;
    std::seed_seq seq{seed, static_cast<std::uint64_t>(std::hash<std::string>{}(name))};
    std::mt19937_64 rng(seq);
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t k = 0; k < cases; ++k) {
        ++r.cases;
        bool ok = false;
        try {
            ok = body(rng);
        } catch (const std::exception&) {
            ok = false;
        }
        ok ? ++r.passed : ++r.failed;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool relation_laws(std::mt19937_64& rng) {
    const Word u = random_word(rng, "ab", pick(rng, 0, 5));
    const Word v = random_word(rng, "ab", pick(rng, 0, 5));
    const Word w = random_word(rng, "ab", pick(rng, 0, 5));
    for (RelationKind k : {RelationKind::Eq, RelationKind::LenEq, RelationKind::AbelianEq, RelationKind::AlphaPerm}) {
        if (!relation_holds(k, u, u) || relation_holds(k, u, v) != relation_holds(k, v, u)) {
            return false;
        }
        if (relation_holds(k, u, v) && relation_holds(k, v, w) && !relation_holds(k, u, w)) {
            return false;
        }
    }
    if (relation_holds(RelationKind::Reversal, u, v) != relation_holds(RelationKind::Reversal, v, u)) {
        return false;
    }
    for (RelationKind k : {RelationKind::Subseq, RelationKind::Star}) {
        if ((relation_holds(k, u, v) && relation_holds(k, v, u)) != (u == v)) {
            return false;
        }
    }
    return true;
}

bool matcher_agrees(std::mt19937_64& rng) {
    PatternShape shape;
    shape.kinds = {all_relation_kinds[pick(rng, 0, all_relation_kinds.size() - 1)]};
    const RelationalPattern rp = random_relational_pattern(rng, shape);
    const Mode mode = pick(rng, 0, 1) == 0 ? Mode::Erasing : Mode::NonErasing;
    const auto language = enumerate_language(rp, mode, 6).words;
    for (const Word& w : all_words("ab", 6)) {
        if (match(w, rp, mode).has_value() != language.contains(w)) {
            return false;
        }
    }
    return true;
}

bool reduction_sound(std::mt19937_64& rng) {
    const auto variant = all_reduction_variants[pick(rng, 0, all_reduction_variants.size() - 1)];
    const auto kinds = supported_kinds(variant);
    const RelationKind kind = kinds[pick(rng, 0, kinds.size() - 1)];
    const CnfFormula phi = random_cnf(rng, static_cast<std::uint32_t>(pick(rng, 1, 3)), pick(rng, 1, 3), false);
    return verify_reduction(variant, kind, phi);
}

bool equivalence_agrees(std::mt19937_64& rng) {
    static const std::vector<RelationKind> kinds{RelationKind::Eq, RelationKind::AbelianEq, RelationKind::ComPlus};
    PatternShape shape;
    shape.max_vars = 3;
    shape.max_terminals = 2;
    shape.kinds = {kinds[pick(rng, 0, kinds.size() - 1)]};
    const RelationalPattern a = random_relational_pattern(rng, shape);
    RelationalPattern b = a;
    if (pick(rng, 0, 1) == 0) {
        b = random_relational_pattern(rng, shape);
    } else {
        std::vector<Constraint> flipped;
        for (const Constraint& c : a.constraints()) {
            flipped.push_back({shape.kinds[0], c.right, c.left});
        }
        b = RelationalPattern(a.alphabet(), a.pattern(), flipped);
    }
    const std::size_t bound = std::max(a.pattern().size(), b.pattern().size()) + 2;
    return ne_equivalent(a, b) == bounded_equal(a, b, Mode::NonErasing, bound);
}

bool machines_roundtrip(std::mt19937_64& rng) {
    const auto states = static_cast<std::uint32_t>(pick(rng, 1, 3));
    TwoCounterAutomaton a(states);
    for (std::uint32_t q = 0; q < states; ++q) {
        for (int c1 = 0; c1 <= 1; ++c1) {
            for (int c2 = 0; c2 <= 1; ++c2) {
                if (pick(rng, 0, 2) == 0) {
                    continue;
                }
                const int r1 = static_cast<int>(pick(rng, c1 == 0 ? 1 : 0, 2)) - 1;
                const int r2 = static_cast<int>(pick(rng, c2 == 0 ? 1 : 0, 2)) - 1;
                a.add_transition(q, c1, c2, {static_cast<std::uint32_t>(pick(rng, 0, states - 1)), r1, r2});
            }
        }
    }
    a.set_accepting(static_cast<std::uint32_t>(pick(rng, 0, states - 1)));
    if (auto run = ca_find_accepting_run(a, 6)) {
        if (!ca_validate(ca_encode(*run), a)) {
            return false;
        }
    }
    UtmConfiguration c{static_cast<int>(pick(rng, 1, 15)), pick(rng, 0, 63), pick(rng, 0, 63)};
    ExplicitTape tape(c);
    for (int k = 0; k < 10; ++k) {
        auto next = utm_step(c);
        if (next.has_value() != tape.step()) {
            return false;
        }
        if (!next) {
            break;
        }
        c = *next;
        if (tape.configuration() != c) {
            return false;
        }
    }
    return true;
}

bool bad_form_lemma(std::mt19937_64& rng) {
    static const auto predicates = fixed_predicates();
    SigmaAssignment sigma{random_word(rng, "0#", pick(rng, 0, 12)), random_word(rng, "0#", pick(rng, 0, 6))};
    if (pick(rng, 0, 1) == 0) {
        sigma.y_image = std::string(sigma.y_image.size(), '0');
    }
    const bool bad = !good_form(sigma);
    const bool detected = predicate_satisfied(sigma, predicates[0]) || predicate_satisfied(sigma, predicates[1]);
    return bad == detected;
}

} // namespace

bool RunReport::all_passed() const noexcept {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failed == 0; });
}

RunReport run_report(std::uint64_t seed) {
    RunReport report;
    report.seed = seed;
    report.suites.push_back(run_suite("relation-laws", seed, 2000, relation_laws));
    report.suites.push_back(run_suite("matcher-oracle", seed, 120, matcher_agrees));
    report.suites.push_back(run_suite("reduction-soundness", seed, 60, reduction_sound));
    report.suites.push_back(run_suite("ne-equivalence", seed, 120, equivalence_agrees));
    report.suites.push_back(run_suite("machines", seed, 100, machines_roundtrip));
    report.suites.push_back(run_suite("bad-form-predicates", seed, 100, bad_form_lemma));
    return report;
}

} // namespace relpat
