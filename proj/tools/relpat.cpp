#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "relpat/relpat.hpp"

using namespace relpat;
using nlohmann::json;

namespace {

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_error = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
}

ParsedDocument load_pattern(const std::string& path) {
    ParsedDocument doc = parse_document(read_file(path));
    for (const std::string& w : doc.warnings) {
        std::cerr << path << ": warning: " << w << "\n";
    }
    return doc;
}

Mode resolve_mode(const std::string& flag, const ParsedDocument& doc) {
    if (!flag.empty()) {
        return parse_mode(flag);
    }
    if (doc.mode) {
        return *doc.mode;
    }
    throw PreconditionError("no mode given and the pattern file has no mode clause");
}

int verdict(bool value) {
    std::cout << (value ? "true" : "false") << "\n";
    return value ? exit_true : exit_false;
}

RelationKind kind_arg(const std::string& name) {
    auto k = relation_from_name(name);
    if (!k) {
        throw PreconditionError("unknown relation '" + name + "'");
    }
    return *k;
}

ReductionVariant variant_arg(const std::string& name) {
    auto v = variant_from_name(name);
    if (!v) {
        throw PreconditionError("unknown reduction variant '" + name + "'");
    }
    return *v;
}

json substitution_json(const Substitution& h) {
    json j = json::object();
    for (const auto& [var, image] : h) {
        j["x" + std::to_string(var)] = image;
    }
    return j;
}

json report_json(const RunReport& report, bool timings) {
    json suites = json::array();
    for (const SuiteResult& s : report.suites) {
        json entry{{"suite", s.suite}, {"cases", s.cases}, {"passed", s.passed}, {"failed", s.failed}};
        if (timings) {
            entry["seconds"] = s.seconds;
        }
        suites.push_back(entry);
    }
    return json{{"seed", report.seed}, {"all_passed", report.all_passed()}, {"suites", suites}};
}

std::string run_text(const CaRun& run) {
    std::ostringstream out;
    for (const CaConfiguration& c : run) {
        out << "q" << c.state << " " << c.counter1 << " " << c.counter2 << "\n";
    }
    return out.str();
}

std::string utm_text(const UtmConfiguration& c) {
    return "u" + std::to_string(c.state) + " L=" + std::to_string(c.left) + " R=" + std::to_string(c.right);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relational pattern languages toolkit"};
    app.require_subcommand(1);
    int status = exit_true;

    // rel
    std::string rel_name, rel_u, rel_v;
    auto* rel = app.add_subcommand("rel", "Check whether a relation holds between two words");
    rel->add_option("name", rel_name, "Relation name (eq, len, ssq, ab, perm, rev, comstar, composplus, star)")->required();
    rel->add_option("u", rel_u)->required();
    rel->add_option("v", rel_v)->required();
    rel->callback([&] { status = verdict(relation_holds(kind_arg(rel_name), rel_u, rel_v)); });

    // member
    std::string mem_pattern, mem_word, mem_mode;
    bool mem_witness = false, mem_json = false;
    auto* member = app.add_subcommand("member", "Decide membership of a word in a pattern language");
    member->add_option("--pattern", mem_pattern)->required();
    member->add_option("--word", mem_word)->required();
    member->add_option("--mode", mem_mode, "e or ne (defaults to the file's mode clause)");
    member->add_flag("--witness", mem_witness, "Print a witnessing substitution");
    member->add_flag("--json", mem_json);
    member->callback([&] {
        ParsedDocument doc = load_pattern(mem_pattern);
        const Mode mode = resolve_mode(mem_mode, doc);
        auto h = match(mem_word, doc.pattern, mode);
        if (mem_json) {
            json j{{"member", h.has_value()}};
            if (h && mem_witness) {
                j["witness"] = substitution_json(*h);
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (h ? "true" : "false") << "\n";
            if (h && mem_witness) {
                std::cout << format_substitution(*h) << "\n";
            }
        }
        status = h ? exit_true : exit_false;
    });

    // enum
    std::string enum_pattern, enum_mode;
    std::size_t enum_max = 6;
    auto* enumerate = app.add_subcommand("enum", "List the bounded slice of a pattern language");
    enumerate->add_option("--pattern", enum_pattern)->required();
    enumerate->add_option("--mode", enum_mode);
    enumerate->add_option("--max-len", enum_max)->capture_default_str();
    enumerate->callback([&] {
        ParsedDocument doc = load_pattern(enum_pattern);
        for (const Word& w : enumerate_language(doc.pattern, resolve_mode(enum_mode, doc), enum_max).words) {
            std::cout << w << "\n";
        }
    });

    // bincl / beq
    std::string cmp_a, cmp_b, cmp_mode;
    std::size_t cmp_max = 6;
    auto add_compare = [&](const std::string& name, const std::string& help, bool equality) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--a", cmp_a)->required();
        sub->add_option("--b", cmp_b)->required();
        sub->add_option("--mode", cmp_mode);
        sub->add_option("--max-len", cmp_max)->capture_default_str();
        sub->callback([&, equality] {
            ParsedDocument a = load_pattern(cmp_a);
            ParsedDocument b = load_pattern(cmp_b);
            const Mode mode = resolve_mode(cmp_mode, a);
            auto cx = equality ? equality_counterexample(a.pattern, b.pattern, mode, cmp_max)
                               : inclusion_counterexample(a.pattern, b.pattern, mode, cmp_max);
            status = verdict(!cx.has_value());
            if (cx) {
                std::cout << "counterexample: " << (cx->empty() ? "(empty word)" : *cx) << "\n";
            }
        });
    };
    add_compare("bincl", "Bounded inclusion L(a) within L(b) up to a length", false);
    add_compare("beq", "Bounded equality of two pattern languages up to a length", true);

    // equiv
    std::string eq_a, eq_b;
    auto* equiv = app.add_subcommand("equiv", "Decide NE-equivalence for eq, ab or composplus patterns");
    equiv->add_option("--a", eq_a)->required();
    equiv->add_option("--b", eq_b)->required();
    equiv->callback([&] {
        status = verdict(ne_equivalent(load_pattern(eq_a).pattern, load_pattern(eq_b).pattern));
    });

    // reduce
    std::string red_variant = "angluin-ne", red_kind, red_cnf, red_out;
    auto* reduce = app.add_subcommand("reduce", "Build a membership instance from a 3-CNF formula");
    auto* verify = reduce->add_subcommand("verify", "Check membership against brute-force satisfiability");
    for (auto* sub : {reduce, verify}) {
        sub->add_option("--variant", red_variant)->capture_default_str();
        sub->add_option("--kind", red_kind, "Relation kind (defaults to the variant's first kind)");
        sub->add_option("--cnf", red_cnf);
    }
    reduce->add_option("--out", red_out, "Pattern file; the word goes to <out>.word");
    auto kind_for = [&](ReductionVariant v) { return red_kind.empty() ? supported_kinds(v).front() : kind_arg(red_kind); };
    auto load_cnf = [&](ReductionVariant v) {
        CnfFormula phi = parse_dimacs(read_file(red_cnf));
        if (requires_distinct_literals(v) && !phi.has_distinct_clause_literals()) {
            throw PreconditionError(red_cnf + ": variant " + std::string(variant_name(v)) +
                                    " needs three distinct literals in every clause");
        }
        return phi;
    };
    verify->callback([&] {
        if (red_cnf.empty()) {
            throw CLI::RequiredError("--cnf");
        }
        const ReductionVariant v = variant_arg(red_variant);
        status = verdict(verify_reduction(v, kind_for(v), load_cnf(v)));
    });
    reduce->callback([&] {
        if (!verify->parsed()) {
            if (red_cnf.empty() || red_out.empty()) {
                throw CLI::RequiredError("--cnf and --out");
            }
            const ReductionVariant v = variant_arg(red_variant);
            const ReductionInstance inst = generate(v, kind_for(v), load_cnf(v));
            write_file(red_out, print_document(inst.rp, inst.mode));
            write_file(red_out + ".word", inst.word + "\n");
            std::cout << inst.word << "\n";
        }
    });

    // machine
    auto* machine = app.add_subcommand("machine", "Counter automata and the small universal machine");
    machine->require_subcommand(1);
    std::string ca_file, ca_word;
    std::size_t ca_steps = 20;
    auto* ca_run = machine->add_subcommand("ca-run", "Search for an accepting run (breadth first)");
    auto* ca_enc = machine->add_subcommand("ca-encode", "Encode the shortest accepting run");
    for (auto* sub : {ca_run, ca_enc}) {
        sub->add_option("--automaton", ca_file)->required();
        sub->add_option("--max-steps", ca_steps)->capture_default_str();
    }
    ca_run->callback([&] {
        auto run = ca_find_accepting_run(parse_automaton(read_file(ca_file)), ca_steps);
        if (run) {
            std::cout << run_text(*run);
        } else {
            std::cout << "no accepting run within " << ca_steps << " steps\n";
        }
        status = run ? exit_true : exit_false;
    });
    ca_enc->callback([&] {
        auto run = ca_find_accepting_run(parse_automaton(read_file(ca_file)), ca_steps);
        if (run) {
            std::cout << ca_encode(*run) << "\n";
        }
        status = run ? exit_true : exit_false;
    });
    auto* ca_val = machine->add_subcommand("ca-validate", "Check that a word encodes an accepting run");
    ca_val->add_option("--automaton", ca_file)->required();
    ca_val->add_option("--word", ca_word)->required();
    ca_val->callback([&] { status = verdict(ca_validate(ca_word, parse_automaton(read_file(ca_file)))); });

    UtmConfiguration utm_start;
    std::size_t utm_steps = 50;
    std::string utm_word;
    auto add_start = [&](CLI::App* sub) {
        sub->add_option("--state", utm_start.state)->check(CLI::Range(1, utm_state_count))->capture_default_str();
        sub->add_option("--left", utm_start.left, "Code of the head cell and the tape to its left")->capture_default_str();
        sub->add_option("--right", utm_start.right, "Code of the tape right of the head")->capture_default_str();
    };
    auto* utm_run_cmd = machine->add_subcommand("utm-run", "Run the universal machine until it halts");
    add_start(utm_run_cmd);
    utm_run_cmd->add_option("--max-steps", utm_steps)->capture_default_str();
    bool utm_encode_flag = false;
    utm_run_cmd->add_flag("--encode", utm_encode_flag, "Print the encoded computation instead");
    utm_run_cmd->callback([&] {
        auto comp = utm_run(utm_start, utm_steps);
        if (!comp) {
            std::cout << "no halt within " << utm_steps << " configurations\n";
            status = exit_false;
            return;
        }
        if (utm_encode_flag) {
            std::cout << utm_encode(*comp) << "\n";
        } else {
            for (const UtmConfiguration& c : *comp) {
                std::cout << utm_text(c) << "\n";
            }
        }
    });
    auto* utm_val = machine->add_subcommand("utm-validate", "Check an encoded halting computation");
    add_start(utm_val);
    utm_val->add_option("--word", utm_word)->required();
    utm_val->callback([&] { status = verdict(utm_validate(utm_word, utm_start)); });

    // thm3
    auto* thm3 = app.add_subcommand("thm3", "Inclusion construction for counter automata");
    thm3->require_subcommand(1);
    std::string t_automaton, t_out, t_alpha_out, t_kind = "rev", t_sx, t_sy;
    auto* t_build = thm3->add_subcommand("build", "Write the pattern beta_A");
    t_build->add_option("--automaton", t_automaton)->required();
    t_build->add_option("--out", t_out)->required();
    t_build->add_option("--alpha-out", t_alpha_out, "Also write alpha_A");
    t_build->add_option("--kind", t_kind, "rev or ab")->capture_default_str();
    t_build->callback([&] {
        Theorem3Options opts;
        opts.kind = kind_arg(t_kind);
        if (opts.kind != RelationKind::Reversal && opts.kind != RelationKind::AbelianEq) {
            throw PreconditionError("thm3 supports rev and ab only");
        }
        const auto preds = build_predicates(parse_automaton(read_file(t_automaton)), opts);
        const RelationalPattern beta = build_beta_A(preds, opts);
        write_file(t_out, print_document(beta, Mode::Erasing));
        if (!t_alpha_out.empty()) {
            write_file(t_alpha_out, print_document(build_alpha_A(opts), Mode::Erasing));
        }
        std::cout << "predicates: " << preds.size() << "\nlength: " << beta.pattern().size() << "\n";
    });
    auto* t_eval = thm3->add_subcommand("eval", "List the predicates satisfied by sigma");
    t_eval->add_option("--automaton", t_automaton, "Without it only the automaton-independent predicates are checked");
    t_eval->add_option("--sigma-x", t_sx)->required();
    t_eval->add_option("--sigma-y", t_sy)->required();
    t_eval->callback([&] {
        std::vector<PredicateTriple> preds;
        if (t_automaton.empty()) {
            TwoCounterAutomaton trivial(1);
            preds = build_predicates(trivial);
            preds.resize(13);
        } else {
            preds = build_predicates(parse_automaton(read_file(t_automaton)));
        }
        const SigmaAssignment sigma{t_sx, t_sy};
        const auto hits = satisfied_predicates(sigma, preds);
        for (std::size_t i : hits) {
            std::cout << i << " " << preds[i - 1].label << "\n";
        }
        if (hits.empty()) {
            std::cout << "none\n";
        }
        status = hits.empty() ? exit_false : exit_true;
    });

    // report
    std::uint64_t rep_seed = 1;
    std::string rep_out = "report.json";
    bool rep_timings = false;
    auto* report = app.add_subcommand("report", "Run the seeded self-check suites and write report.json");
    report->add_option("--seed", rep_seed)->capture_default_str();
    report->add_option("--out", rep_out)->capture_default_str();
    report->add_flag("--timings", rep_timings, "Include wall-clock seconds (not reproducible)");
    report->callback([&] {
        const RunReport r = run_report(rep_seed);
        write_file(rep_out, report_json(r, rep_timings).dump(2) + "\n");
        for (const SuiteResult& s : r.suites) {
            std::cout << s.suite << ": " << s.passed << "/" << s.cases << "\n";
        }
        status = r.all_passed() ? exit_true : exit_false;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    } catch (const ParseError& e) {
        std::cerr << "relpat: parse error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "relpat: " << e.what() << "\n";
        return exit_error;
    }
    return status;
}
