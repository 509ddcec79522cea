#include "dbatk/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "dbatk/concepts.hpp"
#include "dbatk/context_io.hpp"
#include "dbatk/dba_io.hpp"
#include "dbatk/error.hpp"
#include "dbatk/random.hpp"
#include "dbatk/representation.hpp"
#include "dbatk/topology.hpp"

namespace dbatk {

namespace {

constexpr std::size_t kAutomorphismSample = 6;

struct Input {
    std::string text;
    std::optional<FormalContext> context;
    std::optional<Cts> cts;
    std::optional<FiniteDba> dba;
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Input load_input(const std::string& path) {
    Input in;
    in.text = read_file(path);
    if (!ends_with(path, ".json")) {
        in.context = parse_cxt(in.text);
        return in;
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in.text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (j.is_object() && j.contains("meet")) {
        in.dba = dba_from_json(j);
    } else if (j.is_object() && j.contains("object_opens")) {
        in.cts = cts_from_json(j);
        in.context = in.cts->context();
    } else {
        in.context = context_from_json(j);
    }
    return in;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

std::string replace_extension(const std::string& path, const std::string& ext) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
    return path.substr(0, dot) + ext;
}

std::string pair_dot(const FormalContext& ctx, PairKind kind, const std::vector<ConceptPair>& elems) {
    const bool oo = kind == PairKind::OoConcept || kind == PairKind::OoSemiconcept || kind == PairKind::OoProtoconcept;
    std::vector<CarrierSet> up(elems.size(), CarrierSet(elems.size()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        labels.push_back(format_pair(ctx, elems[i]));
        for (std::size_t k = 0; k < elems.size(); ++k)
            if (oo ? pair_leq_oo(elems[i], elems[k]) : pair_leq_wille(elems[i], elems[k])) up[i].set(k);
    }
    return hasse_dot(up, labels, to_string(kind));
}

struct Common {
    unsigned cap = EnumerationLimits::kDefaultExponent;
    bool force = false;
    bool timing = false;

    EnumerationLimits limits() const {
        if (cap > EnumerationLimits::kDefaultExponent && !force)
            throw CLI::ValidationError("--cap", "raising the cap above " +
                                                    std::to_string(EnumerationLimits::kDefaultExponent) +
                                                    " requires --force");
        EnumerationLimits l;
        l.max_exponent = cap;
        l.force = force;
        return l;
    }
};

class SuiteRunner {
public:
    SuiteRunner(bool timing) : timing_(timing) {}

    void run(const std::string& name, const std::function<TheoremReport()>& f) {
        const auto t0 = std::chrono::steady_clock::now();
        TheoremReport r;
        try {
            r = f();
        } catch (const HypothesisError& e) {
            r = {name, false, e.what()};
        } catch (const InternalInconsistency& e) {
            r = {name, false, std::string("internal inconsistency: ") + e.what()};
        }
        r.theorem = name;
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        reports_.push_back({r, timing_ ? ms.count() : 0});
    }

    bool all_hold() const {
        return std::all_of(reports_.begin(), reports_.end(), [](const auto& e) { return e.first.verdict; });
    }

    nlohmann::json to_json(const std::string& digest) const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [r, ms] : reports_) arr.push_back(report_to_json(r, digest, ms));
        return arr;
    }

    void summary(std::ostream& out) const {
        for (const auto& [r, ms] : reports_) {
            out << (r.verdict ? "PASS " : "FAIL ") << r.theorem;
            if (!r.verdict) out << ": " << r.counterexample;
            out << '\n';
        }
    }

private:
    bool timing_;
    std::vector<std::pair<TheoremReport, std::int64_t>> reports_;
};

std::string first_violation(const std::vector<LawViolation>& vs, const FiniteDba& d) {
    if (vs.empty()) return {};
    const auto& v = vs.front();
    std::string s = v.law + " (" + std::to_string(v.failures) + " failures)";
    if (!v.witnesses.empty()) {
        s += " at";
        for (auto x : v.witnesses.front()) s += " " + d.label(x);
    }
    return s;
}

void axioms_suite(SuiteRunner& run, const FiniteDba& d) {
    ValidationReport rep;
    run.run("dBa axioms", [&] {
        rep = validate_dba(d);
        return TheoremReport{"", rep.ok(), first_violation(rep.axioms, d)};
    });
    run.run("derived dBa identities",
            [&] { return TheoremReport{"", rep.derived_ok(), first_violation(rep.derived, d)}; });
    run.run("further dBa laws", [&] {
        auto vs = check_dba_laws(d);
        return TheoremReport{"", vs.empty(), first_violation(vs, d)};
    });
}

void representation_suite(SuiteRunner& run, const FiniteDba& d, const EnumerationLimits& limits) {
    run.run("representation h(x) = (F_¬x, I_x)", [&] {
        auto r = rep_map_oo(d, limits);
        return TheoremReport{"", r.ladder_consistent, r.counterexample};
    });
    run.run("classical representation h(x) = (F_x, I_x)", [&] {
        auto r = rep_map_wille(d, limits);
        return TheoremReport{"", r.ladder_consistent && r.transport_consistent, r.counterexample};
    });
    run.run("atom/coatom representation", [&] {
        auto r = finite_rep_atoms(d, limits);
        const bool ok = r.hom.homomorphism && r.hom.quasi_injective && r.matches_standard_context &&
                        r.complement_form_matches && r.verdicts_match;
        return TheoremReport{"", ok, r.counterexample};
    });
    run.run("pure part characterization", [&] { return characterize_pure_part(d, limits); });
    run.run("locus identities", [&] { return check_locus_identities(d); });
    run.run("modal locus identities", [&] { return check_clopen_locus_identities(d); });
    run.run("negation locus", [&] { return check_negation_locus(d); });
    run.run("∇ from the pure part", [&] { return check_nabla_from_pure_part(d, limits); });
}

void stone_suite(SuiteRunner& run, const Cts& stone, const EnumerationLimits& limits) {
    run.run("Stone context", [&] {
        auto s = check_stone_context(stone, limits);
        return TheoremReport{"", s.ok(), s.counterexample};
    });
    run.run("k-map round trip", [&] {
        auto k = k_maps(stone, limits);
        return TheoremReport{"", k.verdict, k.counterexample};
    });
}

void duality_suite(SuiteRunner& run, const FiniteDba& d, const EnumerationLimits& limits) {
    const auto c = classify_dba(d);
    if (c.fully_contextual) {
        run.run("pure-part isomorphisms extend uniquely", [&] {
            const auto pure = pure_part(d);
            for (const auto& a : find_automorphisms(pure.algebra, kAutomorphismSample)) {
                auto ext = extend_pure_iso(d, d, a);
                if (!ext.hom.is_isomorphism() || !ext.unique)
                    return TheoremReport{"", false, "extension is not a unique isomorphism"};
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (ext.hom.map[pure.embedding[i]] != pure.embedding[a[i]])
                        return TheoremReport{"", false, "restriction does not recover the pure-part map at " +
                                                            d.label(pure.embedding[i])};
            }
            return TheoremReport{"", true, {}};
        });
        run.run("functor G laws", [&] { return check_functor_G_laws(d, find_automorphisms(d, kAutomorphismSample)); });
    }
    run.run("functor F laws and commuting squares", [&] {
        if (c.pure) return check_functor_F_laws(d, find_automorphisms(d, kAutomorphismSample), limits);
        const auto pure = pure_part(d);
        return check_functor_F_laws(pure.algebra, find_automorphisms(pure.algebra, kAutomorphismSample), limits);
    });
    if (to_boolean(d)) {
        run.run("Boolean spectrum", [&] {
            auto pc = build_primary_cts(d, limits);
            const auto& ctx = pc.cts.context();
            for (std::size_t g = 0; g < ctx.num_objects(); ++g)
                if (ctx.row(g).count() != 1) return TheoremReport{"", false, "∇ is not a bijection at " + ctx.objects()[g]};
            for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
                if (ctx.column(m).count() != 1)
                    return TheoremReport{"", false, "∇ is not a bijection at " + ctx.attributes()[m]};
            auto r = build_clopen_proto_dba(pc.cts, limits);
            if (!to_boolean(r.dba())) return TheoremReport{"", false, "clopen algebra is not Boolean"};
            return TheoremReport{"", true, {}};
        });
    }
}

PairKind algebra_kind(const std::string& a) { return a == "semi" ? PairKind::OoSemiconcept : PairKind::OoProtoconcept; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite double Boolean algebras, concept algebras and topologized contexts", "dbatk"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cap", common.cap, "Enumeration cap as the exponent |G|+|M|")->check(CLI::Range(1u, 60u));
        sub->add_flag("--force", common.force, "Allow caps above the default and large tables");
    };

    std::string input, out_path, kind_name = "oo-proto", suite, algebra = "proto";
    bool dot = false, discrete = false;

    auto* en = app.add_subcommand("enumerate", "Enumerate pairs of a context and dump the algebra");
    en->add_option("input", input, "Context (.cxt/.json) or CTS (.json)")->required();
    en->add_option("--kind", kind_name, "concept|oo-concept|semi|proto|oo-semi|oo-proto")
        ->check(CLI::IsMember({"concept", "oo-concept", "semi", "proto", "oo-semi", "oo-proto"}));
    en->add_option("--out", out_path, "Output path (stdout when omitted)");
    en->add_flag("--dot", dot, "Also emit the Hasse diagram (next to --out, or instead of JSON on stdout)");
    add_common(en);

    auto* ve = app.add_subcommand("verify", "Run a theorem suite");
    ve->add_option("input", input, "Context, CTS or dBa file")->required();
    ve->add_option("--suite", suite, "axioms|representation|stone-roundtrip|duality|all")->required();
    ve->add_option("--algebra", algebra, "Algebra built from a context input")->check(CLI::IsMember({"proto", "semi"}));
    ve->add_option("--out", out_path, "Report path (stdout when omitted)");
    ve->add_flag("--discrete", discrete, "Read the input with discrete topologies");
    ve->add_flag("--timing", common.timing, "Record elapsed time in reports");
    add_common(ve);

    std::uint64_t seed = 0;
    RandomContextOptions ropts;
    double density = -1;
    bool with_topology = false;
    std::string random_algebra;
    auto* ra = app.add_subcommand("random", "Generate a seeded random instance");
    ra->add_option("--seed", seed, "Generator seed");
    ra->add_option("--objects,-g", ropts.objects, "Number of objects")->check(CLI::Range(0, 20));
    ra->add_option("--attributes,-m", ropts.attributes, "Number of attributes")->check(CLI::Range(0, 20));
    ra->add_option("--density", density, "Incidence probability (random in [0.2,0.8] when omitted)")
        ->check(CLI::Range(0.0, 1.0));
    ra->add_flag("--cts", with_topology, "Also draw random topologies and write a CTS");
    ra->add_option("--algebra", random_algebra, "Write the proto/semi dBa of the context instead")
        ->check(CLI::IsMember({"proto", "semi"}));
    ra->add_option("--out", out_path, "Output path (stdout when omitted)");
    add_common(ra);

    std::vector<const char*> argv{"dbatk"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const auto limits = common.limits();
        if (*en) {
            const auto kind = *parse_pair_kind(kind_name);
            const auto in = load_input(input);
            if (!in.context) throw ParseError(input + ": expected a context or CTS");
            const auto& ctx = *in.context;
            std::vector<ConceptPair> elems;
            std::optional<ConceptAlgebra> alg;
            const bool clopen = in.cts && (kind == PairKind::OoProtoconcept || kind == PairKind::OoSemiconcept);
            if (clopen && in.cts->is_ctscr())
                alg = kind == PairKind::OoProtoconcept ? build_clopen_proto_dba(*in.cts, limits)
                                                       : build_clopen_semi_dba(*in.cts, limits);
            else if (clopen)
                elems = kind == PairKind::OoProtoconcept ? enumerate_clopen_oo_protoconcepts(*in.cts, limits)
                                                         : enumerate_clopen_oo_semiconcepts(*in.cts, limits);
            else if (kind == PairKind::Concept || kind == PairKind::OoConcept)
                elems = enumerate_pairs(ctx, kind, limits);
            else
                alg = build_algebra(ctx, kind, limits);
            if (alg) elems = alg->elements();
            const auto json = algebra_to_json(ctx, kind, elems, alg ? &alg->dba() : nullptr).dump(2) + "\n";
            if (dot) {
                const auto diagram = alg ? hasse_dot(alg->dba(), to_string(kind)) : pair_dot(ctx, kind, elems);
                if (out_path.empty()) {
                    out << diagram;
                } else {
                    write_file(out_path, json);
                    write_file(replace_extension(out_path, ".dot"), diagram);
                }
            } else {
                emit(out_path, json, out);
            }
            return kExitOk;
        }

        if (*ve) {
            static const std::vector<std::string> suites{"axioms", "representation", "stone-roundtrip", "duality", "all"};
            if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
                err << "unknown suite '" << suite << "'\n";
                return kExitUsage;
            }
            auto in = load_input(input);
            std::optional<FiniteDba> d = in.dba;
            auto need_dba = [&]() -> const FiniteDba& {
                if (!d) d = build_algebra(*in.context, algebra_kind(algebra), limits).dba();
                return *d;
            };
            SuiteRunner runner(common.timing);
            const bool all = suite == "all";
            if (all || suite == "axioms") axioms_suite(runner, need_dba());
            if (all || suite == "representation") representation_suite(runner, need_dba(), limits);
            if (all || suite == "stone-roundtrip") {
                if (in.context && (discrete || in.cts)) {
                    stone_suite(runner, discrete ? Cts::discrete(*in.context) : *in.cts, limits);
                } else {
                    // No topology given: round trip through the spectrum of the algebra.
                    stone_suite(runner, build_kpr_cts(need_dba(), limits), limits);
                }
            }
            if (all || suite == "duality") duality_suite(runner, need_dba(), limits);
            const auto json = runner.to_json(fnv1a_digest(in.text)).dump(2) + "\n";
            if (out_path.empty()) {
                out << json;
            } else {
                write_file(out_path, json);
                runner.summary(out);
            }
            return runner.all_hold() ? kExitOk : kExitVerificationFailed;
        }

        if (*ra) {
            if (density >= 0) ropts.density = density;
            InstanceRng rng(seed);
            const std::string name = "random seed=" + std::to_string(seed);
            auto named = [&](const FormalContext& c) {
                return FormalContext(c.objects(), c.attributes(), c.incidence_matrix(), name);
            };
            std::string text;
            if (with_topology) {
                auto cts = random_cts(rng, ropts);
                text = cts_to_json(Cts(named(cts.context()), cts.object_topology(), cts.attribute_topology())).dump(2) + "\n";
            } else {
                const auto ctx = named(random_context(rng, ropts));
                if (!random_algebra.empty())
                    text = dba_to_json(build_algebra(ctx, algebra_kind(random_algebra), limits).dba()).dump(2) + "\n";
                else if (ends_with(out_path, ".json"))
                    text = context_to_json(ctx).dump(2) + "\n";
                else
                    text = format_cxt(ctx);
            }
            emit(out_path, text, out);
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kExitCap;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const HypothesisError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace dbatk
