// Acceptance run: one PASS/FAIL line per criterion with its elapsed time.
// A criterion passes when every check holds and it finishes within its
// time budget. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dbatk/cli.hpp"
#include "dbatk/concepts.hpp"
#include "dbatk/dba.hpp"
#include "dbatk/filters.hpp"
#include "dbatk/random.hpp"
#include "dbatk/representation.hpp"
#include "dbatk/topology.hpp"
#include "support.hpp"

using namespace dbatk;

namespace {

// Collects failed checks; the first few are printed under the criterion.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    std::size_t checks() const { return checks_; }
    std::size_t failed() const { return failed_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

struct Instance {
    std::string name;
    FiniteDba dba;
};

std::vector<FormalContext> axiom_contexts() {
    std::vector<FormalContext> out;
    InstanceRng rng(20240601);
    for (int i = 0; i < 50; ++i) {
        RandomContextOptions o;
        o.objects = rng.between(1, 4);
        o.attributes = rng.between(1, 4);
        out.push_back(random_context(rng, o));
    }
    return out;
}

// The dBas of criterion 2: R(K) and S(K) for every context.
const std::vector<Instance>& context_dbas() {
    static const std::vector<Instance> v = [] {
        std::vector<Instance> out;
        const auto ctxs = axiom_contexts();
        for (std::size_t i = 0; i < ctxs.size(); ++i) {
            out.push_back({"R(K" + std::to_string(i) + ")", build_proto_dba(ctxs[i]).dba()});
            out.push_back({"S(K" + std::to_string(i) + ")", build_semi_dba(ctxs[i]).dba()});
        }
        return out;
    }();
    return v;
}

// Criterion 2 instances plus the Boolean algebras 2ⁿ, n ≤ 3.
std::vector<Instance> identity_instances() {
    auto out = context_dbas();
    for (std::size_t n = 0; n <= 3; ++n)
        out.push_back({"2^" + std::to_string(n), from_boolean(power_set_algebra(n))});
    return out;
}

void criterion1(Checker& c) {
    const auto& k = fixtures::table1();
    auto a1 = k.objects_named({"q1", "q2", "q4", "q6"});
    auto b1 = k.attributes_named({"s3"});
    c.expect(diamond(k, b1) == k.objects_named({"q1", "q2", "q4"}), "B1 diamond");
    c.expect(black_box(k, a1) == k.attributes_named({"s3", "s7", "s10"}), "A1 black box");
    auto p = classify_pair(k, a1, b1);
    c.expect(p.oo_protoconcept, "(A1,B1) is an oo-protoconcept");
    c.expect(!p.is_oo_semiconcept(), "(A1,B1) is not an oo-semiconcept");
    auto s = classify_dba(build_semi_dba(k).dba());
    c.expect(s.pure && !s.fully_contextual, "S(Table 1) pure and not fully contextual");
    auto r = classify_dba(build_proto_dba(k).dba());
    c.expect(r.fully_contextual && !r.pure, "R(Table 1) fully contextual and not pure");
}

void criterion2(Checker& c) {
    for (const auto& [name, d] : context_dbas()) {
        auto v = validate_dba(d);
        c.expect(v.ok(), name + ": axioms");
        c.expect(v.derived_ok(), name + ": derived laws");
        auto laws = check_dba_laws(d);
        c.expect(laws.empty(), name + ": " + (laws.empty() ? "" : laws.front().law));
    }
}

void criterion3(Checker& c) {
    for (const auto& [name, d] : identity_instances()) {
        c.expect(check_locus_identities(d).verdict, name + ": locus identities");
        c.expect(check_clopen_locus_identities(d).verdict, name + ": clopen locus identities");
        c.expect(check_negation_locus(d).verdict, name + ": negation locus");
        c.expect(check_nabla_from_pure_part(d).verdict, name + ": nabla from pure part");
    }
}

void criterion4(Checker& c) {
    for (const auto& [name, d] : identity_instances()) {
        auto cls = classify_dba(d);
        auto oo = rep_map_oo(d);
        c.expect(oo.hom.homomorphism && oo.hom.quasi_injective, name + ": oo map quasi-injective");
        c.expect(oo.hom.injective == cls.contextual, name + ": injective iff contextual");
        c.expect(oo.hom.is_isomorphism() == cls.fully_contextual, name + ": iso iff fully contextual");
        if (cls.pure) c.expect(oo.onto_semiconcepts, name + ": iso onto the semiconcepts");
        c.expect(oo.ladder_consistent, name + ": ladder");
        auto w = rep_map_wille(d);
        c.expect(w.hom.homomorphism && w.hom.quasi_injective, name + ": classical map quasi-injective");
        auto a = finite_rep_atoms(d);
        c.expect(a.matches_standard_context && a.complement_form_matches && a.verdicts_match,
                 name + ": atom/coatom context");
        c.expect(characterize_pure_part(d).verdict, name + ": pure part");
    }
}

void criterion5(Checker& c) {
    InstanceRng rng(5150);
    for (int t = 0; t < 120; ++t) {
        RandomContextOptions o;
        o.objects = rng.between(1, 5);
        o.attributes = rng.between(1, 5);
        auto k = random_cts(rng, o);
        const auto tag = "cts #" + std::to_string(t);
        const bool lo = oracle::lower_semicontinuous(k), up = oracle::upper_semicontinuous(k);
        const bool conv = oracle::converse_continuous(k);
        c.expect(is_lower_semicontinuous(k) == lo && is_lower_semicontinuous_pointwise(k) == lo, tag + ": lower");
        c.expect(is_upper_semicontinuous(k) == up && is_upper_semicontinuous_pointwise(k) == up, tag + ": upper");
        c.expect(is_converse_continuous(k) == conv && is_converse_continuous_pointwise(k) == conv, tag + ": converse");
        c.expect(k.is_ctscr() == (lo && up && conv), tag + ": CTSCR");
    }
    for (std::size_t nx = 1; nx <= 3; ++nx)
        for (std::size_t ny = 1; ny <= 4; ++ny) {
            std::vector<std::size_t> cols(ny);
            std::iota(cols.begin(), cols.end(), 0);
            for (std::size_t len = 1; len <= ny; ++len) {
                auto k = fixtures::constant_column_cts(nx, ny, {cols.begin(), cols.begin() + len});
                c.expect(validate_ctscr(k), "constant column " + std::to_string(nx) + "x" + std::to_string(ny));
            }
        }
    auto lower = fixtures::lower_counterexample();
    c.expect(!is_lower_semicontinuous(lower) && !is_lower_semicontinuous_pointwise(lower), "counterexample is lower");
}

void stone_round_trip(Checker& c, const Cts& k, const std::string& tag) {
    c.expect(is_stone_context(k), tag + ": Stone context");
    auto r = k_maps(k);
    c.expect(r.verdict, tag + ": k-maps " + r.counterexample);
    c.expect(r.hom.cls == CtsHomClass::Homeomorphism, tag + ": homeomorphism");
    c.expect(r.induced.is_isomorphism(), tag + ": induced iso");
}

void criterion6(Checker& c) {
    InstanceRng rng(6006);
    for (int t = 0; t < 24; ++t) {
        RandomContextOptions o;
        o.objects = rng.between(1, 4);
        o.attributes = rng.between(1, 4);
        stone_round_trip(c, Cts::discrete(random_context(rng, o)), "discrete #" + std::to_string(t));
    }
    for (const auto& [name, d] : context_dbas()) stone_round_trip(c, build_kpr_cts(d), "K_pr " + name);
}

void criterion7(Checker& c) {
    auto alg = build_proto_dba(fixtures::make_context(2, 2, {{0, 0}, {1, 1}}));
    const auto& d = alg.dba();
    auto p = pure_part(d);
    auto autos = find_automorphisms(p.algebra);
    c.expect(autos.size() >= 2, "pure part has a nontrivial automorphism");
    std::vector<std::vector<Index>> full;
    for (const auto& a : autos) {
        auto e = extend_pure_iso(d, d, a);
        c.expect(e.hom.is_isomorphism(), "extension is an iso");
        c.expect(functor_G(d, d, e.hom.map).restriction.map == a, "restriction recovers the input");
        full.push_back(e.hom.map);
    }
    c.expect(!full.empty() && full.front() == identity_map(d.size()), "identity extends to the identity");
    c.expect(check_functor_G_laws(d, full).verdict, "G laws");

    auto semi = build_semi_dba(fixtures::make_context(2, 2, {{0, 0}, {1, 1}}));
    auto sautos = find_automorphisms(semi.dba());
    for (const auto& f : sautos) c.expect(functor_F(semi.dba(), semi.dba(), f).square_commutes, "square commutes");
    c.expect(check_functor_F_laws(semi.dba(), sautos).verdict, "F laws");

    for (std::size_t n = 1; n <= 3; ++n) {
        auto b = from_boolean(power_set_algebra(n));
        auto kpr = build_kpr_cts(b);
        const auto& nabla = kpr.context();
        bool bijection = nabla.num_objects() == n && nabla.num_attributes() == n;
        for (std::size_t i = 0; bijection && i < n; ++i)
            bijection = nabla.row(i).count() == 1 && nabla.column(i).count() == 1;
        c.expect(bijection, "nabla of 2^" + std::to_string(n) + " is a bijection");
        c.expect(to_boolean(build_clopen_proto_dba(kpr).dba()).has_value(),
                 "clopen algebra of 2^" + std::to_string(n) + " is Boolean");
    }
}

std::string cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
}

void criterion8(Checker& c) {
    const auto table1 = fixtures::data_path("table1.cxt");
    const auto small = (std::filesystem::temp_directory_path() / "dbatk_acceptance_small.cxt").string();
    save_context(small, fixtures::make_context(3, 3, {{0, 0}, {0, 2}, {1, 1}, {2, 1}, {2, 2}}));
    const std::vector<std::vector<std::string>> commands = {
        {"random", "--seed", "42"},
        {"random", "--seed", "7", "-g", "4", "-m", "5", "--cts"},
        {"random", "--seed", "9", "--algebra", "semi"},
        {"enumerate", "--kind", "oo-semi", table1},
        {"enumerate", "--kind", "concept", "--dot", table1},
        {"verify", "--suite", "all", "--algebra", "semi", small},
        {"verify", "--suite", "all", "--algebra", "proto", small},
        {"verify", "--suite", "stone-roundtrip", "--discrete", table1},
    };
    for (const auto& cmd : commands) {
        auto a = cli(cmd), b = cli(cmd);
        c.expect(a == b, "rerun differs: " + cmd[0] + " " + cmd[1] + " " + cmd[2]);
        c.expect(a.rfind("0\n", 0) == 0, "exit 0: " + cmd[0] + " " + cmd[1] + " " + cmd[2]);
    }
}

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Table 1 witnesses", 1.0, criterion1},
        {2, "axioms on 50 random contexts", 60.0, criterion2},
        {3, "filter and ideal identities", 60.0, criterion3},
        {4, "representation ladder", 120.0, criterion4},
        {5, "continuity oracle agreement", 60.0, criterion5},
        {6, "Stone round trip", 120.0, criterion6},
        {7, "duality and extension", 60.0, criterion7},
        {8, "determinism", 600.0, criterion8},
    };
    // Build the shared instances outside the timed regions.
    context_dbas();
    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        const auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = error.empty() && c.ok() && s < cr.budget_s;
        if (!pass) ++failed;
        std::printf("%s criterion %d %s: %zu/%zu checks, %.3f s (limit %.0f s)\n", pass ? "PASS" : "FAIL", cr.id,
                    cr.title.c_str(), c.checks() - c.failed(), c.checks(), s, cr.budget_s);
        if (!error.empty()) std::printf("  exception: %s\n", error.c_str());
        for (const auto& f : c.failures()) std::printf("  failed: %s\n", f.c_str());
        std::fflush(stdout);
    }
    return failed;
}
