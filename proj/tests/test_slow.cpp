#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "dbatk/cli.hpp"
#include "dbatk/concepts.hpp"
#include "dbatk/dba.hpp"
#include "dbatk/representation.hpp"
#include "support.hpp"

using namespace dbatk;
using fixtures::table1;

// Whole-table sweeps on the Table 1 algebras; several seconds each.
TEST_SUITE("slow") {

TEST_CASE("Table 1 algebras satisfy every axiom") {
    for (const auto& a : {build_proto_dba(table1()), build_semi_dba(table1())}) {
        auto r = validate_dba(a.dba());
        CHECK(r.ok());
        CHECK(r.derived_ok());
    }
}

TEST_CASE("representation of the Table 1 semiconcept algebra") {
    auto s = build_semi_dba(table1());
    const auto& d = s.dba();
    auto c = classify_dba(d);
    CHECK(c.pure);

    auto r = rep_map_oo(d);
    CHECK(r.hom.is_isomorphism() == c.fully_contextual);
    CHECK(r.hom.quasi_injective);
    CHECK(r.onto_semiconcepts);
    CHECK(r.ladder_consistent);

    auto a = finite_rep_atoms(d);
    CHECK(a.k_ac.num_objects() == 6);
    CHECK(a.k_ac.num_attributes() == 11);
    CHECK(a.matches_standard_context);
    CHECK(a.complement_form_matches);

    CHECK(characterize_pure_part(d).verdict);

    auto kpr = build_kpr_cts(d);
    CHECK(kpr.context().num_objects() == 6);
    CHECK(kpr.context().num_attributes() == 11);
    CHECK(is_stone_context(kpr));
}

TEST_CASE("CLI representation suite on Table 1") {
    std::ostringstream out, err;
    int code = run_cli({"verify", "--suite", "representation", "--algebra", "semi", fixtures::data_path("table1.cxt")},
                       out, err);
    CHECK(code == kExitOk);
    auto reports = nlohmann::json::parse(out.str());
    CHECK(reports.size() > 0);
    for (const auto& rep : reports) CHECK(rep["verdict"] == true);
}

}  // TEST_SUITE
