#include <doctest.h>

#include <algorithm>

#include "dbatk/concepts.hpp"
#include "dbatk/dba.hpp"
#include "dbatk/dba_io.hpp"
#include "dbatk/error.hpp"
#include "dbatk/random.hpp"
#include "support.hpp"

using namespace dbatk;
using fixtures::boolean_dba;
using fixtures::table1;

namespace {

FiniteDba with_tables(const FiniteDba& d, std::vector<Index> meet, std::vector<Index> join, std::vector<Index> neg,
                      std::vector<Index> opp) {
    return FiniteDba(d.size(), std::move(meet), std::move(join), std::move(neg), std::move(opp), d.top(), d.bot(),
                     d.labels());
}

std::vector<Index> copy(std::span<const Index> s) { return {s.begin(), s.end()}; }

bool has_law(const std::vector<LawViolation>& v, const std::string& prefix) {
    return std::any_of(v.begin(), v.end(), [&](const LawViolation& l) { return l.law.rfind(prefix, 0) == 0; });
}

std::vector<FormalContext> small_contexts(std::size_t count, std::uint64_t seed, std::size_t max_side = 3) {
    std::vector<FormalContext> out;
    InstanceRng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        RandomContextOptions o;
        o.objects = rng.between(1, max_side);
        o.attributes = rng.between(1, max_side);
        out.push_back(random_context(rng, o));
    }
    return out;
}

const FormalContext& table1_corner() {
    static const FormalContext k = subcontext(table1(), table1().objects_named({"q1", "q2", "q3"}),
                                              table1().attributes_named({"s1", "s2", "s3", "s4"}));
    return k;
}

}  // namespace

TEST_SUITE("dba") {

TEST_CASE("Boolean algebras give valid dBas") {
    for (std::size_t k : {0u, 1u, 2u, 3u}) {
        auto d = boolean_dba(k);
        CHECK(d.size() == (1u << k));
        CHECK(validate_dba(d).ok());
        CHECK(validate_dba(d).derived_ok());
        CHECK(oracle::axiom_failures(d) == 0);
        CHECK(d.neg(d.bot()) == d.top());
        auto c = classify_dba(d);
        CHECK(c.contextual);
        CHECK(c.fully_contextual);
        CHECK(c.pure);
        CHECK(pure_part(d).algebra.size() == d.size());
    }
}

TEST_CASE("a corrupted negation table is reported with the violated axiom") {
    auto d = boolean_dba(1);
    auto neg = copy(d.neg_table());
    neg[d.top()] = d.top();
    auto bad = with_tables(d, copy(d.meet_table()), copy(d.join_table()), neg, copy(d.opp_table()));
    auto r = validate_dba(bad);
    CHECK_FALSE(r.ok());
    CHECK(has_law(r.axioms, "(11a)"));
    CHECK(oracle::axiom_failures(bad) > 0);
}

TEST_CASE("validation agrees with the literal axiom sweep on perturbed tables") {
    InstanceRng rng(99);
    for (const auto& k : small_contexts(25, 31, 2)) {
        auto alg = build_semi_dba(k);
        const auto& d = alg.dba();
        CHECK(validate_dba(d).ok());
        auto meet = copy(d.meet_table());
        auto join = copy(d.join_table());
        auto neg = copy(d.neg_table());
        auto opp = copy(d.opp_table());
        const auto n = d.size();
        switch (rng.between(0, 3)) {
            case 0: meet[rng.between(0, n * n - 1)] = static_cast<Index>(rng.between(0, n - 1)); break;
            case 1: join[rng.between(0, n * n - 1)] = static_cast<Index>(rng.between(0, n - 1)); break;
            case 2: neg[rng.between(0, n - 1)] = static_cast<Index>(rng.between(0, n - 1)); break;
            default: opp[rng.between(0, n - 1)] = static_cast<Index>(rng.between(0, n - 1)); break;
        }
        auto p = with_tables(d, meet, join, neg, opp);
        CHECK(validate_dba(p).ok() == (oracle::axiom_failures(p) == 0));
    }
}

TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS(FiniteDba(2, {0, 0, 0}, {0, 0, 0, 0}, {0, 0}, {0, 0}, 0, 1), DimensionError);
    CHECK_THROWS_AS(FiniteDba(2, {0, 0, 0, 5}, {0, 0, 0, 0}, {0, 0}, {0, 0}, 0, 1), DimensionError);
    CHECK_THROWS_AS(FiniteDba(2, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0}, {0, 0}, 0, 2), DimensionError);
}

TEST_CASE("derived laws hold on concept algebras") {
    for (const auto& k : small_contexts(15, 37)) {
        for (const auto& a : {build_proto_dba(k), build_semi_dba(k)}) {
            auto r = validate_dba(a.dba());
            CHECK(r.ok());
            CHECK(r.derived_ok());
            CHECK(check_dba_laws(a.dba()).empty());
        }
    }
}

TEST_CASE("quasi-order") {
    auto r = build_proto_dba(fixtures::make_context(2, 3, {{0, 0}, {0, 2}, {1, 1}}));
    QuasiOrder q(r.dba());
    CHECK(q.is_reflexive());
    CHECK(q.is_transitive());
    for (Index x = 0; x < r.size(); ++x) {
        CHECK(q.leq(r.dba().bot(), x));
        CHECK(q.leq(x, r.dba().top()));
        for (Index y = 0; y < r.size(); ++y) CHECK(q.leq(x, y) == oracle::leq(r.dba(), x, y));
    }

    auto b = power_set_algebra(2);
    auto d = from_boolean(b);
    QuasiOrder qb(d);
    for (Index x = 0; x < 4; ++x)
        for (Index y = 0; y < 4; ++y) CHECK(qb.leq(x, y) == (b.meet_of(x, y) == x));
}

TEST_CASE("pure part") {
    auto r = build_proto_dba(table1_corner());
    auto p = pure_part(r.dba());
    CHECK(classify_dba(p.algebra).pure);
    auto pp = pure_part(p.algebra);
    CHECK(pp.algebra.size() == p.algebra.size());
    CHECK(pp.algebra == p.algebra);
    for (Index i = 0; i < r.size(); ++i) {
        bool in = std::find(p.embedding.begin(), p.embedding.end(), i) != p.embedding.end();
        CHECK(in == r.dba().in_pure_part(i));
    }
}

TEST_CASE("Boolean reducts of the Table 1 protoconcept algebra") {
    auto r = build_proto_dba(table1());
    auto red = boolean_reducts(r.dba());
    CHECK(red.meet_part.elements.size() == 64);
    CHECK(red.meet_part.atoms.size() == 6);
    CHECK(red.join_part.elements.size() == 2048);
    CHECK(red.join_part.coatoms.size() == 11);

    auto d = boolean_dba(2);
    auto rb = boolean_reducts(d);
    CHECK(rb.meet_part.elements.size() == 4);
    CHECK(rb.join_part.elements.size() == 4);
}

TEST_CASE("Boolean bridges") {
    auto b = power_set_algebra(3);
    auto back = to_boolean(from_boolean(b));
    REQUIRE(back.has_value());
    CHECK(back->meet == b.meet);
    CHECK(back->join == b.join);
    CHECK(back->complement == b.complement);
    CHECK_FALSE(to_boolean(build_proto_dba(table1()).dba()).has_value());
    CHECK_FALSE(to_boolean(build_semi_dba(table1()).dba()).has_value());

    auto broken = b;
    broken.complement[1] = 1;
    CHECK_FALSE(validate_boolean(broken).ok);
    CHECK_THROWS_AS(from_boolean(broken), HypothesisError);
}

TEST_CASE("finite joins and meets") {
    auto d = boolean_dba(2);
    std::vector<Index> all = {0, 1, 2, 3};
    CHECK(finite_vee(d, all) == d.top());
    CHECK(finite_wedge(d, all) == d.bot());
    std::vector<Index> one = {1};
    CHECK(finite_vee(d, one) == d.vee(1, 1));
    CHECK_THROWS_AS(finite_vee(d, std::vector<Index>{}), DimensionError);
}

TEST_CASE("homomorphism checks") {
    auto s = build_semi_dba(table1());
    auto r = build_proto_dba(table1());
    std::vector<Index> incl;
    for (const auto& p : s.elements()) incl.push_back(r.require_index(p.extent, p.intent));
    auto h = check_hom(s.dba(), r.dba(), incl);
    CHECK(h.homomorphism);
    CHECK(h.injective);
    CHECK_FALSE(h.surjective);

    auto id = check_hom(r.dba(), r.dba(), identity_map(r.size()));
    CHECK(id.is_isomorphism());

    auto b = boolean_dba(2);
    auto constant = check_hom(b, b, std::vector<Index>(4, b.top()));
    CHECK_FALSE(constant.homomorphism);
    CHECK_FALSE(constant.counterexample.empty());
    CHECK_THROWS_AS(check_hom(b, b, {0, 1}), DimensionError);
}

TEST_CASE("map utilities") {
    std::vector<Index> f = {2, 0, 1}, g = {1, 2, 0};
    CHECK(compose(g, f) == std::vector<Index>{0, 1, 2});
    CHECK(inverse_map(f) == g);
    CHECK_THROWS_AS(inverse_map({0, 0, 1}), DimensionError);
    auto b = boolean_dba(2);
    // the two atoms can be swapped
    CHECK(find_automorphisms(b).size() == 2);
}

TEST_CASE("unique extension of pure isomorphisms") {
    auto r = build_proto_dba(table1_corner());
    const auto& d = r.dba();
    auto p = pure_part(d);

    auto ext = extend_pure_iso(d, d, identity_map(p.algebra.size()));
    CHECK(ext.hom.is_isomorphism());
    CHECK(ext.unique);
    CHECK(ext.hom.map == identity_map(d.size()));

    auto autos = find_automorphisms(p.algebra);
    REQUIRE(!autos.empty());
    for (const auto& a : autos) {
        auto e = extend_pure_iso(d, d, a);
        CHECK(e.hom.is_isomorphism());
        for (Index i = 0; i < p.algebra.size(); ++i) CHECK(e.hom.map[p.embedding[i]] == p.embedding[a[i]]);
    }

    auto dropped = identity_map(p.algebra.size());
    dropped[1] = dropped[0];
    CHECK_THROWS_AS(extend_pure_iso(d, d, dropped), HypothesisError);
    auto s = build_semi_dba(table1());
    CHECK_THROWS_AS(extend_pure_iso(s.dba(), s.dba(), identity_map(s.size())), HypothesisError);
}

TEST_CASE("json round trip") {
    auto r = build_proto_dba(fixtures::make_context(2, 2, {{0, 0}, {1, 1}}));
    CHECK(dba_from_json(dba_to_json(r.dba())) == r.dba());
    auto j = dba_to_json(r.dba());
    j["meet"][0][0] = 1000;
    CHECK_THROWS(dba_from_json(j));
}

}  // TEST_SUITE
