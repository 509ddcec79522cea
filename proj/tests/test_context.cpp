#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dbatk/context.hpp"
#include "dbatk/context_io.hpp"
#include "dbatk/error.hpp"
#include "dbatk/random.hpp"
#include "support.hpp"

using namespace dbatk;
using fixtures::table1;

namespace {

ObjectSet objs(const FormalContext& c, std::vector<std::string> names) { return c.objects_named(names); }
AttributeSet atts(const FormalContext& c, std::vector<std::string> names) { return c.attributes_named(names); }

const FormalContext& example_relation() {
    static const FormalContext c = fixtures::example_cts().context();
    return c;
}

std::vector<FormalContext> small_contexts(std::size_t count, std::uint64_t seed) {
    std::vector<FormalContext> out;
    InstanceRng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        RandomContextOptions o;
        o.objects = rng.between(1, 4);
        o.attributes = rng.between(1, 4);
        out.push_back(random_context(rng, o));
    }
    return out;
}

}  // namespace

TEST_SUITE("context") {

TEST_CASE("classical derivation on Table 1") {
    const auto& k = table1();
    CHECK(derive_intent(k, objs(k, {"q1", "q4"})) == atts(k, {"s1", "s3", "s5"}));
    CHECK(derive_intent(k, k.empty_objects()) == k.all_attributes());
    CHECK(derive_intent(k, k.all_objects()) == k.empty_attributes());
    CHECK(derive_extent(k, atts(k, {"s1", "s3", "s5"})) == objs(k, {"q1", "q4"}));
    CHECK(derive_extent(k, k.empty_attributes()) == k.all_objects());
    CHECK(derive_extent(k, atts(k, {"s11"})) == objs(k, {"q5", "q6"}));
}

TEST_CASE("rough-set operators on Table 1 and the example relation") {
    const auto& k = table1();
    CHECK(diamond(k, atts(k, {"s3"})) == objs(k, {"q1", "q2", "q4"}));
    CHECK(diamond(k, k.empty_attributes()) == k.empty_objects());
    CHECK(diamond(k, atts(k, {"s11"})) == objs(k, {"q5", "q6"}));
    CHECK(black_box(k, objs(k, {"q1", "q2", "q4", "q6"})) == atts(k, {"s3", "s7", "s10"}));
    CHECK(black_box(k, k.all_objects()) == k.all_attributes());
    CHECK(black_diamond(k, objs(k, {"q5", "q6"})) == atts(k, {"s5", "s8", "s9", "s11"}));
    CHECK(black_diamond(k, k.empty_objects()) == k.empty_attributes());
    CHECK(black_diamond(k, k.all_objects()) == k.all_attributes());

    const auto& e = example_relation();
    CHECK(box(e, atts(e, {"2"})) == objs(e, {"a", "b"}));
    CHECK(box(e, e.all_attributes()) == e.all_objects());
    CHECK(box(e, e.empty_attributes()) == e.empty_objects());
    CHECK(black_box(e, objs(e, {"a", "b", "c"})) == atts(e, {"2"}));
}

TEST_CASE("operators agree with the literal definitions") {
    for (const auto& k : small_contexts(40, 7)) {
        oracle::Ctx o(k);
        for (oracle::Mask a = 0; a <= oracle::full(k.num_objects()); ++a) {
            auto as = ObjectSet::from_mask(k.num_objects(), a);
            CHECK(derive_intent(k, as).to_mask() == o.intent(a));
            CHECK(black_box(k, as).to_mask() == o.black_box(a));
            CHECK(black_diamond(k, as).to_mask() == o.black_diamond(a));
        }
        for (oracle::Mask b = 0; b <= oracle::full(k.num_attributes()); ++b) {
            auto bs = AttributeSet::from_mask(k.num_attributes(), b);
            CHECK(derive_extent(k, bs).to_mask() == o.extent(b));
            CHECK(diamond(k, bs).to_mask() == o.diamond(b));
            CHECK(box(k, bs).to_mask() == o.box(b));
        }
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const auto& k = table1();
    CHECK_THROWS_AS(derive_intent(k, ObjectSet(3)), DimensionError);
    CHECK_THROWS_AS(diamond(k, AttributeSet(2)), DimensionError);
    CHECK_THROWS_AS(black_box(k, ObjectSet(7)), DimensionError);
    CHECK_THROWS_AS(k.objects_named({"nope"}), DimensionError);
}

TEST_CASE("complement context") {
    const auto& k = table1();
    auto c = complement_context(k);
    CHECK(c.incidence_count() == 66 - k.incidence_count());
    CHECK(c.incidence_count() == 43);
    CHECK(complement_context(c) == k);
    auto empty = fixtures::make_context(2, 3, {});
    CHECK(complement_context(empty).incidence_count() == 6);
}

TEST_CASE("concept predicates") {
    const auto& k = table1();
    CHECK(is_concept(k, objs(k, {"q1", "q4"}), atts(k, {"s1", "s3", "s5"})));
    oracle::Ctx o(k);
    auto a = objs(k, {"q1", "q2", "q4"});
    auto b = atts(k, {"s3"});
    bool expected = o.black_box(a.to_mask()) == b.to_mask() && o.diamond(b.to_mask()) == a.to_mask();
    CHECK(is_oo_concept(k, a, b) == expected);
    CHECK(is_concept(k, k.empty_objects(), k.all_attributes()) ==
          derive_extent(k, k.all_attributes()).empty());
}

TEST_CASE("empty contexts are evaluated literally") {
    auto k = fixtures::make_context(0, 2, {});
    CHECK(derive_extent(k, k.all_attributes()) == k.empty_objects());
    CHECK(derive_intent(k, k.empty_objects()) == k.all_attributes());
    CHECK(black_box(k, k.empty_objects()) == k.all_attributes());
    CHECK(black_diamond(k, k.empty_objects()) == k.empty_attributes());
}

TEST_CASE("Galois connection and box properties hold exhaustively") {
    for (const auto& k : small_contexts(30, 11)) {
        const std::size_t g = k.num_objects(), m = k.num_attributes();
        std::vector<ObjectSet> as;
        std::vector<AttributeSet> bs;
        for (oracle::Mask x = 0; x <= oracle::full(g); ++x) as.push_back(ObjectSet::from_mask(g, x));
        for (oracle::Mask y = 0; y <= oracle::full(m); ++y) bs.push_back(AttributeSet::from_mask(m, y));
        auto mc = complement_context(k);
        for (const auto& a : as)
            for (const auto& b : bs)
                CHECK(a.subset_of(derive_extent(k, b)) == b.subset_of(derive_intent(k, a)));
        for (const auto& a : as) {
            CHECK(black_box(k, a) == black_diamond(k, a.complement()).complement());
            CHECK(black_box(k, a) == derive_intent(mc, a.complement()));
            auto bb = black_box(k, a);
            CHECK(black_box(k, diamond(k, bb)) == bb);
            auto interior = diamond(k, black_box(k, a));
            CHECK(interior.subset_of(a));
            CHECK(diamond(k, black_box(k, interior)) == interior);
            for (const auto& a2 : as) {
                CHECK(black_diamond(k, a | a2) == (black_diamond(k, a) | black_diamond(k, a2)));
                if (a.subset_of(a2)) {
                    CHECK(black_box(k, a).subset_of(black_box(k, a2)));
                    CHECK(black_diamond(k, a).subset_of(black_diamond(k, a2)));
                }
            }
        }
        for (const auto& b : bs) {
            CHECK(box(k, b) == diamond(k, b.complement()).complement());
            auto d = diamond(k, b);
            CHECK(diamond(k, black_box(k, d)) == d);
            auto closure = black_box(k, diamond(k, b));
            CHECK(b.subset_of(closure));
            CHECK(black_box(k, diamond(k, closure)) == closure);
            for (const auto& b2 : bs) {
                CHECK(box(k, b & b2) == (box(k, b) & box(k, b2)));
                if (b.subset_of(b2)) {
                    CHECK(box(k, b).subset_of(box(k, b2)));
                    CHECK(diamond(k, b).subset_of(diamond(k, b2)));
                }
            }
        }
    }
}

TEST_CASE("context morphisms") {
    const auto& k = table1();
    std::vector<std::size_t> ig(6), im(11);
    std::iota(ig.begin(), ig.end(), 0);
    std::iota(im.begin(), im.end(), 0);
    CHECK(check_context_morphism(k, k, ig, im) == MorphismClass::Isomorphism);

    auto sub = subcontext(k, objs(k, {"q2", "q5"}), atts(k, {"s1", "s8", "s11"}));
    CHECK(check_context_morphism(sub, k, {1, 4}, {0, 7, 10}) == MorphismClass::Embedding);

    // q1 and q2 have different rows; sending both to q1 breaks the iff.
    auto collapse = ig;
    collapse[1] = 0;
    CHECK(check_context_morphism(k, k, collapse, im) == MorphismClass::None);
    CHECK_THROWS_AS(check_context_morphism(k, k, {0, 1}, im), DimensionError);
}

TEST_CASE("composition of homomorphisms is a homomorphism") {
    auto k = fixtures::make_context(3, 2, {{0, 0}, {1, 0}, {2, 1}});
    // q0 and q1 share a row, so collapsing them is a homomorphism.
    std::vector<std::size_t> f = {0, 0, 2}, h = {1, 1, 2}, id = {0, 1};
    CHECK(check_context_morphism(k, k, f, id) == MorphismClass::Homomorphism);
    CHECK(check_context_morphism(k, k, h, id) == MorphismClass::Homomorphism);
    std::vector<std::size_t> hf(3);
    for (std::size_t i = 0; i < 3; ++i) hf[i] = h[f[i]];
    CHECK(check_context_morphism(k, k, hf, id) != MorphismClass::None);
}

TEST_CASE("isomorphisms commute with the operators") {
    for (const auto& k : small_contexts(20, 23)) {
        const std::size_t g = k.num_objects(), m = k.num_attributes();
        std::vector<std::size_t> alpha(g), beta(m);
        std::iota(alpha.begin(), alpha.end(), 0);
        std::iota(beta.begin(), beta.end(), 0);
        std::reverse(alpha.begin(), alpha.end());
        std::rotate(beta.begin(), beta.begin() + 1, beta.end());
        std::vector<std::vector<bool>> inc(g, std::vector<bool>(m));
        for (std::size_t x = 0; x < g; ++x)
            for (std::size_t y = 0; y < m; ++y) inc[alpha[x]][beta[y]] = k.incident(x, y);
        FormalContext k2(k.objects(), k.attributes(), inc);
        REQUIRE(check_context_morphism(k, k2, alpha, beta) == MorphismClass::Isomorphism);
        for (oracle::Mask x = 0; x <= oracle::full(g); ++x) {
            auto a = ObjectSet::from_mask(g, x);
            CHECK(black_box(k2, image(a, alpha, g)) == image(black_box(k, a), beta, m));
            CHECK(black_diamond(k2, image(a, alpha, g)) == image(black_diamond(k, a), beta, m));
        }
        for (oracle::Mask y = 0; y <= oracle::full(m); ++y) {
            auto b = AttributeSet::from_mask(m, y);
            CHECK(box(k2, image(b, beta, m)) == image(box(k, b), alpha, g));
            CHECK(diamond(k2, image(b, beta, m)) == image(diamond(k, b), alpha, g));
        }
    }
}

TEST_CASE("cxt and json round trips") {
    const auto& k = table1();
    auto text = format_cxt(k);
    CHECK(text == read_file(fixtures::data_path("table1.cxt")));
    CHECK(parse_cxt(text) == k);
    CHECK(context_from_json(context_to_json(k)) == k);
    auto empty = fixtures::make_context(0, 0, {});
    CHECK(parse_cxt(format_cxt(empty)) == empty);
}

TEST_CASE("malformed cxt input") {
    CHECK_THROWS_AS(parse_cxt("A\n\n1\n1\ng\nm\nX\n"), ParseError);
    CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\ng\nm\nXX\n"), ParseError);
    CHECK_THROWS_AS(parse_cxt("B\n\n1\n1\ng\nm\no\n"), ParseError);
    CHECK(parse_cxt("B\n\n1\n1\ng\nm\nx\n").incident(0, 0));
    CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\ng\nm\nX\n"), ParseError);
    CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\ng\ng\nm\nX\n.\n"), Error);
    CHECK_THROWS_AS(load_context("/nonexistent/file.cxt"), ParseError);
}

}  // TEST_SUITE
