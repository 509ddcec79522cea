#include "dbatk/representation.hpp"

#include <algorithm>
#include <cstdio>

#include "dbatk/error.hpp"

namespace dbatk {

namespace {

/// (F_{¬x}, I_x) over the given spectrum.
ConceptPair oo_image(const FormalContext& ctx, const PrimarySpectrum& sp, const FiniteDba& d, Index x) {
    return classify_pair(ctx, sp.filter_locus(d.neg(x)), sp.ideal_locus(x));
}

std::vector<ConceptPair> oo_images(const FormalContext& ctx, const PrimarySpectrum& sp, const FiniteDba& d) {
    std::vector<ConceptPair> out;
    out.reserve(d.size());
    for (Index x = 0; x < d.size(); ++x) out.push_back(oo_image(ctx, sp, d, x));
    return out;
}

/// Positions of `images` in `alg`; nullopt names the first missing element.
std::optional<std::vector<Index>> locate(const ConceptAlgebra& alg, const std::vector<ConceptPair>& images,
                                         std::string& missing, const FiniteDba& d) {
    std::vector<Index> map;
    map.reserve(images.size());
    for (std::size_t x = 0; x < images.size(); ++x) {
        auto i = alg.index_of(images[x].extent, images[x].intent);
        if (!i) {
            missing = "h(" + d.label(static_cast<Index>(x)) + ") = " + format_pair(alg.context(), images[x]) +
                      " is not an element of the target algebra";
            return std::nullopt;
        }
        map.push_back(*i);
    }
    return map;
}

void require_hom(const FiniteDba& d, const FiniteDba& m, const std::vector<Index>& f, const char* what) {
    auto h = check_hom(d, m, f);
    if (!h.is_isomorphism()) throw HypothesisError(std::string(what) + ": map is not an isomorphism");
}

std::string first_fail(const std::string& law, const FiniteDba& d, std::initializer_list<Index> xs) {
    std::string s = law + " fails at";
    for (auto x : xs) s += " " + d.label(x);
    return s;
}

}  // namespace

nlohmann::json report_to_json(const TheoremReport& r, const std::string& input_digest, std::int64_t elapsed_ms) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["input"] = input_digest;
    j["verdict"] = r.verdict;
    j["counterexample"] = r.verdict && r.counterexample.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.counterexample);
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

TheoremReport report_from_json(const nlohmann::json& j) {
    try {
        TheoremReport r;
        r.theorem = j.at("theorem").get<std::string>();
        r.verdict = j.at("verdict").get<bool>();
        if (!j.at("counterexample").is_null()) r.counterexample = j.at("counterexample").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report json: ") + e.what());
    }
}

std::string fnv1a_digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

PrimaryCts build_primary_cts(const FiniteDba& d, const EnumerationLimits& limits) {
    PrimarySpectrum sp(d);
    const std::size_t nf = sp.filters().size(), ni = sp.ideals().size();
    std::vector<GroundSet> fsub, isub;
    for (Index x = 0; x < d.size(); ++x) {
        fsub.push_back(retag<GroundSide>(sp.filter_locus(x)));
        isub.push_back(retag<GroundSide>(sp.ideal_locus(x)));
    }
    auto tau = generate_from_closed_subbase(nf, fsub);
    auto rho = generate_from_closed_subbase(ni, isub);
    if (!tau.is_discrete() || !rho.is_discrete())
        throw InternalInconsistency("spectrum topology of a finite dBa is not discrete");
    Cts cts(sp.standard_complement(), std::move(tau), std::move(rho));
    if (!cts.is_ctscr()) throw InternalInconsistency("spectrum context is not a CTSCR");
    auto stone = check_stone_context(cts, limits);
    if (!stone.ok()) throw InternalInconsistency("spectrum context is not a Stone context: " + stone.counterexample);
    return PrimaryCts{std::move(sp), std::move(cts)};
}

RepresentationReport rep_map_oo(const FiniteDba& d, const EnumerationLimits& limits) {
    RepresentationReport r;
    r.classification = classify_dba(d);
    auto pc = build_primary_cts(d, limits);
    r.target = build_clopen_proto_dba(pc.cts, limits);
    r.images = oo_images(pc.cts.context(), pc.spectrum, d);
    auto map = locate(*r.target, r.images, r.counterexample, d);
    if (!map) return r;
    r.hom = check_hom(d, r.target->dba(), *map);
    r.transport_consistent = true;

    if (r.classification.pure) {
        auto semi = build_clopen_semi_dba(pc.cts, limits);
        std::string missing;
        if (auto smap = locate(semi, r.images, missing, d)) r.onto_semiconcepts = check_hom(d, semi.dba(), *smap).is_isomorphism();
    }

    const auto& c = r.classification;
    const auto& h = r.hom;
    if (!h.homomorphism)
        r.counterexample = "h is not a homomorphism: " + h.counterexample;
    else if (!h.quasi_injective)
        r.counterexample = "h is not quasi-injective";
    else if (h.injective != c.contextual)
        r.counterexample = std::string("h is ") + (h.injective ? "" : "not ") + "injective but the dBa is " +
                           (c.contextual ? "" : "not ") + "contextual";
    else if (h.is_isomorphism() != c.fully_contextual)
        r.counterexample = std::string("h is ") + (h.is_isomorphism() ? "" : "not ") +
                           "an isomorphism onto the clopen algebra but the dBa is " +
                           (c.fully_contextual ? "" : "not ") + "fully contextual";
    else if (c.pure && !r.onto_semiconcepts)
        r.counterexample = "pure dBa is not isomorphic to the clopen oo-semiconcepts via h";
    r.ladder_consistent = r.counterexample.empty();
    return r;
}

RepresentationReport rep_map_wille(const FiniteDba& d, const EnumerationLimits& limits) {
    RepresentationReport r;
    r.classification = classify_dba(d);
    PrimarySpectrum sp(d);
    const auto delta = sp.standard_context();
    r.target = build_wille_proto_dba(delta, limits);
    for (Index x = 0; x < d.size(); ++x) r.images.push_back(classify_pair(delta, sp.filter_locus(x), sp.ideal_locus(x)));
    auto map = locate(*r.target, r.images, r.counterexample, d);
    if (!map) return r;
    r.hom = check_hom(d, r.target->dba(), *map);
    r.transport_consistent = true;
    for (Index x = 0; x < d.size() && r.transport_consistent; ++x)
        if (r.images[x].extent.complement() != sp.filter_locus(d.neg(x))) {
            r.transport_consistent = false;
            r.counterexample = first_fail("complement transport to (F_¬x, I_x)", d, {x});
        }
    if (!r.hom.homomorphism)
        r.counterexample = "h is not a homomorphism: " + r.hom.counterexample;
    else if (!r.hom.quasi_injective)
        r.counterexample = "h is not quasi-injective";
    r.ladder_consistent = r.hom.homomorphism && r.hom.quasi_injective;
    return r;
}

AtomRepresentation finite_rep_atoms(const FiniteDba& d, const EnumerationLimits& limits) {
    AtomRepresentation r;
    const QuasiOrder q(d);
    PrimarySpectrum sp(d);
    const auto& atoms = sp.atoms();
    const auto& coatoms = sp.coatoms();
    std::vector<std::string> an, cn;
    for (auto a : atoms) an.push_back(d.label(a));
    for (auto b : coatoms) cn.push_back(d.label(b));
    std::vector<std::vector<bool>> inc(atoms.size(), std::vector<bool>(coatoms.size(), false));
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = 0; j < coatoms.size(); ++j) inc[i][j] = q.leq(atoms[i], coatoms[j]);
    // Labels may repeat when a carrier label is reused; fall back to positions.
    auto unique = [](std::vector<std::string>& v, const char* prefix) {
        auto s = v;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = prefix + std::to_string(k);
    };
    unique(an, "a");
    unique(cn, "b");
    r.k_ac = FormalContext(an, cn, inc, "atoms/coatoms");

    auto target = build_wille_proto_dba(r.k_ac, limits);
    std::vector<ConceptPair> complement_form;
    for (Index x = 0; x < d.size(); ++x) {
        ObjectSet a(atoms.size());
        AttributeSet b(coatoms.size());
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (q.leq(atoms[i], x)) a.set(i);
        for (std::size_t j = 0; j < coatoms.size(); ++j)
            if (q.leq(x, coatoms[j])) b.set(j);
        r.images.push_back(classify_pair(r.k_ac, a, b));
        complement_form.push_back(classify_pair(complement_context(r.k_ac), a.complement(), b));
    }
    auto map = locate(target, r.images, r.counterexample, d);
    if (!map) return r;
    r.hom = check_hom(d, target.dba(), *map);

    r.matches_standard_context = r.k_ac.incidence_matrix() == sp.standard_context().incidence_matrix() &&
                                 complement_context(r.k_ac).incidence_matrix() ==
                                     sp.standard_complement().incidence_matrix();
    if (!r.matches_standard_context) r.counterexample = "atom/coatom context differs from the standard context";

    auto oo = rep_map_oo(d, limits);
    r.complement_form_matches = oo.images.size() == complement_form.size();
    for (std::size_t x = 0; x < complement_form.size() && r.complement_form_matches; ++x)
        if (!(oo.images[x] == complement_form[x])) {
            r.complement_form_matches = false;
            r.counterexample = first_fail("({a : a ⋢ x}, {b : x ⊑ b}) = (F_¬x, I_x)", d, {static_cast<Index>(x)});
        }
    auto oo_alg = build_proto_dba(complement_context(r.k_ac), limits);
    std::string missing;
    if (auto cmap = locate(oo_alg, complement_form, missing, d)) {
        auto ch = check_hom(d, oo_alg.dba(), *cmap);
        r.verdicts_match = ch.homomorphism == oo.hom.homomorphism && ch.quasi_injective == oo.hom.quasi_injective &&
                           ch.injective == oo.hom.injective && ch.surjective == oo.hom.surjective;
    } else {
        r.counterexample = missing;
    }
    if (!r.verdicts_match && r.counterexample.empty())
        r.counterexample = "complement-form verdicts differ from the spectrum representation";
    if (!r.hom.homomorphism && r.counterexample.empty()) r.counterexample = "not a homomorphism: " + r.hom.counterexample;
    if (!r.hom.quasi_injective && r.counterexample.empty()) r.counterexample = "not quasi-injective";
    return r;
}

TheoremReport characterize_pure_part(const FiniteDba& d, const EnumerationLimits& limits) {
    TheoremReport r{"pure part of the clopen algebra is h(D_p)", false, {}};
    auto pc = build_primary_cts(d, limits);
    auto target = build_clopen_proto_dba(pc.cts, limits);
    const auto images = oo_images(pc.cts.context(), pc.spectrum, d);
    auto map = locate(target, images, r.counterexample, d);
    if (!map) return r;
    const auto& t = target.dba();
    CarrierSet want_meet(t.size()), want_join(t.size()), have_meet(t.size()), have_join(t.size());
    for (Index x = 0; x < d.size(); ++x) {
        if (d.in_meet_part(x)) want_meet.set((*map)[x]);
        if (d.in_join_part(x)) want_join.set((*map)[x]);
    }
    for (Index y = 0; y < t.size(); ++y) {
        if (t.in_meet_part(y)) have_meet.set(y);
        if (t.in_join_part(y)) have_join.set(y);
    }
    auto describe = [&](const CarrierSet& have, const CarrierSet& want, const char* part) {
        const auto extra = have - want, lost = want - have;
        const Index y = static_cast<Index>(!extra.empty() ? extra.indices().front() : lost.indices().front());
        return std::string(part) + (extra.empty() ? ": h-image outside the idempotents " : ": idempotent not of the form h(x) ") +
               t.label(y);
    };
    if (have_meet != want_meet)
        r.counterexample = describe(have_meet, want_meet, "⊓-idempotents");
    else if (have_join != want_join)
        r.counterexample = describe(have_join, want_join, "⊔-idempotents");
    r.verdict = r.counterexample.empty();
    return r;
}

TheoremReport check_locus_identities(const FiniteDba& d) {
    TheoremReport r{"locus identities in the standard context", false, {}};
    PrimarySpectrum sp(d);
    const auto delta = sp.standard_context();
    auto F = [&](Index x) { return sp.filter_locus(x); };
    auto I = [&](Index x) { return sp.ideal_locus(x); };
    auto fail = [&](const std::string& law, std::initializer_list<Index> xs) {
        if (r.counterexample.empty()) r.counterexample = first_fail(law, d, xs);
    };
    for (Index x = 0; x < d.size(); ++x) {
        const Index xm = d.meet_part(x), xj = d.join_part(x);
        if (derive_intent(delta, F(x)) != I(d.join(xm, xm))) fail("F_x' = I_{(x⊓x)⊔(x⊓x)}", {x});
        if (derive_extent(delta, I(x)) != F(d.meet(xj, xj))) fail("I_x' = F_{(x⊔x)⊓(x⊔x)}", {x});
        if (F(x).complement() != F(d.neg(x))) fail("(F_x)^c = F_¬x", {x});
        if (I(x).complement() != I(d.opp(x))) fail("(I_x)^c = I_⌐x", {x});
        if (I(xj) != I(x)) fail("I_{x⊔x} = I_x", {x});
        if (F(xm) != F(x)) fail("F_{x⊓x} = F_x", {x});
        for (Index y = 0; y < d.size(); ++y) {
            if ((I(x) & I(y)) != I(d.join(x, y))) fail("I_x ∩ I_y = I_{x⊔y}", {x, y});
            if ((F(x) & F(y)) != F(d.meet(x, y))) fail("F_x ∩ F_y = F_{x⊓y}", {x, y});
        }
    }
    r.verdict = r.counterexample.empty();
    return r;
}

TheoremReport check_clopen_locus_identities(const FiniteDba& d) {
    TheoremReport r{"modal operators on loci in the complement context", false, {}};
    PrimarySpectrum sp(d);
    const auto nabla = sp.standard_complement();
    for (Index x = 0; x < d.size() && r.counterexample.empty(); ++x) {
        const auto& fx = sp.filter_locus(x);
        const auto& ix = sp.ideal_locus(x);
        if (black_box(nabla, fx) != sp.ideal_locus(d.neg(x)))
            r.counterexample = first_fail("F_x^■ = I_¬x", d, {x});
        else if (black_diamond(nabla, fx) != sp.ideal_locus(d.opp(d.meet_part(x))))
            r.counterexample = first_fail("F_x^◆ = I_⌐(x⊓x)", d, {x});
        else if (box(nabla, ix) != sp.filter_locus(d.opp(x)))
            r.counterexample = first_fail("I_x^□ = F_⌐x", d, {x});
        else if (diamond(nabla, ix) != sp.filter_locus(d.neg(d.join_part(x))))
            r.counterexample = first_fail("I_x^◇ = F_¬(x⊔x)", d, {x});
    }
    r.verdict = r.counterexample.empty();
    return r;
}

TheoremReport check_negation_locus(const FiniteDba& d) {
    TheoremReport r{"F_¬a = F_¬(a⊓a)", false, {}};
    PrimarySpectrum sp(d);
    for (Index a = 0; a < d.size() && r.counterexample.empty(); ++a)
        if (sp.filter_locus(d.neg(a)) != sp.filter_locus(d.neg(d.meet_part(a))))
            r.counterexample = first_fail(r.theorem, d, {a});
    r.verdict = r.counterexample.empty();
    return r;
}

TheoremReport check_nabla_from_pure_part(const FiniteDba& d, const EnumerationLimits& limits) {
    TheoremReport r{"∇ recovered from the pure clopen oo-protoconcepts", false, {}};
    auto pc = build_primary_cts(d, limits);
    auto target = build_clopen_proto_dba(pc.cts, limits);
    const auto& ctx = pc.cts.context();
    const auto& t = target.dba();
    for (std::size_t i = 0; i < ctx.num_attributes() && r.counterexample.empty(); ++i) {
        ObjectSet forced = ctx.all_objects();
        for (Index y = 0; y < t.size(); ++y)
            if (t.in_pure_part(y) && target.elements()[y].intent.test(i)) forced &= target.elements()[y].extent;
        for (std::size_t f = 0; f < ctx.num_objects(); ++f)
            if (ctx.incident(f, i) != forced.test(f)) {
                r.counterexample = ctx.objects()[f] + " / " + ctx.attributes()[i] + ": ∇ is " +
                                   (ctx.incident(f, i) ? "true" : "false") + " but the pure part says otherwise";
                break;
            }
    }
    r.verdict = r.counterexample.empty();
    return r;
}

KMapsReport k_maps(const Cts& stone, const EnumerationLimits& limits) {
    auto check = check_stone_context(stone, limits);
    if (!check.ok()) throw HypothesisError("k-maps need a Stone context: " + check.counterexample);
    KMapsReport r;
    const auto& ctx = stone.context();
    auto semi = build_clopen_semi_dba(stone, limits);
    auto kpr = build_primary_cts(semi.dba(), limits);
    const std::size_t n = semi.size();
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        CarrierSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if (!semi.elements()[i].extent.test(g)) s.set(i);
        auto k = kpr.spectrum.filter_index(s);
        if (!k) {
            r.counterexample = "k1(" + ctx.objects()[g] + ") is not a primary filter";
            return r;
        }
        r.k1.push_back(*k);
    }
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
        CarrierSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if (semi.elements()[i].intent.test(m)) s.set(i);
        auto k = kpr.spectrum.ideal_index(s);
        if (!k) {
            r.counterexample = "k2(" + ctx.attributes()[m] + ") is not a primary ideal";
            return r;
        }
        r.k2.push_back(*k);
    }
    r.hom = check_cts_morphism(stone, kpr.cts, r.k1, r.k2);
    if (r.hom.cls != CtsHomClass::Homeomorphism) {
        r.counterexample = "(k1,k2) is only a CTS " + to_string(r.hom.cls) +
                           (r.hom.counterexample.empty() ? "" : ": " + r.hom.counterexample);
        return r;
    }
    r.induced = induced_dba_iso(r.hom, build_clopen_proto_dba(stone, limits), build_clopen_proto_dba(kpr.cts, limits));
    r.verdict = r.induced.is_isomorphism();
    if (!r.verdict) r.counterexample = "induced map is not a dBa isomorphism: " + r.induced.counterexample;
    return r;
}

namespace {

DbaHom restrict_to_pure(const Subalgebra& source, const Subalgebra& target, const std::vector<Index>& f) {
    std::vector<Index> local;
    local.reserve(source.embedding.size());
    const auto& emb = target.embedding;
    for (Index parent : source.embedding) {
        auto it = std::lower_bound(emb.begin(), emb.end(), f[parent]);
        if (it == emb.end() || *it != f[parent]) throw InternalInconsistency("isomorphism leaves the pure part");
        local.push_back(static_cast<Index>(it - emb.begin()));
    }
    return check_hom(source.algebra, target.algebra, std::move(local));
}

}  // namespace

FunctorGImage functor_G(const FiniteDba& d, const FiniteDba& m, const std::vector<Index>& f) {
    if (!classify_dba(d).fully_contextual || !classify_dba(m).fully_contextual)
        throw HypothesisError("G is defined on fully contextual dBas");
    require_hom(d, m, f, "G");
    FunctorGImage out{pure_part(d), pure_part(m), {}};
    out.restriction = restrict_to_pure(out.source, out.target, f);
    return out;
}

namespace {

FunctorFImage functor_F_on(const FiniteDba& d, const FiniteDba& m, const DbaHom& h, const PrimaryCts& pd,
                           const PrimaryCts& pm) {
    FunctorFImage out;
    out.maps = hom_preimage_maps(d, m, h, pd.spectrum, pm.spectrum);
    out.hom = check_cts_morphism(pm.cts, pd.cts, out.maps.alpha, out.maps.beta);
    out.square_commutes = true;
    for (Index x = 0; x < d.size(); ++x) {
        const auto hd = oo_image(pd.cts.context(), pd.spectrum, d, x);
        const auto hm = oo_image(pm.cts.context(), pm.spectrum, m, h.map[x]);
        if (preimage(hd.extent, out.maps.alpha) != hm.extent || preimage(hd.intent, out.maps.beta) != hm.intent) {
            out.square_commutes = false;
            out.counterexample = first_fail("h_M ∘ f = f_αβ ∘ h_D", d, {x});
            break;
        }
    }
    if (out.hom.cls != CtsHomClass::Homeomorphism && out.counterexample.empty())
        out.counterexample = "(α_f, β_f) is only a CTS " + to_string(out.hom.cls);
    return out;
}

DbaHom require_iso(const FiniteDba& d, const FiniteDba& m, const std::vector<Index>& f) {
    auto h = check_hom(d, m, f);
    if (!h.is_isomorphism()) throw HypothesisError("F: map is not an isomorphism");
    return h;
}

}  // namespace

FunctorFImage functor_F(const FiniteDba& d, const FiniteDba& m, const std::vector<Index>& f,
                        const EnumerationLimits& limits) {
    if (!classify_dba(d).pure || !classify_dba(m).pure) throw HypothesisError("F is defined on pure dBas");
    const auto h = require_iso(d, m, f);
    return functor_F_on(d, m, h, build_primary_cts(d, limits), build_primary_cts(m, limits));
}

TheoremReport check_functor_G_laws(const FiniteDba& d, const std::vector<std::vector<Index>>& autos) {
    TheoremReport r{"functor G laws", false, {}};
    if (!classify_dba(d).fully_contextual) throw HypothesisError("G is defined on fully contextual dBas");
    const auto pure = pure_part(d);
    auto G = [&](const std::vector<Index>& f) {
        require_hom(d, d, f, "G");
        return restrict_to_pure(pure, pure, f);
    };
    if (G(identity_map(d.size())).map != identity_map(pure.algebra.size())) r.counterexample = "G(id) is not the identity";
    std::vector<std::vector<Index>> images;
    for (const auto& f : autos) {
        auto g = G(f);
        if (!g.is_isomorphism() && r.counterexample.empty())
            r.counterexample = "G(f) is not an isomorphism of pure parts";
        images.push_back(g.map);
    }
    for (std::size_t i = 0; i < autos.size() && r.counterexample.empty(); ++i)
        for (std::size_t j = 0; j < autos.size() && r.counterexample.empty(); ++j) {
            const auto gf = G(compose(autos[j], autos[i])).map;
            if (gf != compose(images[j], images[i]))
                r.counterexample = "G(g∘f) ≠ G(g)∘G(f) for automorphisms " + std::to_string(i) + ", " + std::to_string(j);
        }
    r.verdict = r.counterexample.empty();
    return r;
}

TheoremReport check_functor_F_laws(const FiniteDba& d, const std::vector<std::vector<Index>>& autos,
                                   const EnumerationLimits& limits) {
    TheoremReport r{"functor F laws", false, {}};
    if (!classify_dba(d).pure) throw HypothesisError("F is defined on pure dBas");
    const auto pc = build_primary_cts(d, limits);
    auto F = [&](const std::vector<Index>& f) { return functor_F_on(d, d, require_iso(d, d, f), pc, pc); };
    const auto id = F(identity_map(d.size()));
    std::vector<std::size_t> fid(id.maps.alpha.size()), iid(id.maps.beta.size());
    for (std::size_t k = 0; k < fid.size(); ++k) fid[k] = k;
    for (std::size_t k = 0; k < iid.size(); ++k) iid[k] = k;
    if (id.maps.alpha != fid || id.maps.beta != iid) r.counterexample = "F(id) is not the identity";

    std::vector<FunctorFImage> images;
    for (const auto& f : autos) {
        images.push_back(F(f));
        const auto& im = images.back();
        if (r.counterexample.empty() && !im.counterexample.empty()) r.counterexample = im.counterexample;
    }
    auto after = [](const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner) {
        std::vector<std::size_t> out(inner.size());
        for (std::size_t k = 0; k < inner.size(); ++k) out[k] = outer[inner[k]];
        return out;
    };
    for (std::size_t i = 0; i < autos.size() && r.counterexample.empty(); ++i)
        for (std::size_t j = 0; j < autos.size() && r.counterexample.empty(); ++j) {
            // F(g∘f) = F(f)∘F(g): first α_g, then α_f.
            const auto gf = F(compose(autos[j], autos[i]));
            if (gf.maps.alpha != after(images[i].maps.alpha, images[j].maps.alpha) ||
                gf.maps.beta != after(images[i].maps.beta, images[j].maps.beta))
                r.counterexample = "F(g∘f) ≠ F(f)∘F(g) for automorphisms " + std::to_string(i) + ", " + std::to_string(j);
            const bool same_transport =
                images[i].maps.alpha == images[j].maps.alpha && images[i].maps.beta == images[j].maps.beta;
            if (same_transport && autos[i] != autos[j] && r.counterexample.empty())
                r.counterexample = "distinct automorphisms induce the same transport";
        }
    r.verdict = r.counterexample.empty();
    return r;
}

}  // namespace dbatk
