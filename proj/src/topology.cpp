#include "dbatk/topology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "dbatk/context_io.hpp"
#include "dbatk/error.hpp"

namespace dbatk {

namespace {

using Mask = std::uint64_t;

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void require_ground(std::size_t n) {
    if (n > FiniteTopology::kMaxGround)
        throw CapExceeded("topologies are limited to " + std::to_string(FiniteTopology::kMaxGround) +
                          " points, got " + std::to_string(n));
}

std::string mask_string(std::size_t n, Mask m) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
        if ((m >> i) & 1U) {
            if (!first) s += ',';
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

std::vector<Mask> row_masks(const FormalContext& ctx) {
    std::vector<Mask> rows(ctx.num_objects());
    for (std::size_t g = 0; g < rows.size(); ++g) rows[g] = ctx.row(g).to_mask();
    return rows;
}

std::vector<Mask> column_masks(const FormalContext& ctx) {
    std::vector<Mask> cols(ctx.num_attributes());
    for (std::size_t m = 0; m < cols.size(); ++m) cols[m] = ctx.column(m).to_mask();
    return cols;
}

// A relation given by rows R(x) ⊆ Y between spaces X (dom) and Y (cod).
// lower: O^◇ = {x : R(x) ∩ O ≠ ∅}, upper: O^□ = {x : R(x) ⊆ O}.

Mask lower_inverse(const std::vector<Mask>& rows, Mask o) {
    Mask out = 0;
    for (std::size_t x = 0; x < rows.size(); ++x)
        if (rows[x] & o) out |= Mask{1} << x;
    return out;
}

Mask upper_inverse(const std::vector<Mask>& rows, Mask o) {
    Mask out = 0;
    for (std::size_t x = 0; x < rows.size(); ++x)
        if ((rows[x] & ~o) == 0) out |= Mask{1} << x;
    return out;
}

bool lower_by_opens(const std::vector<Mask>& rows, const FiniteTopology& dom, const FiniteTopology& cod) {
    if (dom.is_discrete()) return true;
    bool ok = true;
    cod.for_each_open_mask([&](Mask o) { ok = ok && dom.is_open_mask(lower_inverse(rows, o)); });
    return ok;
}

bool upper_by_opens(const std::vector<Mask>& rows, const FiniteTopology& dom, const FiniteTopology& cod) {
    if (dom.is_discrete()) return true;
    bool ok = true;
    cod.for_each_open_mask([&](Mask o) { ok = ok && dom.is_open_mask(upper_inverse(rows, o)); });
    return ok;
}

// Pointwise: for every x0 and every open O of the relevant kind there must be
// an open U ∋ x0 all of whose points satisfy the same condition as x0.
template <class Hits, class Cond>
bool pointwise(const std::vector<Mask>& rows, const FiniteTopology& dom, const FiniteTopology& cod, Hits hits,
               Cond cond) {
    std::vector<Mask> dom_opens;
    dom.for_each_open_mask([&](Mask u) { dom_opens.push_back(u); });
    for (std::size_t x0 = 0; x0 < rows.size(); ++x0) {
        bool ok = true;
        cod.for_each_open_mask([&](Mask o) {
            if (!ok || !hits(rows[x0], o)) return;
            bool found = false;
            for (Mask u : dom_opens) {
                if (!((u >> x0) & 1U)) continue;
                bool all = true;
                for (std::size_t x = 0; x < rows.size() && all; ++x)
                    if ((u >> x) & 1U) all = cond(rows[x], o);
                if (all) {
                    found = true;
                    break;
                }
            }
            ok = found;
        });
        if (!ok) return false;
    }
    return true;
}

bool lower_pointwise(const std::vector<Mask>& rows, const FiniteTopology& dom, const FiniteTopology& cod) {
    auto meets = [](Mask r, Mask o) { return (r & o) != 0; };
    return pointwise(rows, dom, cod, meets, meets);
}

bool upper_pointwise(const std::vector<Mask>& rows, const FiniteTopology& dom, const FiniteTopology& cod) {
    auto inside = [](Mask r, Mask o) { return (r & ~o) == 0; };
    return pointwise(rows, dom, cod, inside, inside);
}

void require_matching(const FormalContext& ctx, const FiniteTopology& tau, const FiniteTopology& rho) {
    if (tau.ground_size() != ctx.num_objects())
        throw DimensionError("object topology has " + std::to_string(tau.ground_size()) + " points, context has " +
                             std::to_string(ctx.num_objects()) + " objects");
    if (rho.ground_size() != ctx.num_attributes())
        throw DimensionError("attribute topology has " + std::to_string(rho.ground_size()) +
                             " points, context has " + std::to_string(ctx.num_attributes()) + " attributes");
}

std::vector<ConceptPair> clopen_pairs(const Cts& cts, PairKind kind, const EnumerationLimits& limits) {
    auto all = enumerate_pairs(cts.context(), kind, limits);
    const auto& tau = cts.object_topology();
    const auto& rho = cts.attribute_topology();
    std::erase_if(all, [&](const ConceptPair& p) {
        return !tau.is_clopen(retag<GroundSide>(p.extent)) || !rho.is_clopen(retag<GroundSide>(p.intent));
    });
    return all;
}

ConceptAlgebra clopen_algebra(const Cts& cts, PairKind kind, const EnumerationLimits& limits) {
    if (!cts.is_ctscr()) throw HypothesisError("clopen algebras are built only for a CTSCR");
    const auto& tau = cts.object_topology();
    const auto& rho = cts.attribute_topology();
    const Mask gf = full_mask(tau.ground_size()), mf = full_mask(rho.ground_size());
    auto clopen = [](const FiniteTopology& t, Mask m, Mask full) { return t.is_open_mask(m) && t.is_open_mask(~m & full); };
    return build_algebra_on(
        cts.context(), kind, [&](Mask a, Mask b) { return clopen(tau, a, gf) && clopen(rho, b, mf); }, limits);
}

nlohmann::json opens_to_json(const FiniteTopology& t) {
    if (t.is_discrete()) return "discrete";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& o : t.opens()) arr.push_back(o.indices());
    return arr;
}

FiniteTopology opens_from_json(const nlohmann::json& j, std::size_t n, const char* field) {
    if (j.is_string()) {
        if (j.get<std::string>() == "discrete") return FiniteTopology::discrete(n);
        throw ParseError(std::string(field) + ": unknown shorthand '" + j.get<std::string>() + "'");
    }
    std::vector<GroundSet> opens;
    for (const auto& o : j) {
        GroundSet s(n);
        for (const auto& i : o) {
            const auto k = i.get<std::size_t>();
            if (k >= n) throw ParseError(std::string(field) + ": point " + std::to_string(k) + " out of range");
            s.set(k);
        }
        opens.push_back(std::move(s));
    }
    auto check = validate_topology(n, opens);
    if (!check.ok) throw ParseError(std::string(field) + ": " + check.reasons.front());
    return FiniteTopology(n, opens);
}

}  // namespace

// FiniteTopology

FiniteTopology::FiniteTopology(std::size_t n, std::vector<std::uint64_t> sorted_opens)
    : n_(n), opens_(std::move(sorted_opens)) {
    compute_neighbourhoods();
}

FiniteTopology::FiniteTopology(std::size_t n, const std::vector<GroundSet>& opens) : n_(n) {
    require_ground(n);
    auto check = validate_topology(n, opens);
    if (!check.ok) {
        std::string msg = "not a topology:";
        for (const auto& r : check.reasons) msg += " " + r + ";";
        throw HypothesisError(msg);
    }
    for (const auto& o : opens) opens_.push_back(o.to_mask());
    std::sort(opens_.begin(), opens_.end());
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
    compute_neighbourhoods();
}

void FiniteTopology::compute_neighbourhoods() {
    nbhd_.clear();
    for (std::size_t x = 0; x < n_; ++x) {
        Mask u = full_mask(n_);
        for (Mask o : opens_)
            if ((o >> x) & 1U) u &= o;
        nbhd_.push_back(GroundSet::from_mask(n_, u));
    }
}

FiniteTopology FiniteTopology::discrete(std::size_t n) {
    require_ground(n);
    std::vector<Mask> all(std::size_t{1} << n);
    for (Mask m = 0; m < all.size(); ++m) all[m] = m;
    return FiniteTopology(n, std::move(all));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t n) {
    require_ground(n);
    std::vector<Mask> opens{0};
    if (n > 0) opens.push_back(full_mask(n));
    return FiniteTopology(n, std::move(opens));
}

FiniteTopology FiniteTopology::from_neighbourhoods(std::vector<GroundSet> nbhd) {
    const std::size_t n = nbhd.size();
    require_ground(n);
    std::vector<Mask> u(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (nbhd[x].width() != n) throw DimensionError("neighbourhood width does not match the ground set");
        u[x] = nbhd[x].to_mask();
        if (!((u[x] >> x) & 1U)) throw HypothesisError("point " + std::to_string(x) + " lies outside its neighbourhood");
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (((u[x] >> y) & 1U) && (u[y] & ~u[x]))
                throw HypothesisError("neighbourhood family is not transitive at " + std::to_string(x));
    // The opens are the unions of neighbourhoods.
    std::unordered_set<Mask> seen{0};
    std::vector<Mask> opens{0};
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t k = opens.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Mask m = opens[i] | u[x];
            if (seen.insert(m).second) opens.push_back(m);
        }
    }
    std::sort(opens.begin(), opens.end());
    if (opens.back() != full_mask(n)) opens.push_back(full_mask(n));
    return FiniteTopology(n, std::move(opens));
}

std::vector<GroundSet> FiniteTopology::opens() const {
    std::vector<GroundSet> out;
    out.reserve(opens_.size());
    for (Mask m : opens_) out.push_back(GroundSet::from_mask(n_, m));
    return out;
}

bool FiniteTopology::is_open_mask(std::uint64_t m) const { return std::binary_search(opens_.begin(), opens_.end(), m); }

bool FiniteTopology::is_open(const GroundSet& s) const {
    if (s.width() != n_) throw DimensionError("set width does not match the topology");
    return is_open_mask(s.to_mask());
}

bool FiniteTopology::is_discrete() const { return opens_.size() == (std::size_t{1} << n_); }

std::vector<GroundSet> FiniteTopology::clopens() const {
    std::vector<GroundSet> out;
    for (Mask m : opens_)
        if (is_open_mask(~m & full_mask(n_))) out.push_back(GroundSet::from_mask(n_, m));
    return out;
}

bool FiniteTopology::is_totally_disconnected() const {
    const auto cl = clopens();
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y) {
            if (x == y) continue;
            const bool split =
                std::any_of(cl.begin(), cl.end(), [&](const GroundSet& c) { return c.test(x) && !c.test(y); });
            if (!split) return false;
        }
    return true;
}

TopologyCheck validate_topology(std::size_t n, const std::vector<GroundSet>& opens) {
    TopologyCheck r;
    if (n > FiniteTopology::kMaxGround) {
        r.reasons.push_back("ground set larger than " + std::to_string(FiniteTopology::kMaxGround));
        return r;
    }
    std::vector<Mask> ms;
    for (const auto& o : opens) {
        if (o.width() != n) {
            r.reasons.push_back("open set of width " + std::to_string(o.width()) + " on a ground set of " +
                                std::to_string(n));
            return r;
        }
        ms.push_back(o.to_mask());
    }
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    auto has = [&](Mask m) { return std::binary_search(ms.begin(), ms.end(), m); };
    if (!has(0)) r.reasons.push_back("missing the empty set");
    if (!has(full_mask(n))) r.reasons.push_back("missing the ground set");
    for (std::size_t i = 0; i < ms.size() && r.reasons.size() < 10; ++i)
        for (std::size_t j = i + 1; j < ms.size() && r.reasons.size() < 10; ++j) {
            if (!has(ms[i] | ms[j]))
                r.reasons.push_back("missing union " + mask_string(n, ms[i] | ms[j]) + " of " +
                                    mask_string(n, ms[i]) + " and " + mask_string(n, ms[j]));
            if (!has(ms[i] & ms[j]))
                r.reasons.push_back("missing intersection " + mask_string(n, ms[i] & ms[j]) + " of " +
                                    mask_string(n, ms[i]) + " and " + mask_string(n, ms[j]));
        }
    r.ok = r.reasons.empty();
    return r;
}

FiniteTopology generate_from_closed_subbase(std::size_t n, const std::vector<GroundSet>& subbase) {
    require_ground(n);
    // Complements of the subbase form an open subbase; the minimal
    // neighbourhood of x is the intersection of its members containing x.
    std::vector<GroundSet> nbhd;
    for (std::size_t x = 0; x < n; ++x) {
        GroundSet u = GroundSet::full(n);
        for (const auto& c : subbase) {
            if (c.width() != n) throw DimensionError("subbase member width does not match the ground set");
            if (!c.test(x)) u &= c.complement();
        }
        nbhd.push_back(std::move(u));
    }
    return FiniteTopology::from_neighbourhoods(std::move(nbhd));
}

// Cts

Cts::Cts(FormalContext ctx, FiniteTopology objects, FiniteTopology attributes)
    : ctx_(std::move(ctx)), tau_(std::move(objects)), rho_(std::move(attributes)) {
    require_matching(ctx_, tau_, rho_);
    const auto rows = row_masks(ctx_);
    const auto cols = column_masks(ctx_);
    lower_ = lower_by_opens(rows, tau_, rho_);
    upper_ = upper_by_opens(rows, tau_, rho_);
    converse_ = lower_by_opens(cols, rho_, tau_) && upper_by_opens(cols, rho_, tau_);
}

Cts Cts::discrete(FormalContext ctx) {
    auto tau = FiniteTopology::discrete(ctx.num_objects());
    auto rho = FiniteTopology::discrete(ctx.num_attributes());
    return Cts(std::move(ctx), std::move(tau), std::move(rho));
}

bool is_upper_semicontinuous(const Cts& cts) {
    return upper_by_opens(row_masks(cts.context()), cts.object_topology(), cts.attribute_topology());
}
bool is_lower_semicontinuous(const Cts& cts) {
    return lower_by_opens(row_masks(cts.context()), cts.object_topology(), cts.attribute_topology());
}
bool is_upper_semicontinuous_pointwise(const Cts& cts) {
    return upper_pointwise(row_masks(cts.context()), cts.object_topology(), cts.attribute_topology());
}
bool is_lower_semicontinuous_pointwise(const Cts& cts) {
    return lower_pointwise(row_masks(cts.context()), cts.object_topology(), cts.attribute_topology());
}

bool is_converse_continuous(const Cts& cts) {
    const auto cols = column_masks(cts.context());
    return lower_by_opens(cols, cts.attribute_topology(), cts.object_topology()) &&
           upper_by_opens(cols, cts.attribute_topology(), cts.object_topology());
}

bool is_converse_continuous_pointwise(const Cts& cts) {
    const auto cols = column_masks(cts.context());
    return lower_pointwise(cols, cts.attribute_topology(), cts.object_topology()) &&
           upper_pointwise(cols, cts.attribute_topology(), cts.object_topology());
}

bool validate_ctscr(const Cts& cts) {
    return is_lower_semicontinuous(cts) && is_upper_semicontinuous(cts) && is_converse_continuous(cts);
}

std::vector<ConceptPair> enumerate_clopen_oo_protoconcepts(const Cts& cts, const EnumerationLimits& limits) {
    return clopen_pairs(cts, PairKind::OoProtoconcept, limits);
}
std::vector<ConceptPair> enumerate_clopen_oo_semiconcepts(const Cts& cts, const EnumerationLimits& limits) {
    return clopen_pairs(cts, PairKind::OoSemiconcept, limits);
}

ConceptAlgebra build_clopen_proto_dba(const Cts& cts, const EnumerationLimits& limits) {
    return clopen_algebra(cts, PairKind::OoProtoconcept, limits);
}
ConceptAlgebra build_clopen_semi_dba(const Cts& cts, const EnumerationLimits& limits) {
    return clopen_algebra(cts, PairKind::OoSemiconcept, limits);
}

StoneCheck check_stone_context(const Cts& cts, const EnumerationLimits& limits) {
    StoneCheck r;
    r.ctscr = cts.is_ctscr();
    r.objects_totally_disconnected = cts.object_topology().is_totally_disconnected();
    r.attributes_totally_disconnected = cts.attribute_topology().is_totally_disconnected();
    for (const auto* t : {&cts.object_topology(), &cts.attribute_topology()})
        if (t->is_totally_disconnected() && !t->is_discrete())
            throw InternalInconsistency("finite totally disconnected space that is not discrete");
    if (!r.ctscr) r.counterexample = "not a CTSCR";
    if (!r.objects_totally_disconnected) r.counterexample = "object space is not totally disconnected";
    if (!r.attributes_totally_disconnected) r.counterexample = "attribute space is not totally disconnected";

    const auto& ctx = cts.context();
    const auto semis = enumerate_clopen_oo_semiconcepts(cts, limits);
    r.relation_recovered = true;
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
        // Objects forced by m: those in A for every clopen (A,B) with m ∈ B.
        ObjectSet forced = ctx.all_objects();
        for (const auto& p : semis)
            if (p.intent.test(m)) forced &= p.extent;
        if (!ctx.column(m).subset_of(forced))
            throw InternalInconsistency("an incident pair escapes a clopen oo-semiconcept");
        if (!forced.subset_of(ctx.column(m)) && r.relation_recovered) {
            r.relation_recovered = false;
            const auto g = (forced - ctx.column(m)).indices().front();
            r.counterexample = "(" + ctx.objects()[g] + "," + ctx.attributes()[m] +
                               ") is forced by every clopen oo-semiconcept but not incident";
        }
    }
    return r;
}

std::string to_string(CtsHomClass c) {
    switch (c) {
        case CtsHomClass::None: return "none";
        case CtsHomClass::Homomorphism: return "homomorphism";
        case CtsHomClass::Embedding: return "embedding";
        case CtsHomClass::Isomorphism: return "isomorphism";
        case CtsHomClass::Homeomorphism: return "homeomorphism";
    }
    return "none";
}

bool is_continuous(const FiniteTopology& from, const FiniteTopology& to, const std::vector<std::size_t>& f) {
    if (f.size() != from.ground_size()) throw DimensionError("map does not cover the domain");
    for (auto v : f)
        if (v >= to.ground_size()) throw DimensionError("map value out of range");
    bool ok = true;
    to.for_each_open_mask([&](Mask o) {
        if (!ok) return;
        Mask pre = 0;
        for (std::size_t x = 0; x < f.size(); ++x)
            if ((o >> f[x]) & 1U) pre |= Mask{1} << x;
        ok = from.is_open_mask(pre);
    });
    return ok;
}

CtsHom check_cts_morphism(const Cts& cts1, const Cts& cts2, const std::vector<std::size_t>& alpha,
                          const std::vector<std::size_t>& beta) {
    CtsHom h;
    h.alpha = alpha;
    h.beta = beta;
    const auto ctx_class = check_context_morphism(cts1.context(), cts2.context(), alpha, beta);
    h.alpha_continuous = is_continuous(cts1.object_topology(), cts2.object_topology(), alpha);
    h.beta_continuous = is_continuous(cts1.attribute_topology(), cts2.attribute_topology(), beta);
    if (ctx_class == MorphismClass::None) {
        h.counterexample = "not a context homomorphism";
        return h;
    }
    if (!h.alpha_continuous || !h.beta_continuous) {
        h.counterexample = !h.alpha_continuous ? "object map is not continuous" : "attribute map is not continuous";
        return h;
    }
    switch (ctx_class) {
        case MorphismClass::Homomorphism: h.cls = CtsHomClass::Homomorphism; break;
        case MorphismClass::Embedding: h.cls = CtsHomClass::Embedding; break;
        case MorphismClass::Isomorphism: h.cls = CtsHomClass::Isomorphism; break;
        case MorphismClass::None: break;
    }
    if (h.cls == CtsHomClass::Isomorphism) {
        std::vector<std::size_t> ai(alpha.size()), bi(beta.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) ai[alpha[i]] = i;
        for (std::size_t i = 0; i < beta.size(); ++i) bi[beta[i]] = i;
        if (is_continuous(cts2.object_topology(), cts1.object_topology(), ai) &&
            is_continuous(cts2.attribute_topology(), cts1.attribute_topology(), bi))
            h.cls = CtsHomClass::Homeomorphism;
        else
            h.counterexample = "inverse is not continuous";
    }
    return h;
}

DbaHom induced_dba_iso(const CtsHom& hom, const ConceptAlgebra& clopen1, const ConceptAlgebra& clopen2) {
    if (hom.cls != CtsHomClass::Homeomorphism)
        throw HypothesisError("induced map needs a CTS-homeomorphism, got " + to_string(hom.cls));
    if (hom.alpha.size() != clopen1.context().num_objects() || hom.beta.size() != clopen1.context().num_attributes())
        throw DimensionError("morphism does not start at the first algebra's context");
    std::vector<Index> map;
    map.reserve(clopen2.size());
    for (const auto& p : clopen2.elements()) {
        auto i = clopen1.index_of(preimage(p.extent, hom.alpha), preimage(p.intent, hom.beta));
        if (!i) throw InternalInconsistency("preimage of a clopen pair is not a clopen pair");
        map.push_back(*i);
    }
    return check_hom(clopen2.dba(), clopen1.dba(), std::move(map));
}

Cts transport_cts(const Cts& cts, const std::vector<std::size_t>& alpha, const std::vector<std::size_t>& beta) {
    const auto& ctx = cts.context();
    const std::size_t ng = ctx.num_objects(), nm = ctx.num_attributes();
    if (alpha.size() != ng || beta.size() != nm) throw DimensionError("transport maps do not match the context");
    std::vector<std::string> objects(ng), attributes(nm);
    std::vector<std::vector<bool>> inc(ng, std::vector<bool>(nm, false));
    std::vector<bool> hit_g(ng, false), hit_m(nm, false);
    for (std::size_t g = 0; g < ng; ++g) {
        if (alpha[g] >= ng || hit_g[alpha[g]]) throw DimensionError("object map is not a bijection");
        hit_g[alpha[g]] = true;
        objects[alpha[g]] = ctx.objects()[g];
    }
    for (std::size_t m = 0; m < nm; ++m) {
        if (beta[m] >= nm || hit_m[beta[m]]) throw DimensionError("attribute map is not a bijection");
        hit_m[beta[m]] = true;
        attributes[beta[m]] = ctx.attributes()[m];
    }
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t m = 0; m < nm; ++m) inc[alpha[g]][beta[m]] = ctx.incident(g, m);
    auto carry = [](const FiniteTopology& t, const std::vector<std::size_t>& f) {
        std::vector<GroundSet> opens;
        for (const auto& o : t.opens()) opens.push_back(image(o, f, t.ground_size()));
        return FiniteTopology(t.ground_size(), opens);
    };
    return Cts(FormalContext(objects, attributes, inc, ctx.name()), carry(cts.object_topology(), alpha),
               carry(cts.attribute_topology(), beta));
}

nlohmann::json cts_to_json(const Cts& cts) {
    nlohmann::json j;
    j["context"] = context_to_json(cts.context());
    j["object_opens"] = opens_to_json(cts.object_topology());
    j["attribute_opens"] = opens_to_json(cts.attribute_topology());
    return j;
}

Cts cts_from_json(const nlohmann::json& j) {
    try {
        auto ctx = context_from_json(j.at("context"));
        auto tau = opens_from_json(j.at("object_opens"), ctx.num_objects(), "object_opens");
        auto rho = opens_from_json(j.at("attribute_opens"), ctx.num_attributes(), "attribute_opens");
        return Cts(std::move(ctx), std::move(tau), std::move(rho));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cts json: ") + e.what());
    }
}

Cts load_cts(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return cts_from_json(j);
}

void save_cts(const std::string& path, const Cts& cts) { write_file(path, cts_to_json(cts).dump(2) + "\n"); }

}  // namespace dbatk
