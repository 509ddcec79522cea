#include "dbatk/concepts.hpp"

#include <algorithm>
#include <bit>

#include "dbatk/error.hpp"

namespace dbatk {

namespace {

using Mask = std::uint64_t;

/// Every derivation operator tabulated over all subsets of both sides.
struct SubsetTables {
    unsigned ng = 0, nm = 0;
    Mask gfull = 0, mfull = 0;
    std::vector<Mask> intent;       // A′, indexed by A
    std::vector<Mask> extent;       // B′, indexed by B
    std::vector<Mask> black_box;    // A^■, indexed by A
    std::vector<Mask> diamond;      // B^◇, indexed by B

    explicit SubsetTables(const FormalContext& ctx)
        : ng(static_cast<unsigned>(ctx.num_objects())), nm(static_cast<unsigned>(ctx.num_attributes())) {
        gfull = ng == 64 ? ~Mask{0} : (Mask{1} << ng) - 1;
        mfull = nm == 64 ? ~Mask{0} : (Mask{1} << nm) - 1;
        std::vector<Mask> rows(ng), cols(nm);
        for (unsigned g = 0; g < ng; ++g) rows[g] = ctx.row(g).to_mask();
        for (unsigned m = 0; m < nm; ++m) cols[m] = ctx.column(m).to_mask();

        const std::size_t sg = std::size_t{1} << ng, sm = std::size_t{1} << nm;
        intent.resize(sg);
        black_box.resize(sg);
        intent[0] = mfull;
        for (Mask a = 1; a < sg; ++a) intent[a] = intent[a & (a - 1)] & rows[std::countr_zero(a)];
        for (Mask a = 0; a < sg; ++a) {
            Mask bb = 0;
            for (unsigned m = 0; m < nm; ++m)
                if ((cols[m] & ~a) == 0) bb |= Mask{1} << m;
            black_box[a] = bb;
        }
        extent.resize(sm);
        diamond.resize(sm);
        extent[0] = gfull;
        diamond[0] = 0;
        for (Mask b = 1; b < sm; ++b) {
            const auto low = std::countr_zero(b);
            extent[b] = extent[b & (b - 1)] & cols[low];
            diamond[b] = diamond[b & (b - 1)] | cols[low];
        }
    }

    ConceptPair make(Mask a, Mask b) const {
        ConceptPair p;
        p.extent = ObjectSet::from_mask(ng, a);
        p.intent = AttributeSet::from_mask(nm, b);
        p.semiconcept_left = intent[a] == b;
        p.semiconcept_right = extent[b] == a;
        p.protoconcept = extent[intent[a]] == extent[b];
        p.oo_semiconcept_left = black_box[a] == b;
        p.oo_semiconcept_right = diamond[b] == a;
        p.oo_protoconcept = diamond[black_box[a]] == diamond[b];
        return p;
    }
};

using MaskPair = std::pair<Mask, Mask>;

/// Pairs (A,B) with key_a[A] == key_b[B], grouped by a counting sort on the
/// key so the output is already in canonical order.
std::vector<MaskPair> match_by_key(const std::vector<Mask>& key_a, const std::vector<Mask>& key_b, std::size_t keys) {
    std::vector<std::uint32_t> offset(keys + 1, 0);
    for (Mask k : key_b) ++offset[k + 1];
    for (std::size_t i = 0; i < keys; ++i) offset[i + 1] += offset[i];
    std::vector<std::uint32_t> sorted(key_b.size());
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (std::size_t b = 0; b < key_b.size(); ++b) sorted[fill[key_b[b]]++] = static_cast<std::uint32_t>(b);
    std::vector<MaskPair> out;
    for (std::size_t a = 0; a < key_a.size(); ++a) {
        const Mask k = key_a[a];
        for (auto i = offset[k]; i < offset[k + 1]; ++i) out.emplace_back(a, sorted[i]);
    }
    return out;
}

std::vector<MaskPair> enumerate_masks(const SubsetTables& t, PairKind kind) {
    const std::size_t sg = std::size_t{1} << t.ng, sm = std::size_t{1} << t.nm;
    std::vector<MaskPair> out;
    switch (kind) {
        case PairKind::Concept:
            for (Mask a = 0; a < sg; ++a)
                if (t.extent[t.intent[a]] == a) out.emplace_back(a, t.intent[a]);
            return out;
        case PairKind::OoConcept:
            for (Mask a = 0; a < sg; ++a)
                if (t.diamond[t.black_box[a]] == a) out.emplace_back(a, t.black_box[a]);
            return out;
        case PairKind::Semiconcept:
            for (Mask a = 0; a < sg; ++a) out.emplace_back(a, t.intent[a]);
            for (Mask b = 0; b < sm; ++b) out.emplace_back(t.extent[b], b);
            break;
        case PairKind::OoSemiconcept:
            for (Mask a = 0; a < sg; ++a) out.emplace_back(a, t.black_box[a]);
            for (Mask b = 0; b < sm; ++b) out.emplace_back(t.diamond[b], b);
            break;
        case PairKind::Protoconcept: {
            std::vector<Mask> ka(sg);
            for (Mask a = 0; a < sg; ++a) ka[a] = t.extent[t.intent[a]];
            return match_by_key(ka, t.extent, sg);
        }
        case PairKind::OoProtoconcept: {
            std::vector<Mask> ka(sg);
            for (Mask a = 0; a < sg; ++a) ka[a] = t.diamond[t.black_box[a]];
            return match_by_key(ka, t.diamond, sg);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void require_same_width(const FormalContext& ctx, const ConceptPair& p) {
    if (p.extent.width() != ctx.num_objects() || p.intent.width() != ctx.num_attributes())
        throw DimensionError("pair does not belong to this context");
}

constexpr std::size_t kMaxAlgebraSize = 8192;

}  // namespace

bool canonical_less(const ConceptPair& a, const ConceptPair& b) {
    if (a.extent != b.extent) return a.extent < b.extent;
    return a.intent < b.intent;
}

ConceptPair classify_pair(const FormalContext& ctx, const ObjectSet& a, const AttributeSet& b) {
    ConceptPair p;
    const AttributeSet ai = derive_intent(ctx, a);
    const ObjectSet be = derive_extent(ctx, b);
    const AttributeSet abb = black_box(ctx, a);
    const ObjectSet bd = diamond(ctx, b);
    p.extent = a;
    p.intent = b;
    p.semiconcept_left = ai == b;
    p.semiconcept_right = be == a;
    p.protoconcept = derive_extent(ctx, ai) == be;
    p.oo_semiconcept_left = abb == b;
    p.oo_semiconcept_right = bd == a;
    p.oo_protoconcept = diamond(ctx, abb) == bd;
    return p;
}

std::string to_string(PairKind k) {
    switch (k) {
        case PairKind::Concept: return "concept";
        case PairKind::OoConcept: return "oo-concept";
        case PairKind::Semiconcept: return "semi";
        case PairKind::Protoconcept: return "proto";
        case PairKind::OoSemiconcept: return "oo-semi";
        case PairKind::OoProtoconcept: return "oo-proto";
    }
    return "?";
}

std::optional<PairKind> parse_pair_kind(const std::string& s) {
    for (auto k : {PairKind::Concept, PairKind::OoConcept, PairKind::Semiconcept, PairKind::Protoconcept,
                   PairKind::OoSemiconcept, PairKind::OoProtoconcept})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

void check_enumeration_cap(const FormalContext& ctx, const EnumerationLimits& limits) {
    const std::size_t ng = ctx.num_objects(), nm = ctx.num_attributes();
    const unsigned cap = limits.force ? limits.max_exponent
                                      : std::min(limits.max_exponent, EnumerationLimits::kDefaultExponent);
    if (ng > EnumerationLimits::kMaxSide || nm > EnumerationLimits::kMaxSide || ng + nm > cap)
        throw CapExceeded("enumeration needs 2^|G|·2^|M| = 2^" + std::to_string(ng) + "·2^" + std::to_string(nm) +
                          " = 2^" + std::to_string(ng + nm) + " candidate pairs, cap is 2^" + std::to_string(cap) +
                          (limits.force ? "" : " (raise with --cap N --force)"));
}

std::vector<ConceptPair> enumerate_pairs(const FormalContext& ctx, PairKind kind, const EnumerationLimits& limits) {
    check_enumeration_cap(ctx, limits);
    const SubsetTables t(ctx);
    std::vector<ConceptPair> out;
    for (const auto& [a, b] : enumerate_masks(t, kind)) out.push_back(t.make(a, b));
    return out;
}

ConceptPair oo_meet(const FormalContext& ctx, const ConceptPair& p, const ConceptPair& q) {
    require_same_width(ctx, p);
    require_same_width(ctx, q);
    const ObjectSet a = p.extent | q.extent;
    return classify_pair(ctx, a, black_box(ctx, a));
}

ConceptPair oo_join(const FormalContext& ctx, const ConceptPair& p, const ConceptPair& q) {
    require_same_width(ctx, p);
    require_same_width(ctx, q);
    const AttributeSet b = p.intent & q.intent;
    return classify_pair(ctx, diamond(ctx, b), b);
}

ConceptPair oo_neg(const FormalContext& ctx, const ConceptPair& p) {
    require_same_width(ctx, p);
    const ObjectSet a = p.extent.complement();
    return classify_pair(ctx, a, black_box(ctx, a));
}

ConceptPair oo_opp(const FormalContext& ctx, const ConceptPair& p) {
    require_same_width(ctx, p);
    const AttributeSet b = p.intent.complement();
    return classify_pair(ctx, diamond(ctx, b), b);
}

ConceptPair oo_top(const FormalContext& ctx) { return classify_pair(ctx, ctx.empty_objects(), ctx.empty_attributes()); }
ConceptPair oo_bot(const FormalContext& ctx) { return classify_pair(ctx, ctx.all_objects(), ctx.all_attributes()); }

ConceptPair wille_meet(const FormalContext& ctx, const ConceptPair& p, const ConceptPair& q) {
    require_same_width(ctx, p);
    require_same_width(ctx, q);
    const ObjectSet a = p.extent & q.extent;
    return classify_pair(ctx, a, derive_intent(ctx, a));
}

ConceptPair wille_join(const FormalContext& ctx, const ConceptPair& p, const ConceptPair& q) {
    require_same_width(ctx, p);
    require_same_width(ctx, q);
    const AttributeSet b = p.intent & q.intent;
    return classify_pair(ctx, derive_extent(ctx, b), b);
}

ConceptPair wille_neg(const FormalContext& ctx, const ConceptPair& p) {
    require_same_width(ctx, p);
    const ObjectSet a = p.extent.complement();
    return classify_pair(ctx, a, derive_intent(ctx, a));
}

ConceptPair wille_opp(const FormalContext& ctx, const ConceptPair& p) {
    require_same_width(ctx, p);
    const AttributeSet b = p.intent.complement();
    return classify_pair(ctx, derive_extent(ctx, b), b);
}

ConceptPair wille_top(const FormalContext& ctx) { return classify_pair(ctx, ctx.all_objects(), ctx.empty_attributes()); }
ConceptPair wille_bot(const FormalContext& ctx) { return classify_pair(ctx, ctx.empty_objects(), ctx.all_attributes()); }

bool pair_leq_oo(const ConceptPair& p, const ConceptPair& q) {
    return q.extent.subset_of(p.extent) && q.intent.subset_of(p.intent);
}

bool pair_leq_wille(const ConceptPair& p, const ConceptPair& q) {
    return p.extent.subset_of(q.extent) && q.intent.subset_of(p.intent);
}

ConceptAlgebra::ConceptAlgebra(FormalContext ctx, PairKind kind, std::vector<ConceptPair> elements, FiniteDba dba)
    : ctx_(std::move(ctx)), kind_(kind), elements_(std::move(elements)), dba_(std::move(dba)) {
    if (dba_.size() != elements_.size()) throw DimensionError("algebra tables do not match its elements");
}

std::optional<Index> ConceptAlgebra::index_of(const ObjectSet& a, const AttributeSet& b) const {
    ConceptPair probe;
    probe.extent = a;
    probe.intent = b;
    auto it = std::lower_bound(elements_.begin(), elements_.end(), probe, canonical_less);
    if (it == elements_.end() || !(*it == probe)) return std::nullopt;
    return static_cast<Index>(it - elements_.begin());
}

Index ConceptAlgebra::require_index(const ObjectSet& a, const AttributeSet& b) const {
    auto i = index_of(a, b);
    if (!i) throw DimensionError("pair is not an element of this algebra");
    return *i;
}

ConceptAlgebra build_algebra(const FormalContext& ctx, PairKind kind, const EnumerationLimits& limits) {
    return build_algebra_on(ctx, kind, nullptr, limits);
}

ConceptAlgebra build_algebra_on(const FormalContext& ctx, PairKind kind, const PairFilter& keep,
                                const EnumerationLimits& limits) {
    if (kind == PairKind::Concept || kind == PairKind::OoConcept)
        throw HypothesisError(to_string(kind) + " pairs do not carry a dBa; use proto, semi, oo-proto or oo-semi");
    check_enumeration_cap(ctx, limits);
    const SubsetTables t(ctx);
    auto masks = enumerate_masks(t, kind);
    if (keep) std::erase_if(masks, [&](const MaskPair& p) { return !keep(p.first, p.second); });
    const std::size_t n = masks.size();
    if (n > kMaxAlgebraSize && !limits.force)
        throw CapExceeded("algebra has " + std::to_string(n) + " elements; tables of more than " +
                          std::to_string(kMaxAlgebraSize) + " elements need --force");

    constexpr Index kMissing = ~Index{0};
    auto find = [&](Mask a, Mask b) -> Index {
        auto it = std::lower_bound(masks.begin(), masks.end(), MaskPair{a, b});
        if (it == masks.end() || *it != MaskPair{a, b}) return kMissing;
        return static_cast<Index>(it - masks.begin());
    };
    auto lookup = [&](Mask a, Mask b) -> Index {
        const Index i = find(a, b);
        if (i != kMissing) return i;
        if (keep) throw HypothesisError("selected pairs are not closed under the operations");
        throw InternalInconsistency("operation result missing from the enumerated carrier");
    };
    auto present = [&](Index i) {
        if (i == kMissing) lookup(~Mask{0}, ~Mask{0});
        return i;
    };

    const bool oo = kind == PairKind::OoProtoconcept || kind == PairKind::OoSemiconcept;
    // ⊓ and ¬ results are determined by their extent, ⊔ and ⌐ results by
    // their intent, so one index per subset suffices.
    std::vector<Index> by_extent(std::size_t{1} << t.ng), by_intent(std::size_t{1} << t.nm);
    for (Mask a = 0; a < by_extent.size(); ++a) by_extent[a] = find(a, oo ? t.black_box[a] : t.intent[a]);
    for (Mask b = 0; b < by_intent.size(); ++b) by_intent[b] = find(oo ? t.diamond[b] : t.extent[b], b);

    std::vector<Index> meet(n * n), join(n * n), neg(n), opp(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b] = masks[i];
        neg[i] = present(by_extent[~a & t.gfull]);
        opp[i] = present(by_intent[~b & t.mfull]);
        Index* mrow = meet.data() + i * n;
        Index* jrow = join.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const auto [c, d] = masks[j];
            mrow[j] = present(by_extent[oo ? (a | c) : (a & c)]);
            jrow[j] = present(by_intent[b & d]);
        }
    }
    const Index top = oo ? lookup(0, 0) : lookup(t.gfull, 0);
    const Index bot = oo ? lookup(t.gfull, t.mfull) : lookup(0, t.mfull);

    std::vector<ConceptPair> elements;
    std::vector<std::string> labels;
    elements.reserve(n);
    labels.reserve(n);
    for (const auto& [a, b] : masks) {
        elements.push_back(t.make(a, b));
        labels.push_back(format_pair(ctx, elements.back()));
    }
    FiniteDba dba(n, std::move(meet), std::move(join), std::move(neg), std::move(opp), top, bot, std::move(labels));
    return ConceptAlgebra(ctx, kind, std::move(elements), std::move(dba));
}

ConceptAlgebra build_proto_dba(const FormalContext& ctx, const EnumerationLimits& limits) {
    return build_algebra(ctx, PairKind::OoProtoconcept, limits);
}
ConceptAlgebra build_semi_dba(const FormalContext& ctx, const EnumerationLimits& limits) {
    return build_algebra(ctx, PairKind::OoSemiconcept, limits);
}
ConceptAlgebra build_wille_proto_dba(const FormalContext& ctx, const EnumerationLimits& limits) {
    return build_algebra(ctx, PairKind::Protoconcept, limits);
}
ConceptAlgebra build_wille_semi_dba(const FormalContext& ctx, const EnumerationLimits& limits) {
    return build_algebra(ctx, PairKind::Semiconcept, limits);
}

WilleOoTransport wille_oo_transport(const FormalContext& ctx, const EnumerationLimits& limits) {
    ConceptAlgebra wille = build_wille_proto_dba(ctx, limits);
    ConceptAlgebra oo = build_proto_dba(complement_context(ctx), limits);
    std::vector<Index> map;
    map.reserve(wille.size());
    for (const auto& p : wille.elements()) {
        auto idx = oo.index_of(p.extent.complement(), p.intent);
        if (!idx) throw InternalInconsistency("transported pair " + format_pair(ctx, p) + " is not in R(K^c)");
        map.push_back(*idx);
    }
    DbaHom hom = check_hom(wille.dba(), oo.dba(), std::move(map));
    return WilleOoTransport{std::move(wille), std::move(oo), std::move(hom)};
}

std::string format_pair(const FormalContext& ctx, const ConceptPair& p) {
    auto join_names = [](const std::vector<std::string>& names) {
        std::string s = "{";
        for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
        return s + "}";
    };
    return "(" + join_names(ctx.names_of(p.extent)) + "," + join_names(ctx.names_of(p.intent)) + ")";
}

nlohmann::json algebra_to_json(const FormalContext& ctx, PairKind kind, const std::vector<ConceptPair>& elements,
                               const FiniteDba* dba) {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["objects"] = ctx.objects();
    j["attributes"] = ctx.attributes();
    nlohmann::json elems = nlohmann::json::array();
    for (const auto& p : elements)
        elems.push_back({{"extent", ctx.names_of(p.extent)}, {"intent", ctx.names_of(p.intent)}});
    j["elements"] = std::move(elems);
    if (dba) {
        const std::size_t n = dba->size();
        nlohmann::json meet = nlohmann::json::array(), join = nlohmann::json::array();
        for (std::size_t i = 0; i < n; ++i) {
            auto mrow = dba->meet_table().subspan(i * n, n);
            auto jrow = dba->join_table().subspan(i * n, n);
            meet.push_back(std::vector<Index>(mrow.begin(), mrow.end()));
            join.push_back(std::vector<Index>(jrow.begin(), jrow.end()));
        }
        j["meet"] = std::move(meet);
        j["join"] = std::move(join);
        j["neg"] = std::vector<Index>(dba->neg_table().begin(), dba->neg_table().end());
        j["opp"] = std::vector<Index>(dba->opp_table().begin(), dba->opp_table().end());
        j["top"] = dba->top();
        j["bot"] = dba->bot();
    }
    return j;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string hasse_dot(const std::vector<CarrierSet>& up, const std::vector<std::string>& labels,
                      const std::string& graph_name) {
    const std::size_t n = up.size();
    if (labels.size() != n) throw DimensionError("hasse_dot: one label per element required");
    // strictly above: x ⊑ y but not y ⊑ x
    std::vector<CarrierSet> strict(n, CarrierSet(n));
    for (std::size_t x = 0; x < n; ++x) {
        strict[x] = up[x];
        up[x].for_each([&](std::size_t y) {
            if (up[y].test(x)) strict[x].reset(y);
        });
    }
    std::string out = "digraph \"" + dot_escape(graph_name) + "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t x = 0; x < n; ++x)
        out += "  n" + std::to_string(x) + " [label=\"" + dot_escape(labels[x]) + "\"];\n";
    for (std::size_t x = 0; x < n; ++x) {
        CarrierSet covers = strict[x];
        strict[x].for_each([&](std::size_t z) { covers -= strict[z]; });
        covers.for_each([&](std::size_t y) { out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n"; });
    }
    return out + "}\n";
}

std::string hasse_dot(const FiniteDba& d, const std::string& graph_name) {
    const QuasiOrder q(d);
    std::vector<CarrierSet> up;
    up.reserve(d.size());
    for (Index x = 0; x < d.size(); ++x) up.push_back(q.up(x));
    return hasse_dot(up, d.labels(), graph_name);
}

}  // namespace dbatk
