#include "dbatk/filters.hpp"

#include <algorithm>

#include "dbatk/error.hpp"

namespace dbatk {

namespace {

bool closed_under(const FiniteDba& d, const CarrierSet& s, bool meet) {
    bool ok = true;
    s.for_each([&](std::size_t x) {
        if (!ok) return;
        s.for_each([&](std::size_t y) {
            const Index r = meet ? d.meet(static_cast<Index>(x), static_cast<Index>(y))
                                 : d.join(static_cast<Index>(x), static_cast<Index>(y));
            ok = ok && s.test(r);
        });
    });
    return ok;
}

bool up_closed(const QuasiOrder& q, const CarrierSet& s) {
    bool ok = true;
    s.for_each([&](std::size_t x) { ok = ok && q.up(static_cast<Index>(x)).subset_of(s); });
    return ok;
}

bool down_closed(const QuasiOrder& q, const CarrierSet& s) {
    bool ok = true;
    s.for_each([&](std::size_t x) { ok = ok && q.down(static_cast<Index>(x)).subset_of(s); });
    return ok;
}

bool decides_every_element(const FiniteDba& d, const CarrierSet& s, bool filter) {
    for (Index x = 0; x < d.size(); ++x)
        if (!s.test(x) && !s.test(filter ? d.neg(x) : d.opp(x))) return false;
    return true;
}

void require_width(const FiniteDba& d, const CarrierSet& s) {
    if (s.width() != d.size())
        throw DimensionError("subset has width " + std::to_string(s.width()) + ", carrier has " +
                             std::to_string(d.size()) + " elements");
}

CarrierSubset generate(const FiniteDba& d, const std::vector<Index>& x, SubsetKind kind) {
    if (x.empty()) throw DimensionError("cannot generate from an empty set");
    const bool filter = kind == SubsetKind::Filter;
    const QuasiOrder q(d);
    CarrierSet s(d.size());
    for (auto v : x) s.set(v);
    // Saturate under the binary operation and the order closure; finite, so
    // the fixpoint is reached.
    for (bool changed = true; changed;) {
        changed = false;
        CarrierSet next = s;
        s.for_each([&](std::size_t a) {
            next |= filter ? q.up(static_cast<Index>(a)) : q.down(static_cast<Index>(a));
            s.for_each([&](std::size_t b) {
                next.set(filter ? d.meet(static_cast<Index>(a), static_cast<Index>(b))
                                : d.join(static_cast<Index>(a), static_cast<Index>(b)));
            });
        });
        if (next != s) {
            s = std::move(next);
            changed = true;
        }
    }
    return CarrierSubset(d, std::move(s), kind);
}

std::vector<CarrierSubset> scan(const FiniteDba& d, SubsetKind kind) {
    const std::size_t n = d.size();
    if (n > 16) throw CapExceeded("definitional scan needs 2^" + std::to_string(n) + " subsets (limit 2^16)");
    const bool filter = kind == SubsetKind::Filter;
    const QuasiOrder q(d);
    std::vector<CarrierSubset> out;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m = 0; m < full; ++m) {  // full set is never proper
        const CarrierSet s = CarrierSet::from_mask(n, m);
        if (!decides_every_element(d, s, filter)) continue;
        if (filter ? !is_filter(d, q, s) : !is_ideal(d, q, s)) continue;
        out.emplace_back(d, s, kind);
    }
    return out;
}

}  // namespace

namespace {

// Up-sets of the atoms of D_⊓ / down-sets of the coatoms of D_⊔.
std::vector<CarrierSubset> primaries(const FiniteDba& d, const QuasiOrder& q, const BooleanReducts& reducts,
                                     SubsetKind kind) {
    const bool filter = kind == SubsetKind::Filter;
    std::vector<CarrierSubset> out;
    for (Index g : filter ? reducts.meet_part.atoms : reducts.join_part.coatoms) {
        out.emplace_back(d, q, filter ? q.up(g) : q.down(g), kind);
        if (!out.back().primary())
            throw HypothesisError((filter ? "up-set of atom " : "down-set of coatom ") + d.label(g) +
                                  (filter ? " is not a primary filter" : " is not a primary ideal") +
                                  "; input is not a dBa");
    }
    return out;
}

}  // namespace

CarrierSubset::CarrierSubset(const FiniteDba& d, CarrierSet members, SubsetKind kind)
    : CarrierSubset(d, QuasiOrder(d), std::move(members), kind) {}

CarrierSubset::CarrierSubset(const FiniteDba& d, const QuasiOrder& q, CarrierSet members, SubsetKind kind)
    : members_(std::move(members)), kind_(kind), dba_id_(d.id()) {
    require_width(d, members_);
    valid_ = kind == SubsetKind::Filter ? is_filter(d, q, members_) : is_ideal(d, q, members_);
    proper_ = !members_.is_full();
    primary_ = valid_ && proper_ && decides_every_element(d, members_, kind == SubsetKind::Filter);
}

void CarrierSubset::require_bound_to(const FiniteDba& d) const {
    if (d.id() != dba_id_) throw DimensionError("subset belongs to a different dBa");
}

bool is_filter(const FiniteDba& d, const QuasiOrder& q, const CarrierSet& s) {
    require_width(d, s);
    return closed_under(d, s, true) && up_closed(q, s);
}

bool is_ideal(const FiniteDba& d, const QuasiOrder& q, const CarrierSet& s) {
    require_width(d, s);
    return closed_under(d, s, false) && down_closed(q, s);
}

bool is_filter(const FiniteDba& d, const CarrierSet& s) { return is_filter(d, QuasiOrder(d), s); }
bool is_ideal(const FiniteDba& d, const CarrierSet& s) { return is_ideal(d, QuasiOrder(d), s); }

CarrierSubset generate_filter(const FiniteDba& d, const std::vector<Index>& x) {
    return generate(d, x, SubsetKind::Filter);
}
CarrierSubset generate_ideal(const FiniteDba& d, const std::vector<Index>& x) {
    return generate(d, x, SubsetKind::Ideal);
}

std::vector<CarrierSubset> enumerate_primary_filters(const FiniteDba& d) {
    return primaries(d, QuasiOrder(d), boolean_reducts(d), SubsetKind::Filter);
}

std::vector<CarrierSubset> enumerate_primary_ideals(const FiniteDba& d) {
    return primaries(d, QuasiOrder(d), boolean_reducts(d), SubsetKind::Ideal);
}

std::vector<CarrierSubset> scan_primary_filters(const FiniteDba& d) { return scan(d, SubsetKind::Filter); }
std::vector<CarrierSubset> scan_primary_ideals(const FiniteDba& d) { return scan(d, SubsetKind::Ideal); }

Separation separate_filter_ideal(const FiniteDba& d, const CarrierSubset& f, const CarrierSubset& i) {
    f.require_bound_to(d);
    i.require_bound_to(d);
    if (f.kind() != SubsetKind::Filter || !f.valid()) throw HypothesisError("first argument is not a filter");
    if (i.kind() != SubsetKind::Ideal || !i.valid()) throw HypothesisError("second argument is not an ideal");
    if (f.members().intersects(i.members())) throw HypothesisError("filter and ideal intersect");
    const auto filters = enumerate_primary_filters(d);
    const auto ideals = enumerate_primary_ideals(d);
    for (const auto& g : filters) {
        if (!f.members().subset_of(g.members())) continue;
        for (const auto& j : ideals)
            if (i.members().subset_of(j.members()) && !g.members().intersects(j.members())) return Separation{g, j};
    }
    throw InternalInconsistency("no separating primary filter/ideal pair exists for a disjoint filter and ideal");
}

CarrierSubset extend_to_primary(const FiniteDba& d, const CarrierSubset& s) {
    s.require_bound_to(d);
    if (!s.valid()) throw HypothesisError("input is not a filter/ideal");
    if (!s.proper()) throw HypothesisError("input is not proper");
    const auto candidates =
        s.kind() == SubsetKind::Filter ? enumerate_primary_filters(d) : enumerate_primary_ideals(d);
    for (const auto& c : candidates)
        if (s.members().subset_of(c.members())) return c;
    throw InternalInconsistency("proper filter/ideal has no primary extension");
}

PrimarySpectrum::PrimarySpectrum(const FiniteDba& d) : dba_id_(d.id()) {
    const auto reducts = boolean_reducts(d);
    atoms_ = reducts.meet_part.atoms;
    coatoms_ = reducts.join_part.coatoms;
    const QuasiOrder q(d);
    filters_ = primaries(d, q, reducts, SubsetKind::Filter);
    ideals_ = primaries(d, q, reducts, SubsetKind::Ideal);
    for (Index a : atoms_) filter_labels_.push_back("F@" + d.label(a));
    for (Index b : coatoms_) ideal_labels_.push_back("I@" + d.label(b));
    f_loci_.assign(d.size(), ObjectSet(filters_.size()));
    i_loci_.assign(d.size(), AttributeSet(ideals_.size()));
    for (std::size_t k = 0; k < filters_.size(); ++k)
        filters_[k].members().for_each([&](std::size_t x) { f_loci_[x].set(k); });
    for (std::size_t k = 0; k < ideals_.size(); ++k)
        ideals_[k].members().for_each([&](std::size_t x) { i_loci_[x].set(k); });
}

FormalContext PrimarySpectrum::standard_context() const {
    std::vector<std::vector<bool>> inc(filters_.size(), std::vector<bool>(ideals_.size(), false));
    for (std::size_t f = 0; f < filters_.size(); ++f)
        for (std::size_t i = 0; i < ideals_.size(); ++i)
            inc[f][i] = filters_[f].members().intersects(ideals_[i].members());
    return FormalContext(filter_labels_, ideal_labels_, inc, "standard context");
}

FormalContext PrimarySpectrum::standard_complement() const {
    std::vector<std::vector<bool>> inc(filters_.size(), std::vector<bool>(ideals_.size(), false));
    for (std::size_t f = 0; f < filters_.size(); ++f)
        for (std::size_t i = 0; i < ideals_.size(); ++i)
            inc[f][i] = !filters_[f].members().intersects(ideals_[i].members());
    return FormalContext(filter_labels_, ideal_labels_, inc, "standard complement");
}

std::optional<std::size_t> PrimarySpectrum::filter_index(const CarrierSet& members) const {
    for (std::size_t k = 0; k < filters_.size(); ++k)
        if (filters_[k].members() == members) return k;
    return std::nullopt;
}

std::optional<std::size_t> PrimarySpectrum::ideal_index(const CarrierSet& members) const {
    for (std::size_t k = 0; k < ideals_.size(); ++k)
        if (ideals_[k].members() == members) return k;
    return std::nullopt;
}

CarrierSet direct_image(const CarrierSet& s, const std::vector<Index>& map, std::size_t target_size) {
    if (s.width() != map.size()) throw DimensionError("direct_image: map does not cover the subset's carrier");
    CarrierSet out(target_size);
    s.for_each([&](std::size_t x) { out.set(map[x]); });
    return out;
}

PreimageMaps hom_preimage_maps(const FiniteDba& src, const FiniteDba& dst, const DbaHom& h,
                               const PrimarySpectrum& src_spec, const PrimarySpectrum& dst_spec) {
    if (src_spec.dba_id() != src.id() || dst_spec.dba_id() != dst.id())
        throw DimensionError("spectrum belongs to a different dBa");
    if (!h.homomorphism) throw HypothesisError("map is not a dBa homomorphism");
    if (h.map.size() != src.size()) throw DimensionError("hom map does not match the source");
    auto preimage_of = [&](const CarrierSet& target) {
        CarrierSet pre(src.size());
        for (Index x = 0; x < src.size(); ++x)
            if (target.test(h.map[x])) pre.set(x);
        return pre;
    };
    PreimageMaps out;
    for (const auto& f : dst_spec.filters()) {
        auto k = src_spec.filter_index(preimage_of(f.members()));
        if (!k) throw InternalInconsistency("preimage of a primary filter is not primary");
        out.alpha.push_back(*k);
    }
    for (const auto& i : dst_spec.ideals()) {
        auto k = src_spec.ideal_index(preimage_of(i.members()));
        if (!k) throw InternalInconsistency("preimage of a primary ideal is not primary");
        out.beta.push_back(*k);
    }
    return out;
}

}  // namespace dbatk
