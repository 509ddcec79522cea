#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbatk/context.hpp"
#include "dbatk/dba.hpp"

namespace dbatk {

enum class SubsetKind { Filter, Ideal };

/// A subset of one dBa's carrier read as a filter or an ideal. Bound to the
/// dBa it was built against; using it with another dBa throws.
class CarrierSubset {
public:
    CarrierSubset(const FiniteDba& d, CarrierSet members, SubsetKind kind);
    /// Same, reusing an already computed quasi-order of `d`.
    CarrierSubset(const FiniteDba& d, const QuasiOrder& q, CarrierSet members, SubsetKind kind);

    const CarrierSet& members() const noexcept { return members_; }
    SubsetKind kind() const noexcept { return kind_; }
    std::uint64_t dba_id() const noexcept { return dba_id_; }
    bool contains(Index x) const { return members_.test(x); }

    /// Closed under ⊓ (resp. ⊔) and upward (resp. downward) closed in ⊑.
    bool valid() const noexcept { return valid_; }
    bool proper() const noexcept { return proper_; }
    /// proper, valid, and x or ¬x (resp. x or ⌐x) is a member for every x.
    bool primary() const noexcept { return primary_; }

    void require_bound_to(const FiniteDba& d) const;

    friend bool operator==(const CarrierSubset& a, const CarrierSubset& b) {
        return a.dba_id_ == b.dba_id_ && a.kind_ == b.kind_ && a.members_ == b.members_;
    }

private:
    CarrierSet members_;
    SubsetKind kind_;
    std::uint64_t dba_id_;
    bool valid_ = false, proper_ = false, primary_ = false;
};

bool is_filter(const FiniteDba& d, const CarrierSet& s);
bool is_ideal(const FiniteDba& d, const CarrierSet& s);
bool is_filter(const FiniteDba& d, const QuasiOrder& q, const CarrierSet& s);
bool is_ideal(const FiniteDba& d, const QuasiOrder& q, const CarrierSet& s);

/// Smallest filter (ideal) containing X; throws DimensionError for empty X.
CarrierSubset generate_filter(const FiniteDba& d, const std::vector<Index>& x);
CarrierSubset generate_ideal(const FiniteDba& d, const std::vector<Index>& x);

/// {x : a ⊑ x} for every atom a of D_⊓, in atom order. Throws
/// HypothesisError when D_⊓ is not Boolean.
std::vector<CarrierSubset> enumerate_primary_filters(const FiniteDba& d);
/// {x : x ⊑ b} for every coatom b of D_⊔, in coatom order.
std::vector<CarrierSubset> enumerate_primary_ideals(const FiniteDba& d);

/// Definitional scan over all 2^n subsets (n ≤ 16, CapExceeded beyond),
/// ascending by member set.
std::vector<CarrierSubset> scan_primary_filters(const FiniteDba& d);
std::vector<CarrierSubset> scan_primary_ideals(const FiniteDba& d);

struct Separation {
    CarrierSubset filter;
    CarrierSubset ideal;
};

/// Primary G ⊇ F and J ⊇ I with G ∩ J = ∅. Throws HypothesisError unless F
/// is a filter, I an ideal and F ∩ I = ∅.
Separation separate_filter_ideal(const FiniteDba& d, const CarrierSubset& f, const CarrierSubset& i);

/// A primary filter (ideal) containing a proper filter (ideal).
CarrierSubset extend_to_primary(const FiniteDba& d, const CarrierSubset& s);

/// Primary filters and ideals of one dBa with the loci F_x = {F : x ∈ F} and
/// I_x = {I : x ∈ I} as sets over filter / ideal positions.
class PrimarySpectrum {
public:
    explicit PrimarySpectrum(const FiniteDba& d);

    std::uint64_t dba_id() const noexcept { return dba_id_; }
    const std::vector<CarrierSubset>& filters() const noexcept { return filters_; }
    const std::vector<CarrierSubset>& ideals() const noexcept { return ideals_; }
    /// Generating atom of filter i / coatom of ideal j.
    const std::vector<Index>& atoms() const noexcept { return atoms_; }
    const std::vector<Index>& coatoms() const noexcept { return coatoms_; }

    const ObjectSet& filter_locus(Index x) const { return f_loci_.at(x); }
    const AttributeSet& ideal_locus(Index x) const { return i_loci_.at(x); }

    /// Filter labels "F@<atom label>", ideal labels "I@<coatom label>".
    const std::vector<std::string>& filter_labels() const noexcept { return filter_labels_; }
    const std::vector<std::string>& ideal_labels() const noexcept { return ideal_labels_; }

    /// F Δ I iff F ∩ I ≠ ∅
    FormalContext standard_context() const;
    /// F ∇ I iff F ∩ I = ∅
    FormalContext standard_complement() const;

    /// Position of a primary filter/ideal given by its member set.
    std::optional<std::size_t> filter_index(const CarrierSet& members) const;
    std::optional<std::size_t> ideal_index(const CarrierSet& members) const;

private:
    std::uint64_t dba_id_;
    std::vector<CarrierSubset> filters_, ideals_;
    std::vector<Index> atoms_, coatoms_;
    std::vector<ObjectSet> f_loci_;
    std::vector<AttributeSet> i_loci_;
    std::vector<std::string> filter_labels_, ideal_labels_;
};

inline FormalContext standard_context(const FiniteDba& d) { return PrimarySpectrum(d).standard_context(); }
inline FormalContext standard_complement(const FiniteDba& d) { return PrimarySpectrum(d).standard_complement(); }

/// α_h(F) = h⁻¹(F) on primary filters of the target, β_h(I) = h⁻¹(I) on
/// primary ideals, as index maps between the two spectra. Throws
/// HypothesisError when h is not a homomorphism.
struct PreimageMaps {
    std::vector<std::size_t> alpha;  ///< target filter index ↦ source filter index
    std::vector<std::size_t> beta;   ///< target ideal index ↦ source ideal index
};
PreimageMaps hom_preimage_maps(const FiniteDba& src, const FiniteDba& dst, const DbaHom& h,
                               const PrimarySpectrum& src_spec, const PrimarySpectrum& dst_spec);

/// {h(x) : x ∈ S}
CarrierSet direct_image(const CarrierSet& s, const std::vector<Index>& map, std::size_t target_size);

}  // namespace dbatk
