#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dbatk/concepts.hpp"
#include "dbatk/context.hpp"
#include "dbatk/dba.hpp"

namespace dbatk {

/// A topology on {0..n-1} given by its open sets. Every finite topology is
/// also described by the minimal open neighbourhoods U(x), which makes
/// is_open O(n).
class FiniteTopology {
public:
    static constexpr std::size_t kMaxGround = 20;

    /// Throws HypothesisError (with the reasons) unless `opens` is a topology.
    FiniteTopology(std::size_t n, const std::vector<GroundSet>& opens);

    static FiniteTopology discrete(std::size_t n);
    static FiniteTopology indiscrete(std::size_t n);
    /// The topology whose minimal neighbourhoods are the given ones; the
    /// family must be consistent (y ∈ U(x) implies U(y) ⊆ U(x), x ∈ U(x)).
    static FiniteTopology from_neighbourhoods(std::vector<GroundSet> nbhd);

    std::size_t ground_size() const noexcept { return n_; }
    /// All open sets, ascending as binary numbers.
    std::vector<GroundSet> opens() const;
    std::size_t num_opens() const noexcept { return opens_.size(); }
    const GroundSet& neighbourhood(std::size_t x) const { return nbhd_.at(x); }

    bool is_open(const GroundSet& s) const;
    bool is_closed(const GroundSet& s) const { return is_open(s.complement()); }
    bool is_clopen(const GroundSet& s) const { return is_open(s) && is_closed(s); }
    bool is_discrete() const;
    /// Any two distinct points are split by a clopen set.
    bool is_totally_disconnected() const;

    std::vector<GroundSet> clopens() const;

    /// Calls f(mask) for every open set; masks index points by bit.
    template <class F>
    void for_each_open_mask(F&& f) const {
        for (auto m : opens_) f(m);
    }
    bool is_open_mask(std::uint64_t m) const;

    friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
        return a.n_ == b.n_ && a.opens_ == b.opens_;
    }

private:
    FiniteTopology(std::size_t n, std::vector<std::uint64_t> sorted_opens);
    void compute_neighbourhoods();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> opens_;
    std::vector<GroundSet> nbhd_;
};

struct TopologyCheck {
    bool ok = false;
    std::vector<std::string> reasons;
};

/// Contains ∅ and the ground set and is closed under pairwise ∪ and ∩.
TopologyCheck validate_topology(std::size_t n, const std::vector<GroundSet>& opens);

/// Closed sets are generated by the subbase under finite ∪ and ∩ (∅ and
/// the ground set included); the opens are their complements.
FiniteTopology generate_from_closed_subbase(std::size_t n, const std::vector<GroundSet>& subbase);

/// A context whose object and attribute sets carry topologies.
class Cts {
public:
    /// Throws DimensionError when a topology's ground set does not match.
    Cts(FormalContext ctx, FiniteTopology objects, FiniteTopology attributes);
    static Cts discrete(FormalContext ctx);

    const FormalContext& context() const noexcept { return ctx_; }
    const FiniteTopology& object_topology() const noexcept { return tau_; }
    const FiniteTopology& attribute_topology() const noexcept { return rho_; }

    bool lower_semicontinuous() const noexcept { return lower_; }
    bool upper_semicontinuous() const noexcept { return upper_; }
    /// lower and upper semicontinuous
    bool relation_continuous() const noexcept { return lower_ && upper_; }
    bool converse_continuous() const noexcept { return converse_; }
    bool is_ctscr() const noexcept { return relation_continuous() && converse_; }

    friend bool operator==(const Cts& a, const Cts& b) {
        return a.ctx_ == b.ctx_ && a.tau_ == b.tau_ && a.rho_ == b.rho_;
    }

private:
    FormalContext ctx_;
    FiniteTopology tau_, rho_;
    bool lower_ = false, upper_ = false, converse_ = false;
};

/// O^□ open for every open O of the attribute space.
bool is_upper_semicontinuous(const Cts& cts);
/// O^◇ open for every open O of the attribute space.
bool is_lower_semicontinuous(const Cts& cts);
/// Both semicontinuity notions evaluated point by point from the
/// neighbourhood definitions, quantifying over all open sets.
bool is_upper_semicontinuous_pointwise(const Cts& cts);
bool is_lower_semicontinuous_pointwise(const Cts& cts);
/// The same four checks for R⁻¹, i.e. on the transposed CTS.
bool is_converse_continuous(const Cts& cts);
bool is_converse_continuous_pointwise(const Cts& cts);
bool validate_ctscr(const Cts& cts);

/// Oo-proto/semiconcepts with both components clopen, canonical order.
std::vector<ConceptPair> enumerate_clopen_oo_protoconcepts(const Cts& cts, const EnumerationLimits& limits = {});
std::vector<ConceptPair> enumerate_clopen_oo_semiconcepts(const Cts& cts, const EnumerationLimits& limits = {});

/// 𝔯ᵀ and 𝔖ᵀ with their tables; throw HypothesisError unless the CTS is a
/// CTSCR.
ConceptAlgebra build_clopen_proto_dba(const Cts& cts, const EnumerationLimits& limits = {});
ConceptAlgebra build_clopen_semi_dba(const Cts& cts, const EnumerationLimits& limits = {});

struct StoneCheck {
    bool ctscr = false;
    bool objects_totally_disconnected = false;
    bool attributes_totally_disconnected = false;
    /// gRm whenever every clopen oo-semiconcept (A,B) with m ∈ B has g ∈ A.
    bool relation_recovered = false;
    std::string counterexample;
    bool ok() const noexcept {
        return ctscr && objects_totally_disconnected && attributes_totally_disconnected && relation_recovered;
    }
};

/// Compactness is automatic for finite spaces. Throws InternalInconsistency
/// if a totally disconnected finite space is not discrete.
StoneCheck check_stone_context(const Cts& cts, const EnumerationLimits& limits = {});
inline bool is_stone_context(const Cts& cts, const EnumerationLimits& limits = {}) {
    return check_stone_context(cts, limits).ok();
}

enum class CtsHomClass { None, Homomorphism, Embedding, Isomorphism, Homeomorphism };
std::string to_string(CtsHomClass c);

struct CtsHom {
    std::vector<std::size_t> alpha;  ///< objects of cts1 → objects of cts2
    std::vector<std::size_t> beta;   ///< attributes of cts1 → attributes of cts2
    CtsHomClass cls = CtsHomClass::None;
    bool alpha_continuous = false, beta_continuous = false;
    std::string counterexample;
};

/// Preimages of opens are open.
bool is_continuous(const FiniteTopology& from, const FiniteTopology& to, const std::vector<std::size_t>& f);

/// Strongest class of (α, β): context homomorphism with continuous
/// components, injective for an embedding, bijective for an isomorphism,
/// and with continuous inverses for a homeomorphism. Throws DimensionError
/// on out-of-range maps.
CtsHom check_cts_morphism(const Cts& cts1, const Cts& cts2, const std::vector<std::size_t>& alpha,
                          const std::vector<std::size_t>& beta);

/// f_{αβ}(A,B) = (α⁻¹(A), β⁻¹(B)) from 𝔯ᵀ(cts2) to 𝔯ᵀ(cts1), as a verified
/// map between the given algebras. Throws HypothesisError unless `hom` is a
/// homeomorphism.
DbaHom induced_dba_iso(const CtsHom& hom, const ConceptAlgebra& clopen1, const ConceptAlgebra& clopen2);

/// Transports a CTS along bijections: objects/attributes are renamed and
/// both the relation and the opens are carried over.
Cts transport_cts(const Cts& cts, const std::vector<std::size_t>& alpha, const std::vector<std::size_t>& beta);

/// {"context", "object_opens", "attribute_opens"}; a discrete family is
/// written as the string "discrete".
nlohmann::json cts_to_json(const Cts& cts);
Cts cts_from_json(const nlohmann::json& j);
Cts load_cts(const std::string& path);
void save_cts(const std::string& path, const Cts& cts);

}  // namespace dbatk
