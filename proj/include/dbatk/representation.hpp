#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dbatk/concepts.hpp"
#include "dbatk/dba.hpp"
#include "dbatk/filters.hpp"
#include "dbatk/topology.hpp"

namespace dbatk {

/// Verdict of one verified statement plus the first counterexample found.
struct TheoremReport {
    std::string theorem;
    bool verdict = false;
    std::string counterexample;
};

/// {"theorem", "input", "verdict", "counterexample", "elapsed_ms"}; the
/// counterexample is null when the verdict holds.
nlohmann::json report_to_json(const TheoremReport& r, const std::string& input_digest, std::int64_t elapsed_ms);
TheoremReport report_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a of the text, as 16 hex digits.
std::string fnv1a_digest(const std::string& text);

/// 𝕂ᵀ_pr(D) together with the spectrum that fixes its object and attribute
/// order (filter i is generated by atoms()[i], ideal j by coatoms()[j]).
struct PrimaryCts {
    PrimarySpectrum spectrum;
    Cts cts;
};

/// (F_pr(D), 𝒯) × (I_pr(D), 𝒥) with ∇; the topologies are generated from
/// the closed subbases {F_x} and {I_x}. Throws InternalInconsistency if the
/// result is not a discrete Stone CTSCR.
PrimaryCts build_primary_cts(const FiniteDba& d, const EnumerationLimits& limits = {});
inline Cts build_kpr_cts(const FiniteDba& d, const EnumerationLimits& limits = {}) {
    return build_primary_cts(d, limits).cts;
}

struct RepresentationReport {
    DbaClassification classification;
    std::vector<ConceptPair> images;  ///< h(x) for every x
    DbaHom hom;                       ///< into `target`
    /// The algebra h maps into: 𝔯ᵀ(𝕂ᵀ_pr(D)) for the object-oriented map,
    /// the protoconcepts of the standard context for the classical one.
    std::optional<ConceptAlgebra> target;
    /// Pure inputs only: h(D) = 𝔖ᵀ and h is an isomorphism onto it.
    bool onto_semiconcepts = false;
    /// The verdicts stand in the relation the theorems predict for the
    /// classification of the input.
    bool ladder_consistent = false;
    /// Classical map only: h_oo(x) = (A^c, B) for h(x) = (A, B).
    bool transport_consistent = false;
    std::string counterexample;
};

/// h(x) = (F_{¬x}, I_x) into 𝔯ᵀ(𝕂ᵀ_pr(D)).
RepresentationReport rep_map_oo(const FiniteDba& d, const EnumerationLimits& limits = {});
/// h(x) = (F_x, I_x) into the protoconcepts of (F_pr, I_pr, Δ).
RepresentationReport rep_map_wille(const FiniteDba& d, const EnumerationLimits& limits = {});

struct AtomRepresentation {
    /// (atoms of D_⊓, coatoms of D_⊔, ⊑)
    FormalContext k_ac;
    std::vector<ConceptPair> images;  ///< ({a : a ⊑ x}, {b : x ⊑ b})
    DbaHom hom;                       ///< into the protoconcepts of k_ac
    /// k_ac equals the standard context and its complement equals ∇ under
    /// atom ↔ filter, coatom ↔ ideal.
    bool matches_standard_context = false;
    /// ({a : a ⋢ x}, {b : x ⊑ b}) coincides with rep_map_oo's images.
    bool complement_form_matches = false;
    bool verdicts_match = false;
    std::string counterexample;
};
AtomRepresentation finite_rep_atoms(const FiniteDba& d, const EnumerationLimits& limits = {});

/// The pure part of 𝔯ᵀ(𝕂ᵀ_pr(D)) is exactly {h(x) : x ∈ D_p}, its
/// ⊓-idempotents the images of D_⊓ and its ⊔-idempotents those of D_⊔.
TheoremReport characterize_pure_part(const FiniteDba& d, const EnumerationLimits& limits = {});

/// Identities between the loci F_x, I_x: derivations in Δ, complements,
/// intersections and idempotent absorption.
TheoremReport check_locus_identities(const FiniteDba& d);
/// F_x^■ = I_{¬x}, F_x^◆ = I_{⌐(x⊓x)}, I_x^□ = F_{⌐x}, I_x^◇ = F_{¬(x⊔x)} in ∇.
TheoremReport check_clopen_locus_identities(const FiniteDba& d);
/// F_{¬a} = F_{¬(a⊓a)}
TheoremReport check_negation_locus(const FiniteDba& d);
/// F ∇ I iff every pure (X,Y) of 𝔯ᵀ(𝕂ᵀ_pr(D)) with I ∈ Y has F ∈ X.
TheoremReport check_nabla_from_pure_part(const FiniteDba& d, const EnumerationLimits& limits = {});

struct KMapsReport {
    std::vector<std::size_t> k1;  ///< object g ↦ position of k₁(g) among the primary filters of 𝔖ᵀ
    std::vector<std::size_t> k2;  ///< attribute m ↦ position of k₂(m) among the primary ideals
    CtsHom hom;                   ///< stone → 𝕂ᵀ_pr(𝔖ᵀ(stone))
    DbaHom induced;               ///< f_{k₁k₂} : 𝔯ᵀ(𝕂ᵀ_pr(𝔖ᵀ)) → 𝔯ᵀ(stone)
    bool verdict = false;
    std::string counterexample;
};

/// k₁(g) = {(A,B) ∈ 𝔖ᵀ : g ∉ A}, k₂(m) = {(A,B) ∈ 𝔖ᵀ : m ∈ B}. Throws
/// HypothesisError unless `stone` is a Stone context.
KMapsReport k_maps(const Cts& stone, const EnumerationLimits& limits = {});

/// G(f) = f restricted to the pure parts. Throws HypothesisError unless f
/// is an isomorphism of fully contextual dBas.
struct FunctorGImage {
    Subalgebra source, target;
    DbaHom restriction;
};
FunctorGImage functor_G(const FiniteDba& d, const FiniteDba& m, const std::vector<Index>& f);

/// F(f) = (α_f, β_f) : 𝕂ᵀ_pr(M) → 𝕂ᵀ_pr(D) for an isomorphism f : D → M of
/// pure dBas, with the square h_M ∘ f = f_{α_f β_f} ∘ h_D checked.
struct FunctorFImage {
    PreimageMaps maps;
    CtsHom hom;
    bool square_commutes = false;
    std::string counterexample;
};
FunctorFImage functor_F(const FiniteDba& d, const FiniteDba& m, const std::vector<Index>& f,
                        const EnumerationLimits& limits = {});

/// Functor laws on the given automorphisms of one dBa: identities go to
/// identities, G(g∘f) = G(g)∘G(f), and F(g∘f) = F(f)∘F(g) with every
/// square commuting; distinct automorphisms give distinct f_{αβ}.
TheoremReport check_functor_G_laws(const FiniteDba& d, const std::vector<std::vector<Index>>& autos);
TheoremReport check_functor_F_laws(const FiniteDba& d, const std::vector<std::vector<Index>>& autos,
                                   const EnumerationLimits& limits = {});

}  // namespace dbatk
