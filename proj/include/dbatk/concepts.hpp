#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dbatk/context.hpp"
#include "dbatk/dba.hpp"

namespace dbatk {

/// A pair (A, B) with every membership predicate evaluated against one context.
struct ConceptPair {
    ObjectSet extent;
    AttributeSet intent;
    bool semiconcept_left = false;      ///< A′ = B
    bool semiconcept_right = false;     ///< B′ = A
    bool protoconcept = false;          ///< A′′ = B′
    bool oo_semiconcept_left = false;   ///< A^■ = B
    bool oo_semiconcept_right = false;  ///< B^◇ = A
    bool oo_protoconcept = false;       ///< A^■◇ = B^◇

    bool is_concept() const noexcept { return semiconcept_left && semiconcept_right; }
    bool is_semiconcept() const noexcept { return semiconcept_left || semiconcept_right; }
    bool is_oo_concept() const noexcept { return oo_semiconcept_left && oo_semiconcept_right; }
    bool is_oo_semiconcept() const noexcept { return oo_semiconcept_left || oo_semiconcept_right; }

    friend bool operator==(const ConceptPair& a, const ConceptPair& b) {
        return a.extent == b.extent && a.intent == b.intent;
    }
};

/// Canonical order: extent as a binary number (object 0 least significant),
/// then intent the same way.
bool canonical_less(const ConceptPair& a, const ConceptPair& b);

ConceptPair classify_pair(const FormalContext& ctx, const ObjectSet& a, const AttributeSet& b);

enum class PairKind { Concept, OoConcept, Semiconcept, Protoconcept, OoSemiconcept, OoProtoconcept };

std::string to_string(PairKind k);
/// Accepts the CLI spellings concept, oo-concept, semi, proto, oo-semi, oo-proto.
std::optional<PairKind> parse_pair_kind(const std::string& s);

/// Enumeration works over all 2^|G|·2^|M| candidate pairs. The default cap
/// allows |G|+|M| ≤ 20; raising it requires `force`.
struct EnumerationLimits {
    static constexpr unsigned kDefaultExponent = 20;
    /// Hard ceiling: subsets are enumerated as machine words.
    static constexpr unsigned kMaxSide = 30;
    unsigned max_exponent = kDefaultExponent;
    bool force = false;
};

/// Throws CapExceeded naming the 2^|G|·2^|M| bound.
void check_enumeration_cap(const FormalContext& ctx, const EnumerationLimits& limits);

/// All pairs of the given kind in canonical order.
std::vector<ConceptPair> enumerate_pairs(const FormalContext& ctx, PairKind kind, const EnumerationLimits& limits = {});

inline std::vector<ConceptPair> enumerate_oo_protoconcepts(const FormalContext& ctx,
                                                           const EnumerationLimits& limits = {}) {
    return enumerate_pairs(ctx, PairKind::OoProtoconcept, limits);
}
inline std::vector<ConceptPair> enumerate_oo_semiconcepts(const FormalContext& ctx,
                                                          const EnumerationLimits& limits = {}) {
    return enumerate_pairs(ctx, PairKind::OoSemiconcept, limits);
}
inline std::vector<ConceptPair> enumerate_protoconcepts(const FormalContext& ctx, const EnumerationLimits& limits = {}) {
    return enumerate_pairs(ctx, PairKind::Protoconcept, limits);
}
inline std::vector<ConceptPair> enumerate_semiconcepts(const FormalContext& ctx, const EnumerationLimits& limits = {}) {
    return enumerate_pairs(ctx, PairKind::Semiconcept, limits);
}

// Object-oriented operations on R(K) / S(K).

ConceptPair oo_meet(const FormalContext& ctx, const ConceptPair& p, const ConceptPair& q);
ConceptPair oo_join(const FormalContext& ctx, const ConceptPair& p, const ConceptPair& q);
ConceptPair oo_neg(const FormalContext& ctx, const ConceptPair& p);
ConceptPair oo_opp(const FormalContext& ctx, const ConceptPair& p);
/// (∅, ∅)
ConceptPair oo_top(const FormalContext& ctx);
/// (G, M)
ConceptPair oo_bot(const FormalContext& ctx);

// Operations on protoconcepts P(K).

ConceptPair wille_meet(const FormalContext& ctx, const ConceptPair& p, const ConceptPair& q);
ConceptPair wille_join(const FormalContext& ctx, const ConceptPair& p, const ConceptPair& q);
ConceptPair wille_neg(const FormalContext& ctx, const ConceptPair& p);
ConceptPair wille_opp(const FormalContext& ctx, const ConceptPair& p);
/// (G, ∅)
ConceptPair wille_top(const FormalContext& ctx);
/// (∅, M)
ConceptPair wille_bot(const FormalContext& ctx);

/// (A,B) ⊑ (C,D) iff C ⊆ A and D ⊆ B.
bool pair_leq_oo(const ConceptPair& p, const ConceptPair& q);
/// (A,B) ⊑ (C,D) iff A ⊆ C and D ⊆ B.
bool pair_leq_wille(const ConceptPair& p, const ConceptPair& q);

/// An enumerated pair family together with its operation tables. Element i
/// of `dba` is `elements[i]`.
class ConceptAlgebra {
public:
    ConceptAlgebra(FormalContext ctx, PairKind kind, std::vector<ConceptPair> elements, FiniteDba dba);

    const FormalContext& context() const noexcept { return ctx_; }
    PairKind kind() const noexcept { return kind_; }
    const std::vector<ConceptPair>& elements() const noexcept { return elements_; }
    const FiniteDba& dba() const noexcept { return dba_; }
    std::size_t size() const noexcept { return elements_.size(); }

    std::optional<Index> index_of(const ObjectSet& a, const AttributeSet& b) const;
    Index require_index(const ObjectSet& a, const AttributeSet& b) const;

private:
    FormalContext ctx_;
    PairKind kind_;
    std::vector<ConceptPair> elements_;
    FiniteDba dba_;
};

/// Keeps a candidate pair given as bit masks of its extent and intent.
using PairFilter = std::function<bool(std::uint64_t extent, std::uint64_t intent)>;
/// build_algebra restricted to the pairs accepted by `keep`; throws
/// HypothesisError when the kept pairs are not closed under the operations.
ConceptAlgebra build_algebra_on(const FormalContext& ctx, PairKind kind, const PairFilter& keep,
                                const EnumerationLimits& limits = {});

/// Tables over the oo-protoconcepts R(K) with the object-oriented operations.
ConceptAlgebra build_proto_dba(const FormalContext& ctx, const EnumerationLimits& limits = {});
/// Tables over the oo-semiconcepts S(K).
ConceptAlgebra build_semi_dba(const FormalContext& ctx, const EnumerationLimits& limits = {});
/// Tables over the protoconcepts P(K) with the classical operations.
ConceptAlgebra build_wille_proto_dba(const FormalContext& ctx, const EnumerationLimits& limits = {});
/// Tables over the semiconcepts H(K) with the classical operations.
ConceptAlgebra build_wille_semi_dba(const FormalContext& ctx, const EnumerationLimits& limits = {});
/// Dispatches on kind; concepts and oo-concepts carry no dBa and are rejected.
ConceptAlgebra build_algebra(const FormalContext& ctx, PairKind kind, const EnumerationLimits& limits = {});

/// (A,B) ↦ (A^c,B) from P(K) onto R(K^c).
struct WilleOoTransport {
    ConceptAlgebra wille;  ///< P(K)
    ConceptAlgebra oo;     ///< R(K^c)
    DbaHom hom;            ///< map indexed by wille elements
};
WilleOoTransport wille_oo_transport(const FormalContext& ctx, const EnumerationLimits& limits = {});

/// "(A,B)" with identifier lists, e.g. ({q1,q4},{s1,s3,s5}).
std::string format_pair(const FormalContext& ctx, const ConceptPair& p);

/// {"kind", "objects", "attributes", "elements":[{extent,intent}], "meet",
/// "join", "neg", "opp", "top", "bot"}; the tables are omitted for the
/// concept kinds, which carry no dBa.
nlohmann::json algebra_to_json(const FormalContext& ctx, PairKind kind, const std::vector<ConceptPair>& elements,
                               const FiniteDba* dba);

/// Hasse diagram of a (quasi-)order given by up-sets; equivalent elements
/// are not merged, strictly comparable covers become edges.
std::string hasse_dot(const std::vector<CarrierSet>& up, const std::vector<std::string>& labels,
                      const std::string& graph_name = "order");
std::string hasse_dot(const FiniteDba& d, const std::string& graph_name = "order");

}  // namespace dbatk
