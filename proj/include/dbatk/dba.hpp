#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dbatk/bitset.hpp"

namespace dbatk {

using Index = std::uint32_t;

/// A finite algebra (D, ⊔, ⊓, ¬, ⌐, ⊤, ⊥) given by explicit operation tables.
///
/// Nothing beyond well-formedness is assumed at construction; whether the
/// tables form a double Boolean algebra is decided by validate_dba().
/// Binary tables are row-major n×n.
class FiniteDba {
public:
    FiniteDba() = default;
    /// Throws DimensionError when a table has the wrong size or an entry is
    /// outside [0, n). Empty `labels` defaults to "0".."n-1".
    FiniteDba(std::size_t n, std::vector<Index> meet, std::vector<Index> join, std::vector<Index> neg,
              std::vector<Index> opp, Index top, Index bot, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return n_; }

    Index meet(Index x, Index y) const { return meet_[static_cast<std::size_t>(x) * n_ + y]; }
    Index join(Index x, Index y) const { return join_[static_cast<std::size_t>(x) * n_ + y]; }
    Index neg(Index x) const { return neg_[x]; }
    Index opp(Index x) const { return opp_[x]; }
    Index top() const noexcept { return top_; }
    Index bot() const noexcept { return bot_; }

    /// x ∨ y := ¬(¬x ⊓ ¬y)
    Index vee(Index x, Index y) const { return neg(meet(neg(x), neg(y))); }
    /// x ∧ y := ⌐(⌐x ⊔ ⌐y)
    Index wedge(Index x, Index y) const { return opp(join(opp(x), opp(y))); }

    /// x_⊓ = x ⊓ x
    Index meet_part(Index x) const { return meet(x, x); }
    /// x_⊔ = x ⊔ x
    Index join_part(Index x) const { return join(x, x); }
    bool in_meet_part(Index x) const { return meet(x, x) == x; }
    bool in_join_part(Index x) const { return join(x, x) == x; }
    bool in_pure_part(Index x) const { return in_meet_part(x) || in_join_part(x); }

    const std::string& label(Index x) const { return labels_.at(x); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::span<const Index> meet_table() const noexcept { return meet_; }
    std::span<const Index> join_table() const noexcept { return join_; }
    std::span<const Index> neg_table() const noexcept { return neg_; }
    std::span<const Index> opp_table() const noexcept { return opp_; }

    /// Identity token shared by copies; filter/ideal subsets are bound to it.
    std::uint64_t id() const noexcept { return id_; }

    /// Table equality (labels included, id ignored).
    friend bool operator==(const FiniteDba& a, const FiniteDba& b);

private:
    std::size_t n_ = 0;
    std::vector<Index> meet_, join_, neg_, opp_;
    Index top_ = 0, bot_ = 0;
    std::vector<std::string> labels_;
    std::uint64_t id_ = 0;
};

/// One violated law with up to ValidationReport::kMaxWitnesses witness tuples.
struct LawViolation {
    std::string law;
    std::size_t failures = 0;
    std::vector<std::vector<Index>> witnesses;
};

struct ValidationReport {
    static constexpr std::size_t kMaxWitnesses = 10;

    /// Violated axioms among (1a)-(11a), (1b)-(11b), (12).
    std::vector<LawViolation> axioms;
    /// Violated consequences checked alongside: both Kwuida inequalities and
    /// the ten identities (i)-(x) relating ⊓, ⊔, ¬, ⌐.
    std::vector<LawViolation> derived;

    bool ok() const noexcept { return axioms.empty(); }
    bool derived_ok() const noexcept { return derived.empty(); }
    std::string summary() const;
};

/// Exhaustive O(n³) sweep of the 23 defining equations plus the derived
/// identities. Tables that are not well-formed cannot reach this function.
ValidationReport validate_dba(const FiniteDba& d);

/// Further laws every dBa satisfies: bounds of ⊑, negation laws, the ∨/∧
/// sandwich, and the componentwise description of ⊑. Reported the same way.
std::vector<LawViolation> check_dba_laws(const FiniteDba& d);

/// x ⊑ y iff x⊓y = x⊓x and x⊔y = y⊔y, stored as packed up-set and
/// down-set rows.
class QuasiOrder {
public:
    explicit QuasiOrder(const FiniteDba& d);
    std::size_t size() const noexcept { return up_.size(); }
    bool leq(Index x, Index y) const { return up_[x].test(y); }
    /// {y : x ⊑ y}
    const CarrierSet& up(Index x) const { return up_[x]; }
    /// {y : y ⊑ x}
    const CarrierSet& down(Index x) const { return down_[x]; }
    bool is_reflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;

private:
    std::vector<CarrierSet> up_, down_;
};

QuasiOrder quasi_order(const FiniteDba& d);

struct DbaClassification {
    bool contextual = false;
    bool fully_contextual = false;
    bool pure = false;
    friend bool operator==(const DbaClassification&, const DbaClassification&) = default;
};

DbaClassification classify_dba(const FiniteDba& d);

/// A subalgebra together with the indices of its elements in the parent.
struct Subalgebra {
    FiniteDba algebra;
    std::vector<Index> embedding;
};

/// Restricts the tables to `members` (ascending parent indices are used as
/// the local order). Throws HypothesisError if the set is not closed under
/// all operations or misses ⊤/⊥.
Subalgebra restrict_to(const FiniteDba& d, const std::vector<Index>& members);

/// D_p = D_⊓ ∪ D_⊔, the largest pure subalgebra.
Subalgebra pure_part(const FiniteDba& d);

/// Elements of D_⊓ / D_⊔ in ascending order.
std::vector<Index> meet_idempotents(const FiniteDba& d);
std::vector<Index> join_idempotents(const FiniteDba& d);

/// Finite ∨ and ∧ over a non-empty subset (left fold, a singleton {a} gives
/// a∘a); throws DimensionError on an empty subset.
Index finite_vee(const FiniteDba& d, std::span<const Index> elems);
Index finite_wedge(const FiniteDba& d, std::span<const Index> elems);
Index finite_meet(const FiniteDba& d, std::span<const Index> elems);
Index finite_join(const FiniteDba& d, std::span<const Index> elems);

// Boolean algebras.

/// (B, ∧, ∨, ', 0, 1) by tables. `meet` is the lattice meet.
struct BooleanAlgebra {
    std::size_t n = 0;
    std::vector<Index> meet, join, complement;
    Index bottom = 0, top = 0;
    std::vector<std::string> labels;

    Index meet_of(Index x, Index y) const { return meet[static_cast<std::size_t>(x) * n + y]; }
    Index join_of(Index x, Index y) const { return join[static_cast<std::size_t>(x) * n + y]; }
    friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;
};

struct BooleanReport {
    bool ok = false;
    std::string failure;
    std::vector<Index> atoms;
    std::vector<Index> coatoms;
};

/// Decides Booleanness by exhibiting the isomorphism x ↦ {atoms below x}
/// onto the power set of the atoms: it must be a bijection that carries
/// meet, join, complement and the bounds to ∩, ∪, set complement, ∅ and the
/// full set. O(n²).
BooleanReport validate_boolean(const BooleanAlgebra& b);

/// The power-set algebra of a k-element set, element i = subset with bitmask i.
BooleanAlgebra power_set_algebra(std::size_t k);

struct BooleanReduct {
    std::vector<Index> elements;  ///< indices into D, ascending
    BooleanAlgebra algebra;       ///< local indices into `elements`
    BooleanReport report;
    std::vector<Index> atoms;    ///< indices into D
    std::vector<Index> coatoms;  ///< indices into D
};

struct BooleanReducts {
    BooleanReduct meet_part;  ///< (D_⊓, ⊓, ∨, ¬, ⊥, ¬⊥)
    BooleanReduct join_part;  ///< (D_⊔, ∧, ⊔, ⌐, ⌐⊤, ⊤) read in ⊑
};

/// Throws HypothesisError when a reduct fails the Boolean laws.
BooleanReducts boolean_reducts(const FiniteDba& d);

/// ⌐ := ¬. Throws HypothesisError when `b` is not Boolean.
FiniteDba from_boolean(const BooleanAlgebra& b);

/// (D, ⊓, ⊔, ¬, ⊤, ⊥) when ¬ = ⌐ pointwise and ¬¬a = a; nullopt otherwise.
std::optional<BooleanAlgebra> to_boolean(const FiniteDba& d);

// Homomorphisms.

struct DbaHom {
    std::vector<Index> map;
    bool homomorphism = false;
    bool quasi_injective = false;
    bool injective = false;
    bool surjective = false;
    /// First failing equation when homomorphism is false.
    std::string counterexample;

    bool is_isomorphism() const noexcept { return homomorphism && injective && surjective; }
};

/// Throws DimensionError when `map` is not a total map into dst.
DbaHom check_hom(const FiniteDba& src, const FiniteDba& dst, std::vector<Index> map);

/// Unique extension of an isomorphism between pure parts of two fully
/// contextual dBas: f(x) is the unique c with c_⊓ = h(x_⊓), c_⊔ = h(x_⊔).
///
/// `pure_map` is indexed by the local indices of pure_part(d) and yields
/// local indices of pure_part(m).
struct PureExtension {
    DbaHom hom;
    /// Every x had exactly one admissible image, so no second extension exists.
    bool unique = false;
};
PureExtension extend_pure_iso(const FiniteDba& d, const FiniteDba& m, const std::vector<Index>& pure_map);

/// All isomorphisms a → b (backtracking), at most `limit` of them.
std::vector<std::vector<Index>> find_isomorphisms(const FiniteDba& a, const FiniteDba& b, std::size_t limit = 1000);
inline std::vector<std::vector<Index>> find_automorphisms(const FiniteDba& a, std::size_t limit = 1000) {
    return find_isomorphisms(a, a, limit);
}

/// (g ∘ f)(x) = g(f(x))
std::vector<Index> compose(const std::vector<Index>& g, const std::vector<Index>& f);
std::vector<Index> identity_map(std::size_t n);
std::vector<Index> inverse_map(const std::vector<Index>& f);

}  // namespace dbatk
