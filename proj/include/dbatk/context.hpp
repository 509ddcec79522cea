#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dbatk/bitset.hpp"

namespace dbatk {

/// A finite formal context (G, M, R).
///
/// Object and attribute order is the order of ingestion and is canonical for
/// every downstream construction. Rows (R(g) as attribute sets) and columns
/// (R^{-1}(m) as object sets) are both kept so every operator is a single
/// sweep of masks.
class FormalContext {
public:
    FormalContext() = default;
    /// Throws DimensionError on a ragged/mis-sized incidence matrix and on
    /// duplicate identifiers.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  const std::vector<std::vector<bool>>& incidence, std::string name = {});

    std::size_t num_objects() const noexcept { return objects_.size(); }
    std::size_t num_attributes() const noexcept { return attributes_.size(); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }
    const std::string& name() const noexcept { return name_; }

    bool incident(std::size_t g, std::size_t m) const { return rows_.at(g).test(m); }
    /// R(g)
    const AttributeSet& row(std::size_t g) const { return rows_.at(g); }
    /// R^{-1}(m)
    const ObjectSet& column(std::size_t m) const { return cols_.at(m); }
    std::size_t incidence_count() const noexcept;
    std::vector<std::vector<bool>> incidence_matrix() const;

    ObjectSet empty_objects() const { return ObjectSet(num_objects()); }
    ObjectSet all_objects() const { return ObjectSet::full(num_objects()); }
    AttributeSet empty_attributes() const { return AttributeSet(num_attributes()); }
    AttributeSet all_attributes() const { return AttributeSet::full(num_attributes()); }

    /// Looks up identifiers; throws DimensionError for unknown names.
    ObjectSet objects_named(const std::vector<std::string>& names) const;
    AttributeSet attributes_named(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(const ObjectSet& a) const;
    std::vector<std::string> names_of(const AttributeSet& b) const;

    friend bool operator==(const FormalContext&, const FormalContext&);

private:
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<AttributeSet> rows_;
    std::vector<ObjectSet> cols_;
};

// Classical derivation.

/// A' = {m : every g in A has gRm}
AttributeSet derive_intent(const FormalContext& ctx, const ObjectSet& a);
/// B' = {g : g has every m in B}
ObjectSet derive_extent(const FormalContext& ctx, const AttributeSet& b);

// Rough-set operators.

/// B^◇ = {g : R(g) ∩ B ≠ ∅}  (lower inverse R^-(B))
ObjectSet diamond(const FormalContext& ctx, const AttributeSet& b);
/// B^□ = {g : R(g) ⊆ B}  (upper inverse R^+(B))
ObjectSet box(const FormalContext& ctx, const AttributeSet& b);
/// A^■ = {m : R^{-1}(m) ⊆ A}
AttributeSet black_box(const FormalContext& ctx, const ObjectSet& a);
/// A^◆ = {m : R^{-1}(m) ∩ A ≠ ∅}
AttributeSet black_diamond(const FormalContext& ctx, const ObjectSet& a);

/// (G, M, (G×M) \ R)
FormalContext complement_context(const FormalContext& ctx);
/// (M, G, R^{-1})
FormalContext transpose_context(const FormalContext& ctx);
/// The subcontext on the given objects/attributes, in their original order.
FormalContext subcontext(const FormalContext& ctx, const ObjectSet& objects, const AttributeSet& attributes);

bool is_concept(const FormalContext& ctx, const ObjectSet& a, const AttributeSet& b);
bool is_oo_concept(const FormalContext& ctx, const ObjectSet& a, const AttributeSet& b);

// Context morphisms.

enum class MorphismClass { None, Homomorphism, Embedding, Isomorphism };
std::string to_string(MorphismClass c);

/// Strongest class of (alpha, beta) among none < homomorphism < embedding < isomorphism.
/// `alpha[g]` is the image object index in ctx2, `beta[m]` the image attribute index.
MorphismClass check_context_morphism(const FormalContext& ctx1, const FormalContext& ctx2,
                                     const std::vector<std::size_t>& alpha,
                                     const std::vector<std::size_t>& beta);

/// Image of a set under an index map into a space of the given width.
template <class Side>
BitSet<Side> image(const BitSet<Side>& s, const std::vector<std::size_t>& map, std::size_t target_width) {
    BitSet<Side> out(target_width);
    s.for_each([&](std::size_t i) { out.set(map.at(i)); });
    return out;
}

/// Preimage of a set under an index map from a space of width map.size().
template <class Side>
BitSet<Side> preimage(const BitSet<Side>& s, const std::vector<std::size_t>& map) {
    BitSet<Side> out(map.size());
    for (std::size_t i = 0; i < map.size(); ++i)
        if (s.test(map[i])) out.set(i);
    return out;
}

}  // namespace dbatk
