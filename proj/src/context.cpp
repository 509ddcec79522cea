#include "dbatk/context.hpp"

#include <unordered_set>

namespace dbatk {

namespace {

void require_unique(const std::vector<std::string>& ids, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids)
        if (!seen.insert(id).second) throw DimensionError(std::string("duplicate ") + what + " identifier '" + id + "'");
}

template <class Side>
void require_width(const BitSet<Side>& s, std::size_t width, const char* what) {
    if (s.width() != width)
        throw DimensionError(std::string(what) + " has width " + std::to_string(s.width()) + ", context expects " +
                             std::to_string(width));
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence, std::string name)
    : name_(std::move(name)), objects_(std::move(objects)), attributes_(std::move(attributes)) {
    require_unique(objects_, "object");
    require_unique(attributes_, "attribute");
    if (incidence.size() != objects_.size())
        throw DimensionError("incidence has " + std::to_string(incidence.size()) + " rows, expected " +
                             std::to_string(objects_.size()));
    rows_.assign(objects_.size(), AttributeSet(attributes_.size()));
    cols_.assign(attributes_.size(), ObjectSet(objects_.size()));
    for (std::size_t g = 0; g < objects_.size(); ++g) {
        if (incidence[g].size() != attributes_.size())
            throw DimensionError("incidence row " + std::to_string(g) + " has " + std::to_string(incidence[g].size()) +
                                 " entries, expected " + std::to_string(attributes_.size()));
        for (std::size_t m = 0; m < attributes_.size(); ++m) {
            if (incidence[g][m]) {
                rows_[g].set(m);
                cols_[m].set(g);
            }
        }
    }
}

std::size_t FormalContext::incidence_count() const noexcept {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
}

std::vector<std::vector<bool>> FormalContext::incidence_matrix() const {
    std::vector<std::vector<bool>> out(num_objects(), std::vector<bool>(num_attributes(), false));
    for (std::size_t g = 0; g < num_objects(); ++g) rows_[g].for_each([&](std::size_t m) { out[g][m] = true; });
    return out;
}

ObjectSet FormalContext::objects_named(const std::vector<std::string>& names) const {
    ObjectSet s(num_objects());
    for (const auto& n : names) {
        auto it = std::find(objects_.begin(), objects_.end(), n);
        if (it == objects_.end()) throw DimensionError("unknown object '" + n + "'");
        s.set(static_cast<std::size_t>(it - objects_.begin()));
    }
    return s;
}

AttributeSet FormalContext::attributes_named(const std::vector<std::string>& names) const {
    AttributeSet s(num_attributes());
    for (const auto& n : names) {
        auto it = std::find(attributes_.begin(), attributes_.end(), n);
        if (it == attributes_.end()) throw DimensionError("unknown attribute '" + n + "'");
        s.set(static_cast<std::size_t>(it - attributes_.begin()));
    }
    return s;
}

std::vector<std::string> FormalContext::names_of(const ObjectSet& a) const {
    require_width(a, num_objects(), "object set");
    std::vector<std::string> out;
    a.for_each([&](std::size_t i) { out.push_back(objects_[i]); });
    return out;
}

std::vector<std::string> FormalContext::names_of(const AttributeSet& b) const {
    require_width(b, num_attributes(), "attribute set");
    std::vector<std::string> out;
    b.for_each([&](std::size_t i) { out.push_back(attributes_[i]); });
    return out;
}

bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.name_ == b.name_ && a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
}

AttributeSet derive_intent(const FormalContext& ctx, const ObjectSet& a) {
    require_width(a, ctx.num_objects(), "object set");
    AttributeSet out = ctx.all_attributes();
    a.for_each([&](std::size_t g) { out &= ctx.row(g); });
    return out;
}

ObjectSet derive_extent(const FormalContext& ctx, const AttributeSet& b) {
    require_width(b, ctx.num_attributes(), "attribute set");
    ObjectSet out = ctx.all_objects();
    b.for_each([&](std::size_t m) { out &= ctx.column(m); });
    return out;
}

ObjectSet diamond(const FormalContext& ctx, const AttributeSet& b) {
    require_width(b, ctx.num_attributes(), "attribute set");
    ObjectSet out = ctx.empty_objects();
    for (std::size_t g = 0; g < ctx.num_objects(); ++g)
        if (ctx.row(g).intersects(b)) out.set(g);
    return out;
}

ObjectSet box(const FormalContext& ctx, const AttributeSet& b) {
    require_width(b, ctx.num_attributes(), "attribute set");
    ObjectSet out = ctx.empty_objects();
    for (std::size_t g = 0; g < ctx.num_objects(); ++g)
        if (ctx.row(g).subset_of(b)) out.set(g);
    return out;
}

AttributeSet black_box(const FormalContext& ctx, const ObjectSet& a) {
    require_width(a, ctx.num_objects(), "object set");
    AttributeSet out = ctx.empty_attributes();
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
        if (ctx.column(m).subset_of(a)) out.set(m);
    return out;
}

AttributeSet black_diamond(const FormalContext& ctx, const ObjectSet& a) {
    require_width(a, ctx.num_objects(), "object set");
    AttributeSet out = ctx.empty_attributes();
    for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
        if (ctx.column(m).intersects(a)) out.set(m);
    return out;
}

FormalContext complement_context(const FormalContext& ctx) {
    auto inc = ctx.incidence_matrix();
    for (auto& row : inc) row.flip();
    return FormalContext(ctx.objects(), ctx.attributes(), inc, ctx.name());
}

FormalContext transpose_context(const FormalContext& ctx) {
    std::vector<std::vector<bool>> inc(ctx.num_attributes(), std::vector<bool>(ctx.num_objects(), false));
    for (std::size_t g = 0; g < ctx.num_objects(); ++g)
        ctx.row(g).for_each([&](std::size_t m) { inc[m][g] = true; });
    return FormalContext(ctx.attributes(), ctx.objects(), inc, ctx.name());
}

FormalContext subcontext(const FormalContext& ctx, const ObjectSet& objects, const AttributeSet& attributes) {
    require_width(objects, ctx.num_objects(), "object set");
    require_width(attributes, ctx.num_attributes(), "attribute set");
    const auto gi = objects.indices();
    const auto mi = attributes.indices();
    std::vector<std::string> on, an;
    for (auto g : gi) on.push_back(ctx.objects()[g]);
    for (auto m : mi) an.push_back(ctx.attributes()[m]);
    std::vector<std::vector<bool>> inc(gi.size(), std::vector<bool>(mi.size(), false));
    for (std::size_t i = 0; i < gi.size(); ++i)
        for (std::size_t j = 0; j < mi.size(); ++j) inc[i][j] = ctx.incident(gi[i], mi[j]);
    return FormalContext(on, an, inc, ctx.name());
}

bool is_concept(const FormalContext& ctx, const ObjectSet& a, const AttributeSet& b) {
    return derive_intent(ctx, a) == b && derive_extent(ctx, b) == a;
}

bool is_oo_concept(const FormalContext& ctx, const ObjectSet& a, const AttributeSet& b) {
    return black_box(ctx, a) == b && diamond(ctx, b) == a;
}

std::string to_string(MorphismClass c) {
    switch (c) {
        case MorphismClass::None: return "none";
        case MorphismClass::Homomorphism: return "homomorphism";
        case MorphismClass::Embedding: return "embedding";
        case MorphismClass::Isomorphism: return "isomorphism";
    }
    return "none";
}

namespace {

bool injective(const std::vector<std::size_t>& map, std::size_t target) {
    std::vector<bool> hit(target, false);
    for (auto v : map) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

}  // namespace

MorphismClass check_context_morphism(const FormalContext& ctx1, const FormalContext& ctx2,
                                     const std::vector<std::size_t>& alpha,
                                     const std::vector<std::size_t>& beta) {
    if (alpha.size() != ctx1.num_objects() || beta.size() != ctx1.num_attributes())
        throw DimensionError("morphism maps do not cover the source context");
    for (auto v : alpha)
        if (v >= ctx2.num_objects()) throw DimensionError("object map out of range");
    for (auto v : beta)
        if (v >= ctx2.num_attributes()) throw DimensionError("attribute map out of range");

    for (std::size_t g = 0; g < ctx1.num_objects(); ++g)
        for (std::size_t m = 0; m < ctx1.num_attributes(); ++m)
            if (ctx1.incident(g, m) != ctx2.incident(alpha[g], beta[m])) return MorphismClass::None;

    if (!injective(alpha, ctx2.num_objects()) || !injective(beta, ctx2.num_attributes()))
        return MorphismClass::Homomorphism;
    if (alpha.size() == ctx2.num_objects() && beta.size() == ctx2.num_attributes()) return MorphismClass::Isomorphism;
    return MorphismClass::Embedding;
}

}  // namespace dbatk
