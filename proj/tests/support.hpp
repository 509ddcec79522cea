#pragma once

// Fixtures shared by the test binaries, and brute-force oracles that
// evaluate definitions literally on 64-bit masks without touching the
// library's operators.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dbatk/concepts.hpp"
#include "dbatk/context.hpp"
#include "dbatk/context_io.hpp"
#include "dbatk/dba.hpp"
#include "dbatk/topology.hpp"

#ifndef DBATK_DATA_DIR
#define DBATK_DATA_DIR "data"
#endif

namespace fixtures {

using namespace dbatk;

inline std::string data_path(const std::string& name) { return std::string(DBATK_DATA_DIR) + "/" + name; }

inline const FormalContext& table1() {
    static const FormalContext ctx = load_context(data_path("table1.cxt"));
    return ctx;
}

inline FormalContext make_context(std::size_t g, std::size_t m, const std::vector<std::pair<int, int>>& pairs,
                                  std::vector<std::string> objects = {}, std::vector<std::string> attributes = {}) {
    if (objects.empty())
        for (std::size_t i = 0; i < g; ++i) objects.push_back("g" + std::to_string(i + 1));
    if (attributes.empty())
        for (std::size_t j = 0; j < m; ++j) attributes.push_back("m" + std::to_string(j + 1));
    std::vector<std::vector<bool>> inc(g, std::vector<bool>(m, false));
    for (auto [i, j] : pairs) inc[i][j] = true;
    return FormalContext(std::move(objects), std::move(attributes), inc);
}

inline GroundSet ground(std::size_t n, std::vector<std::size_t> members) {
    return GroundSet::from_indices(n, members);
}

/// G = {a..e}, M = {1..4}, τ = {∅, abc, de, G}, ρ = {∅, 2, 134, M}.
inline Cts example_cts() {
    auto ctx = make_context(5, 4, {{0, 1}, {1, 1}, {2, 3}, {3, 0}, {3, 3}, {4, 0}, {4, 2}},
                            {"a", "b", "c", "d", "e"}, {"1", "2", "3", "4"});
    FiniteTopology tau(5, {ground(5, {}), ground(5, {0, 1, 2}), ground(5, {3, 4}), ground(5, {0, 1, 2, 3, 4})});
    FiniteTopology rho(4, {ground(4, {}), ground(4, {1}), ground(4, {0, 2, 3}), ground(4, {0, 1, 2, 3})});
    return Cts(ctx, tau, rho);
}

/// X and Y discrete (finite totally disconnected), xRy iff y ∈ C.
inline Cts constant_column_cts(std::size_t nx, std::size_t ny, const std::vector<std::size_t>& c) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t x = 0; x < nx; ++x)
        for (auto y : c) pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
    return Cts(make_context(nx, ny, pairs), FiniteTopology::discrete(nx), FiniteTopology::discrete(ny));
}

/// X = {1,2} with opens {∅, {1}, X}, Y discrete, R the identity.
inline Cts lower_counterexample() {
    auto ctx = make_context(2, 2, {{0, 0}, {1, 1}});
    FiniteTopology tau(2, {ground(2, {}), ground(2, {0}), ground(2, {0, 1})});
    return Cts(ctx, tau, FiniteTopology::discrete(2));
}

/// The same with the roles of the two sides swapped.
inline Cts converse_counterexample() {
    auto ctx = make_context(2, 2, {{0, 0}, {1, 1}});
    FiniteTopology rho(2, {ground(2, {}), ground(2, {0}), ground(2, {0, 1})});
    return Cts(ctx, FiniteTopology::discrete(2), rho);
}

inline FiniteDba boolean_dba(std::size_t k) { return from_boolean(power_set_algebra(k)); }

}  // namespace fixtures

namespace oracle {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline Mask full(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }
inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Plain incidence matrix with every operator written as its defining
/// quantifier.
struct Ctx {
    std::size_t g = 0, m = 0;
    std::vector<std::vector<bool>> r;

    explicit Ctx(const dbatk::FormalContext& c)
        : g(c.num_objects()), m(c.num_attributes()), r(c.incidence_matrix()) {}

    Mask row(std::size_t x) const {
        Mask out = 0;
        for (std::size_t y = 0; y < m; ++y)
            if (r[x][y]) out |= bit(y);
        return out;
    }
    Mask col(std::size_t y) const {
        Mask out = 0;
        for (std::size_t x = 0; x < g; ++x)
            if (r[x][y]) out |= bit(x);
        return out;
    }
    Mask intent(Mask a) const {
        Mask out = 0;
        for (std::size_t y = 0; y < m; ++y) {
            bool all = true;
            for (std::size_t x = 0; x < g; ++x)
                if ((a & bit(x)) && !r[x][y]) all = false;
            if (all) out |= bit(y);
        }
        return out;
    }
    Mask extent(Mask b) const {
        Mask out = 0;
        for (std::size_t x = 0; x < g; ++x) {
            bool all = true;
            for (std::size_t y = 0; y < m; ++y)
                if ((b & bit(y)) && !r[x][y]) all = false;
            if (all) out |= bit(x);
        }
        return out;
    }
    Mask diamond(Mask b) const {
        Mask out = 0;
        for (std::size_t x = 0; x < g; ++x)
            if (row(x) & b) out |= bit(x);
        return out;
    }
    Mask box(Mask b) const {
        Mask out = 0;
        for (std::size_t x = 0; x < g; ++x)
            if (subset(row(x), b)) out |= bit(x);
        return out;
    }
    Mask black_box(Mask a) const {
        Mask out = 0;
        for (std::size_t y = 0; y < m; ++y)
            if (subset(col(y), a)) out |= bit(y);
        return out;
    }
    Mask black_diamond(Mask a) const {
        Mask out = 0;
        for (std::size_t y = 0; y < m; ++y)
            if (col(y) & a) out |= bit(y);
        return out;
    }

    bool holds(dbatk::PairKind kind, Mask a, Mask b) const {
        using dbatk::PairKind;
        switch (kind) {
            case PairKind::Concept: return intent(a) == b && extent(b) == a;
            case PairKind::Semiconcept: return intent(a) == b || extent(b) == a;
            case PairKind::Protoconcept: return extent(intent(a)) == extent(b);
            case PairKind::OoConcept: return black_box(a) == b && diamond(b) == a;
            case PairKind::OoSemiconcept: return black_box(a) == b || diamond(b) == a;
            case PairKind::OoProtoconcept: return diamond(black_box(a)) == diamond(b);
        }
        return false;
    }

    std::set<std::pair<Mask, Mask>> enumerate(dbatk::PairKind kind) const {
        std::set<std::pair<Mask, Mask>> out;
        for (Mask a = 0; a <= full(g); ++a)
            for (Mask b = 0; b <= full(m); ++b)
                if (holds(kind, a, b)) out.emplace(a, b);
        return out;
    }
};

inline std::set<std::pair<Mask, Mask>> as_masks(const std::vector<dbatk::ConceptPair>& pairs) {
    std::set<std::pair<Mask, Mask>> out;
    for (const auto& p : pairs) out.emplace(p.extent.to_mask(), p.intent.to_mask());
    return out;
}

/// Every axiom (1a)–(11b), (12) evaluated directly on the tables. Returns
/// the number of violated instances.
inline std::size_t axiom_failures(const dbatk::FiniteDba& d) {
    using I = dbatk::Index;
    const I n = static_cast<I>(d.size());
    auto M = [&](I x, I y) { return d.meet(x, y); };
    auto J = [&](I x, I y) { return d.join(x, y); };
    auto N = [&](I x) { return d.neg(x); };
    auto O = [&](I x) { return d.opp(x); };
    auto V = [&](I x, I y) { return N(M(N(x), N(y))); };
    auto W = [&](I x, I y) { return O(J(O(x), O(y))); };
    const I top = d.top(), bot = d.bot();
    std::size_t bad = 0;
    auto expect = [&](bool ok) { bad += ok ? 0 : 1; };
    for (I x = 0; x < n; ++x)
        for (I y = 0; y < n; ++y) {
            expect(M(M(x, x), y) == M(x, y));
            expect(J(J(x, x), y) == J(x, y));
            expect(M(x, y) == M(y, x));
            expect(J(x, y) == J(y, x));
            expect(M(x, J(x, y)) == M(x, x));
            expect(J(x, M(x, y)) == J(x, x));
            expect(M(x, V(x, y)) == M(x, x));
            expect(J(x, W(x, y)) == J(x, x));
            expect(N(N(M(x, y))) == M(x, y));
            expect(O(O(J(x, y))) == J(x, y));
            for (I z = 0; z < n; ++z) {
                expect(M(x, M(y, z)) == M(M(x, y), z));
                expect(J(x, J(y, z)) == J(J(x, y), z));
                expect(M(x, V(y, z)) == V(M(x, y), M(x, z)));
                expect(J(x, W(y, z)) == W(J(x, y), J(x, z)));
            }
        }
    for (I x = 0; x < n; ++x) {
        expect(N(M(x, x)) == N(x));
        expect(O(J(x, x)) == O(x));
        expect(M(x, N(x)) == bot);
        expect(J(x, O(x)) == top);
        expect(J(M(x, x), M(x, x)) == M(J(x, x), J(x, x)));
    }
    expect(N(bot) == M(top, top));
    expect(O(top) == J(bot, bot));
    expect(N(top) == bot);
    expect(O(bot) == top);
    return bad;
}

inline bool leq(const dbatk::FiniteDba& d, dbatk::Index x, dbatk::Index y) {
    return d.meet(x, y) == d.meet(x, x) && d.join(x, y) == d.join(y, y);
}

/// Primary filters by scanning every subset of the carrier (n ≤ 20).
inline std::set<Mask> primary_filters(const dbatk::FiniteDba& d) {
    using I = dbatk::Index;
    const I n = static_cast<I>(d.size());
    std::set<Mask> out;
    for (Mask s = 1; s < full(n); ++s) {
        bool ok = true;
        for (I x = 0; x < n && ok; ++x) {
            if (!(s & bit(x))) {
                if (!(s & bit(d.neg(x)))) ok = false;
                continue;
            }
            for (I y = 0; y < n && ok; ++y) {
                if ((s & bit(y)) && !(s & bit(d.meet(x, y)))) ok = false;
                if (leq(d, x, y) && !(s & bit(y))) ok = false;
            }
        }
        if (ok) out.insert(s);
    }
    return out;
}

inline std::set<Mask> primary_ideals(const dbatk::FiniteDba& d) {
    using I = dbatk::Index;
    const I n = static_cast<I>(d.size());
    std::set<Mask> out;
    for (Mask s = 1; s < full(n); ++s) {
        bool ok = true;
        for (I x = 0; x < n && ok; ++x) {
            if (!(s & bit(x))) {
                if (!(s & bit(d.opp(x)))) ok = false;
                continue;
            }
            for (I y = 0; y < n && ok; ++y) {
                if ((s & bit(y)) && !(s & bit(d.join(x, y)))) ok = false;
                if (leq(d, y, x) && !(s & bit(y))) ok = false;
            }
        }
        if (ok) out.insert(s);
    }
    return out;
}

/// Closed sets generated from the subbase by repeated pairwise ∪ and ∩
/// until nothing new appears; the opens are their complements.
inline std::set<Mask> opens_from_closed_subbase(std::size_t n, const std::vector<Mask>& subbase) {
    std::set<Mask> closed(subbase.begin(), subbase.end());
    closed.insert(0);
    closed.insert(full(n));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mask> cur(closed.begin(), closed.end());
        for (auto a : cur)
            for (auto b : cur) {
                grew |= closed.insert(a | b).second;
                grew |= closed.insert(a & b).second;
            }
    }
    std::set<Mask> opens;
    for (auto c : closed) opens.insert(full(n) & ~c);
    return opens;
}

inline std::set<Mask> opens_of(const dbatk::FiniteTopology& t) {
    std::set<Mask> out;
    t.for_each_open_mask([&](std::uint64_t m) { out.insert(m); });
    return out;
}

/// R continuous in the sense of lower and upper inverse images of opens.
inline bool lower_semicontinuous(const dbatk::Cts& c) {
    Ctx k(c.context());
    auto tau = opens_of(c.object_topology());
    for (auto o : opens_of(c.attribute_topology()))
        if (!tau.count(k.diamond(o))) return false;
    return true;
}
inline bool upper_semicontinuous(const dbatk::Cts& c) {
    Ctx k(c.context());
    auto tau = opens_of(c.object_topology());
    for (auto o : opens_of(c.attribute_topology()))
        if (!tau.count(k.box(o))) return false;
    return true;
}
inline bool converse_continuous(const dbatk::Cts& c) {
    Ctx k(c.context());
    auto rho = opens_of(c.attribute_topology());
    for (auto o : opens_of(c.object_topology()))
        if (!rho.count(k.black_diamond(o)) || !rho.count(k.black_box(o))) return false;
    return true;
}

}  // namespace oracle
