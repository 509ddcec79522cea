#include "dbatk/dba.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dbatk/error.hpp"

namespace dbatk {

namespace {

std::atomic<std::uint64_t> g_next_id{1};

void check_table(const std::vector<Index>& t, std::size_t expected, std::size_t n, const char* name) {
    if (t.size() != expected)
        throw DimensionError(std::string(name) + " table has " + std::to_string(t.size()) + " entries, expected " +
                             std::to_string(expected));
    for (auto v : t)
        if (v >= n) throw DimensionError(std::string(name) + " table entry " + std::to_string(v) + " out of range");
}

/// Collects law violations in first-seen order.
class Collector {
public:
    void fail(const char* law, std::initializer_list<Index> witness) {
        auto it = std::find_if(list_.begin(), list_.end(), [&](const LawViolation& v) { return v.law == law; });
        if (it == list_.end()) {
            list_.push_back(LawViolation{law, 0, {}});
            it = std::prev(list_.end());
        }
        ++it->failures;
        if (it->witnesses.size() < ValidationReport::kMaxWitnesses) it->witnesses.emplace_back(witness);
    }
    std::vector<LawViolation> take() { return std::move(list_); }

private:
    std::vector<LawViolation> list_;
};

bool leq(const FiniteDba& d, Index x, Index y) {
    return d.meet(x, y) == d.meet(x, x) && d.join(x, y) == d.join(y, y);
}

}  // namespace

FiniteDba::FiniteDba(std::size_t n, std::vector<Index> meet, std::vector<Index> join, std::vector<Index> neg,
                     std::vector<Index> opp, Index top, Index bot, std::vector<std::string> labels)
    : n_(n),
      meet_(std::move(meet)),
      join_(std::move(join)),
      neg_(std::move(neg)),
      opp_(std::move(opp)),
      top_(top),
      bot_(bot),
      labels_(std::move(labels)),
      id_(g_next_id.fetch_add(1)) {
    if (n == 0) throw DimensionError("a dBa carrier cannot be empty");
    check_table(meet_, n * n, n, "meet");
    check_table(join_, n * n, n, "join");
    check_table(neg_, n, n, "neg");
    check_table(opp_, n, n, "opp");
    if (top_ >= n || bot_ >= n) throw DimensionError("top/bot index out of range");
    if (labels_.empty()) {
        labels_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    } else if (labels_.size() != n) {
        throw DimensionError("labels has " + std::to_string(labels_.size()) + " entries, expected " + std::to_string(n));
    }
}

bool operator==(const FiniteDba& a, const FiniteDba& b) {
    return a.n_ == b.n_ && a.meet_ == b.meet_ && a.join_ == b.join_ && a.neg_ == b.neg_ && a.opp_ == b.opp_ &&
           a.top_ == b.top_ && a.bot_ == b.bot_ && a.labels_ == b.labels_;
}

std::string ValidationReport::summary() const {
    std::ostringstream ss;
    auto dump = [&](const std::vector<LawViolation>& vs) {
        for (const auto& v : vs) {
            ss << v.law << ": " << v.failures << " failure(s)";
            if (!v.witnesses.empty()) {
                ss << ", e.g. (";
                for (std::size_t i = 0; i < v.witnesses.front().size(); ++i)
                    ss << (i ? "," : "") << v.witnesses.front()[i];
                ss << ')';
            }
            ss << '\n';
        }
    };
    if (ok() && derived_ok()) return "all axioms hold\n";
    dump(axioms);
    dump(derived);
    return ss.str();
}

ValidationReport validate_dba(const FiniteDba& d) {
    const Index n = static_cast<Index>(d.size());
    const Index top = d.top(), bot = d.bot();
    Collector ax;

    std::vector<Index> vee(static_cast<std::size_t>(n) * n), wedge(static_cast<std::size_t>(n) * n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            vee[static_cast<std::size_t>(x) * n + y] = d.vee(x, y);
            wedge[static_cast<std::size_t>(x) * n + y] = d.wedge(x, y);
        }
    auto vee_of = [&](Index x, Index y) { return vee[static_cast<std::size_t>(x) * n + y]; };
    auto wedge_of = [&](Index x, Index y) { return wedge[static_cast<std::size_t>(x) * n + y]; };

    // nullary
    if (d.neg(bot) != d.meet(top, top)) ax.fail("(10a) ¬⊥ = ⊤⊓⊤", {});
    if (d.neg(top) != bot) ax.fail("(11a) ¬⊤ = ⊥", {});
    if (d.opp(top) != d.join(bot, bot)) ax.fail("(10b) ⌐⊤ = ⊥⊔⊥", {});
    if (d.opp(bot) != top) ax.fail("(11b) ⌐⊥ = ⊤", {});

    // unary
    for (Index x = 0; x < n; ++x) {
        if (d.neg(d.meet(x, x)) != d.neg(x)) ax.fail("(4a) ¬(x⊓x) = ¬x", {x});
        if (d.meet(x, d.neg(x)) != bot) ax.fail("(9a) x⊓¬x = ⊥", {x});
        if (d.opp(d.join(x, x)) != d.opp(x)) ax.fail("(4b) ⌐(x⊔x) = ⌐x", {x});
        if (d.join(x, d.opp(x)) != top) ax.fail("(9b) x⊔⌐x = ⊤", {x});
        const Index mx = d.meet(x, x), jx = d.join(x, x);
        if (d.join(mx, mx) != d.meet(jx, jx)) ax.fail("(12) (x⊓x)⊔(x⊓x) = (x⊔x)⊓(x⊔x)", {x});
    }

    // binary
    for (Index x = 0; x < n; ++x) {
        const Index mx = d.meet(x, x), jx = d.join(x, x);
        for (Index y = 0; y < n; ++y) {
            const Index m = d.meet(x, y), j = d.join(x, y);
            if (d.meet(mx, y) != m) ax.fail("(1a) (x⊓x)⊓y = x⊓y", {x, y});
            if (m != d.meet(y, x)) ax.fail("(2a) x⊓y = y⊓x", {x, y});
            if (d.meet(x, j) != mx) ax.fail("(5a) x⊓(x⊔y) = x⊓x", {x, y});
            if (d.meet(x, vee_of(x, y)) != mx) ax.fail("(7a) x⊓(x∨y) = x⊓x", {x, y});
            if (d.neg(d.neg(m)) != m) ax.fail("(8a) ¬¬(x⊓y) = x⊓y", {x, y});
            if (d.join(jx, y) != j) ax.fail("(1b) (x⊔x)⊔y = x⊔y", {x, y});
            if (j != d.join(y, x)) ax.fail("(2b) x⊔y = y⊔x", {x, y});
            if (d.join(x, m) != jx) ax.fail("(5b) x⊔(x⊓y) = x⊔x", {x, y});
            if (d.join(x, wedge_of(x, y)) != jx) ax.fail("(7b) x⊔(x∧y) = x⊔x", {x, y});
            if (d.opp(d.opp(j)) != j) ax.fail("(8b) ⌐⌐(x⊔y) = x⊔y", {x, y});
        }
    }

    // ternary, row sweeps
    const auto meet_t = d.meet_table();
    const auto join_t = d.join_table();
    for (Index x = 0; x < n; ++x) {
        const Index* mrow_x = meet_t.data() + static_cast<std::size_t>(x) * n;
        const Index* jrow_x = join_t.data() + static_cast<std::size_t>(x) * n;
        for (Index y = 0; y < n; ++y) {
            const Index* mrow_y = meet_t.data() + static_cast<std::size_t>(y) * n;
            const Index* jrow_y = join_t.data() + static_cast<std::size_t>(y) * n;
            const Index* mrow_xy = meet_t.data() + static_cast<std::size_t>(mrow_x[y]) * n;
            const Index* jrow_xy = join_t.data() + static_cast<std::size_t>(jrow_x[y]) * n;
            const Index* vrow_y = vee.data() + static_cast<std::size_t>(y) * n;
            const Index* wrow_y = wedge.data() + static_cast<std::size_t>(y) * n;
            const Index* vrow_mxy = vee.data() + static_cast<std::size_t>(mrow_x[y]) * n;
            const Index* wrow_jxy = wedge.data() + static_cast<std::size_t>(jrow_x[y]) * n;
            for (Index z = 0; z < n; ++z) {
                if (mrow_x[mrow_y[z]] != mrow_xy[z]) ax.fail("(3a) x⊓(y⊓z) = (x⊓y)⊓z", {x, y, z});
                if (jrow_x[jrow_y[z]] != jrow_xy[z]) ax.fail("(3b) x⊔(y⊔z) = (x⊔y)⊔z", {x, y, z});
                if (mrow_x[vrow_y[z]] != vrow_mxy[mrow_x[z]]) ax.fail("(6a) x⊓(y∨z) = (x⊓y)∨(x⊓z)", {x, y, z});
                if (jrow_x[wrow_y[z]] != wrow_jxy[jrow_x[z]]) ax.fail("(6b) x⊔(y∧z) = (x⊔y)∧(x⊔z)", {x, y, z});
            }
        }
    }

    Collector der;
    for (Index x = 0; x < n; ++x) {
        const Index mx = d.meet(x, x), jx = d.join(x, x);
        for (Index y = 0; y < n; ++y) {
            const Index m = d.meet(x, y), j = d.join(x, y);
            const Index ny = d.neg(y), oy = d.opp(y);
            const Index k1 = d.meet(j, d.join(x, oy));
            const Index k2 = d.join(m, d.meet(x, ny));
            if (!leq(d, k1, jx)) der.fail("cor (i) (x⊔y)⊓(x⊔⌐y) ⊑ x⊔x", {x, y});
            if (!leq(d, mx, k2)) der.fail("cor (ii) x⊓x ⊑ (x⊓y)⊔(x⊓¬y)", {x, y});
            if (d.meet(x, d.neg(j)) != d.bot()) der.fail("eq (i) x⊓¬(x⊔y) = ⊥", {x, y});
            if (d.neg(j) != d.meet(d.neg(j), d.neg(x))) der.fail("eq (ii) ¬(x⊔y) = ¬(x⊔y)⊓¬x", {x, y});
            if (m != d.meet(x, d.neg(d.meet(x, ny)))) der.fail("eq (iii) x⊓y = x⊓¬(x⊓¬y)", {x, y});
            if (d.join(x, d.meet(y, d.neg(x))) != d.join(x, d.meet(y, y)))
                der.fail("eq (iv) x⊔(y⊓¬x) = x⊔(y⊓y)", {x, y});
            if (k2 != d.join(mx, mx)) der.fail("eq (v) (x⊓y)⊔(x⊓¬y) = (x⊓x)⊔(x⊓x)", {x, y});
            if (d.join(x, d.opp(m)) != d.top()) der.fail("eq (vi) x⊔⌐(x⊓y) = ⊤", {x, y});
            if (d.opp(m) != d.join(d.opp(m), d.opp(x))) der.fail("eq (vii) ⌐(x⊓y) = ⌐(x⊓y)⊔⌐x", {x, y});
            if (j != d.join(x, d.opp(d.join(x, oy)))) der.fail("eq (viii) x⊔y = x⊔⌐(x⊔⌐y)", {x, y});
            if (d.meet(x, d.join(y, d.opp(x))) != d.meet(x, d.join(y, y)))
                der.fail("eq (ix) x⊓(y⊔⌐x) = x⊓(y⊔y)", {x, y});
            if (k1 != d.meet(jx, jx)) der.fail("eq (x) (x⊔y)⊓(x⊔⌐y) = (x⊔x)⊓(x⊔x)", {x, y});
        }
    }

    return ValidationReport{ax.take(), der.take()};
}

std::vector<LawViolation> check_dba_laws(const FiniteDba& d) {
    const Index n = static_cast<Index>(d.size());
    const QuasiOrder q(d);
    auto le = [&](Index a, Index b) { return q.leq(a, b); };
    Collector c;
    const Index top = d.top(), bot = d.bot();

    for (Index x = 0; x < n; ++x) {
        const Index mx = d.meet(x, x), jx = d.join(x, x);
        if (d.meet(x, bot) != bot || d.join(x, bot) != jx) c.fail("pro1.5 (i) ⊥ ⊑ x", {x});
        if (d.join(x, top) != top || d.meet(x, top) != mx) c.fail("pro1.5 (ii) x ⊑ ⊤", {x});
        if (!le(x, x)) c.fail("pro1.5 (iii) x ⊑ x", {x});
        if (!d.in_meet_part(d.neg(x)) || !d.in_join_part(d.opp(x))) c.fail("pro2 (i) ¬x ∈ D⊓, ⌐x ∈ D⊔", {x});
        if (d.neg(d.neg(x)) != mx || d.opp(d.opp(x)) != jx) c.fail("pro2 (iii) ¬¬x = x⊓x, ⌐⌐x = x⊔x", {x});
        if (d.neg(d.neg(d.neg(x))) != d.neg(x)) c.fail("pro2 (ix) ¬¬¬x = ¬x", {x});
        if (!d.in_meet_part(mx) || !d.in_join_part(jx)) c.fail("pro2 (iv) x⊓x ∈ D⊓, x⊔x ∈ D⊔", {x});
    }

    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            const Index m = d.meet(x, y), j = d.join(x, y), v = d.vee(x, y), w = d.wedge(x, y);
            const bool xy = le(x, y);
            const bool equiv = xy && le(y, x);
            if (equiv != (d.meet(x, x) == d.meet(y, y) && d.join(x, x) == d.join(y, y)))
                c.fail("pro1.5 (iv) x⊑y⊑x iff equal parts", {x, y});
            if (!le(m, x) || !le(m, y) || !le(y, j) || !le(x, j)) c.fail("pro1.5 (v) x⊓y ⊑ x,y ⊑ x⊔y", {x, y});
            if (xy != (le(d.neg(y), d.neg(x)) && le(d.opp(y), d.opp(x))))
                c.fail("pro2 (ii) x⊑y iff ¬y⊑¬x and ⌐y⊑⌐x", {x, y});
            if (!d.in_meet_part(v) || !d.in_join_part(w)) c.fail("pro2 (iv) x∨y ∈ D⊓, x∧y ∈ D⊔", {x, y});
            if (d.neg(v) != d.meet(d.neg(x), d.neg(y)) || d.neg(m) != d.vee(d.neg(x), d.neg(y)))
                c.fail("pro2 (v) De Morgan for ¬", {x, y});
            if (d.opp(w) != d.join(d.opp(x), d.opp(y)) || d.opp(j) != d.wedge(d.opp(x), d.opp(y)))
                c.fail("pro2 (vi) De Morgan for ⌐", {x, y});
            if (le(x, d.opp(y)) != le(y, d.opp(x))) c.fail("pro2 (vii) x⊑⌐y iff y⊑⌐x", {x, y});
            if (le(d.neg(x), y) != le(d.neg(y), x)) c.fail("pro2 (viii) ¬x⊑y iff ¬y⊑x", {x, y});
            if (!le(m, v) || !le(v, j)) c.fail("meet-join (i) x⊓y ⊑ x∨y ⊑ x⊔y", {x, y});
            if (!le(m, w) || !le(w, j)) c.fail("meet-join (ii) x⊓y ⊑ x∧y ⊑ x⊔y", {x, y});
            if (xy != (le(d.meet(x, x), d.meet(y, y)) && le(d.join(x, x), d.join(y, y))))
                c.fail("pro1 (iii) x⊑y iff x⊓ ⊑ y⊓ and x⊔ ⊑ y⊔", {x, y});
        }
    }

    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            if (!le(x, y)) continue;
            for (Index a = 0; a < n; ++a)
                if (!le(d.meet(x, a), d.meet(y, a)) || !le(d.join(x, a), d.join(y, a)))
                    c.fail("pro1.5 (vi) x⊑y ⇒ x⊓a ⊑ y⊓a, x⊔a ⊑ y⊔a", {x, y, a});
        }

    // Finite ∨/∧ over every non-empty subset of size at most three.
    auto check_subset = [&](std::initializer_list<Index> elems) {
        const std::vector<Index> b(elems);
        const Index mb = finite_meet(d, b), jb = finite_join(d, b);
        const Index vb = finite_vee(d, b), wb = finite_wedge(d, b);
        if (!d.in_meet_part(vb) || !d.in_join_part(wb)) c.fail("finite ∨B ∈ D⊓, ∧B ∈ D⊔", elems);
        if (!le(mb, vb) || !le(vb, jb)) c.fail("finite ⊓B ⊑ ∨B ⊑ ⊔B", elems);
        if (!le(mb, wb) || !le(wb, jb)) c.fail("finite ⊓B ⊑ ∧B ⊑ ⊔B", elems);
    };
    for (Index x = 0; x < n; ++x) {
        check_subset({x});
        for (Index y = x + 1; y < n; ++y) {
            check_subset({x, y});
            if (n <= 64)
                for (Index z = y + 1; z < n; ++z) check_subset({x, y, z});
        }
    }
    return c.take();
}

QuasiOrder::QuasiOrder(const FiniteDba& d) {
    const Index n = static_cast<Index>(d.size());
    up_.assign(n, CarrierSet(n));
    down_.assign(n, CarrierSet(n));
    for (Index x = 0; x < n; ++x) {
        const Index mx = d.meet(x, x);
        for (Index y = 0; y < n; ++y)
            if (d.meet(x, y) == mx && d.join(x, y) == d.join(y, y)) {
                up_[x].set(y);
                down_[y].set(x);
            }
    }
}

bool QuasiOrder::is_reflexive() const {
    for (std::size_t x = 0; x < up_.size(); ++x)
        if (!up_[x].test(x)) return false;
    return true;
}

bool QuasiOrder::is_transitive() const {
    for (std::size_t x = 0; x < up_.size(); ++x) {
        bool ok = true;
        up_[x].for_each([&](std::size_t y) { ok = ok && up_[y].subset_of(up_[x]); });
        if (!ok) return false;
    }
    return true;
}

bool QuasiOrder::is_antisymmetric() const {
    for (std::size_t x = 0; x < up_.size(); ++x) {
        CarrierSet both = up_[x] & down_[x];
        if (both.count() != (both.test(x) ? 1U : 0U)) return false;
    }
    return true;
}

QuasiOrder quasi_order(const FiniteDba& d) { return QuasiOrder(d); }

std::vector<Index> meet_idempotents(const FiniteDba& d) {
    std::vector<Index> out;
    for (Index x = 0; x < d.size(); ++x)
        if (d.in_meet_part(x)) out.push_back(x);
    return out;
}

std::vector<Index> join_idempotents(const FiniteDba& d) {
    std::vector<Index> out;
    for (Index x = 0; x < d.size(); ++x)
        if (d.in_join_part(x)) out.push_back(x);
    return out;
}

DbaClassification classify_dba(const FiniteDba& d) {
    DbaClassification c;
    const Index n = static_cast<Index>(d.size());
    c.pure = true;
    for (Index x = 0; x < n && c.pure; ++x) c.pure = d.in_pure_part(x);

    c.contextual = QuasiOrder(d).is_antisymmetric();
    if (!c.contextual) return c;

    // Bucket the carrier by (z_⊓, z_⊔); the gluing condition then asks for
    // exactly one z in each admissible bucket.
    std::unordered_map<std::uint64_t, std::size_t> buckets;
    for (Index z = 0; z < n; ++z)
        ++buckets[static_cast<std::uint64_t>(d.meet_part(z)) * n + d.join_part(z)];
    const auto dm = meet_idempotents(d);
    const auto dj = join_idempotents(d);
    c.fully_contextual = true;
    for (Index y : dm) {
        const Index yj = d.join_part(y);
        for (Index x : dj) {
            if (yj != d.meet_part(x)) continue;
            auto it = buckets.find(static_cast<std::uint64_t>(y) * n + x);
            if (it == buckets.end() || it->second != 1) {
                c.fully_contextual = false;
                return c;
            }
        }
    }
    return c;
}

Subalgebra restrict_to(const FiniteDba& d, const std::vector<Index>& members_in) {
    std::vector<Index> members = members_in;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const std::size_t k = members.size();
    if (k == 0) throw HypothesisError("subalgebra must be non-empty");
    constexpr Index kNone = ~Index{0};
    std::vector<Index> local(d.size(), kNone);
    for (std::size_t i = 0; i < k; ++i) {
        if (members[i] >= d.size()) throw DimensionError("subalgebra member out of range");
        local[members[i]] = static_cast<Index>(i);
    }
    auto loc = [&](Index parent, const char* what) {
        if (local[parent] == kNone)
            throw HypothesisError(std::string("subset not closed under ") + what + " (produces element " +
                                  std::to_string(parent) + ")");
        return local[parent];
    };
    std::vector<Index> meet(k * k), join(k * k), neg(k), opp(k);
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Index x = members[i];
        labels[i] = d.label(x);
        neg[i] = loc(d.neg(x), "¬");
        opp[i] = loc(d.opp(x), "⌐");
        for (std::size_t j = 0; j < k; ++j) {
            meet[i * k + j] = loc(d.meet(x, members[j]), "⊓");
            join[i * k + j] = loc(d.join(x, members[j]), "⊔");
        }
    }
    const Index top = loc(d.top(), "⊤");
    const Index bot = loc(d.bot(), "⊥");
    return Subalgebra{FiniteDba(k, std::move(meet), std::move(join), std::move(neg), std::move(opp), top, bot,
                                std::move(labels)),
                      std::move(members)};
}

Subalgebra pure_part(const FiniteDba& d) {
    std::vector<Index> members;
    for (Index x = 0; x < d.size(); ++x)
        if (d.in_pure_part(x)) members.push_back(x);
    return restrict_to(d, members);
}

namespace {

template <class Op>
Index fold(std::span<const Index> elems, Op op, const char* what) {
    if (elems.empty()) throw DimensionError(std::string(what) + " over an empty subset is undefined");
    // A singleton folds as a∘a, the only reading under which ∨{a} lands in D_⊓.
    Index acc = op(elems.front(), elems.size() == 1 ? elems.front() : elems[1]);
    for (std::size_t i = 2; i < elems.size(); ++i) acc = op(acc, elems[i]);
    return acc;
}

}  // namespace

Index finite_vee(const FiniteDba& d, std::span<const Index> e) {
    return fold(e, [&](Index a, Index b) { return d.vee(a, b); }, "∨B");
}
Index finite_wedge(const FiniteDba& d, std::span<const Index> e) {
    return fold(e, [&](Index a, Index b) { return d.wedge(a, b); }, "∧B");
}
Index finite_meet(const FiniteDba& d, std::span<const Index> e) {
    return fold(e, [&](Index a, Index b) { return d.meet(a, b); }, "⊓B");
}
Index finite_join(const FiniteDba& d, std::span<const Index> e) {
    return fold(e, [&](Index a, Index b) { return d.join(a, b); }, "⊔B");
}

BooleanReport validate_boolean(const BooleanAlgebra& b) {
    BooleanReport r;
    const Index n = static_cast<Index>(b.n);
    auto fail = [&](std::string why) {
        r.ok = false;
        r.failure = std::move(why);
        return r;
    };
    if (n == 0) return fail("empty carrier");
    if (b.meet.size() != b.n * b.n || b.join.size() != b.n * b.n || b.complement.size() != b.n)
        return fail("malformed tables");
    for (auto v : b.meet)
        if (v >= n) return fail("meet entry out of range");
    for (auto v : b.join)
        if (v >= n) return fail("join entry out of range");
    for (auto v : b.complement)
        if (v >= n) return fail("complement entry out of range");
    if (b.bottom >= n || b.top >= n) return fail("bounds out of range");

    auto below = [&](Index x, Index y) { return b.meet_of(x, y) == x; };
    for (Index x = 0; x < n; ++x) {
        if (x == b.bottom) continue;
        bool atom = true;
        for (Index y = 0; y < n && atom; ++y)
            if (y != b.bottom && y != x && below(y, x)) atom = false;
        if (atom) r.atoms.push_back(x);
    }
    for (Index x = 0; x < n; ++x) {
        if (x == b.top) continue;
        bool coatom = true;
        for (Index y = 0; y < n && coatom; ++y)
            if (y != b.top && y != x && below(x, y)) coatom = false;
        if (coatom) r.coatoms.push_back(x);
    }
    const std::size_t k = r.atoms.size();
    if (k >= 63) return fail("too many atoms");
    if (b.n != (std::size_t{1} << k))
        return fail("carrier size " + std::to_string(b.n) + " is not 2^" + std::to_string(k) + " (number of atoms)");

    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> phi(n, 0);
    std::vector<bool> hit(b.n, false);
    for (Index x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < k; ++i)
            if (below(r.atoms[i], x)) phi[x] |= std::uint64_t{1} << i;
        if (hit[phi[x]]) return fail("two elements above the same atoms: " + b.labels.at(x));
        hit[phi[x]] = true;
    }
    if (phi[b.bottom] != 0) return fail("bottom lies above an atom");
    if (phi[b.top] != full) return fail("top does not lie above every atom");
    for (Index x = 0; x < n; ++x) {
        if (phi[b.complement[x]] != (~phi[x] & full)) return fail("complement of " + b.labels.at(x) + " is wrong");
        for (Index y = 0; y < n; ++y) {
            if (phi[b.meet_of(x, y)] != (phi[x] & phi[y]))
                return fail("meet of " + b.labels.at(x) + " and " + b.labels.at(y) + " is not the glb");
            if (phi[b.join_of(x, y)] != (phi[x] | phi[y]))
                return fail("join of " + b.labels.at(x) + " and " + b.labels.at(y) + " is not the lub");
        }
    }
    r.ok = true;
    return r;
}

BooleanAlgebra power_set_algebra(std::size_t k) {
    if (k > 12) throw CapExceeded("power_set_algebra: 2^" + std::to_string(k) + " elements is too large");
    BooleanAlgebra b;
    b.n = std::size_t{1} << k;
    const Index mask = static_cast<Index>(b.n - 1);
    b.meet.resize(b.n * b.n);
    b.join.resize(b.n * b.n);
    b.complement.resize(b.n);
    for (Index x = 0; x < b.n; ++x) {
        b.complement[x] = ~x & mask;
        for (Index y = 0; y < b.n; ++y) {
            b.meet[x * b.n + y] = x & y;
            b.join[x * b.n + y] = x | y;
        }
        std::string label = "{";
        bool first = true;
        for (std::size_t i = 0; i < k; ++i)
            if ((x >> i) & 1U) {
                label += (first ? "" : ",") + std::to_string(i);
                first = false;
            }
        b.labels.push_back(label + "}");
    }
    b.bottom = 0;
    b.top = mask;
    return b;
}

namespace {

/// Tables of one Boolean reduct in local indices.
BooleanReduct make_reduct(const FiniteDba& d, std::vector<Index> elems, bool meet_side) {
    BooleanReduct r;
    r.elements = std::move(elems);
    const std::size_t k = r.elements.size();
    constexpr Index kNone = ~Index{0};
    std::vector<Index> local(d.size(), kNone);
    for (std::size_t i = 0; i < k; ++i) local[r.elements[i]] = static_cast<Index>(i);
    const char* name = meet_side ? "D⊓" : "D⊔";
    auto loc = [&](Index x) {
        if (local[x] == kNone)
            throw HypothesisError(std::string(name) + " is not closed (element " + std::to_string(x) + ")");
        return local[x];
    };

    BooleanAlgebra& b = r.algebra;
    b.n = k;
    b.meet.resize(k * k);
    b.join.resize(k * k);
    b.complement.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const Index x = r.elements[i];
        b.labels.push_back(d.label(x));
        b.complement[i] = loc(meet_side ? d.neg(x) : d.opp(x));
        for (std::size_t j = 0; j < k; ++j) {
            const Index y = r.elements[j];
            b.meet[i * k + j] = loc(meet_side ? d.meet(x, y) : d.wedge(x, y));
            b.join[i * k + j] = loc(meet_side ? d.vee(x, y) : d.join(x, y));
        }
    }
    b.bottom = loc(meet_side ? d.bot() : d.opp(d.top()));
    b.top = loc(meet_side ? d.neg(d.bot()) : d.top());
    r.report = validate_boolean(b);
    if (!r.report.ok) throw HypothesisError(std::string(name) + " is not a Boolean algebra: " + r.report.failure);
    for (auto a : r.report.atoms) r.atoms.push_back(r.elements[a]);
    for (auto a : r.report.coatoms) r.coatoms.push_back(r.elements[a]);
    return r;
}

}  // namespace

BooleanReducts boolean_reducts(const FiniteDba& d) {
    return BooleanReducts{make_reduct(d, meet_idempotents(d), true), make_reduct(d, join_idempotents(d), false)};
}

FiniteDba from_boolean(const BooleanAlgebra& b) {
    const auto rep = validate_boolean(b);
    if (!rep.ok) throw HypothesisError("from_boolean: input is not a Boolean algebra: " + rep.failure);
    return FiniteDba(b.n, b.meet, b.join, b.complement, b.complement, b.top, b.bottom, b.labels);
}

std::optional<BooleanAlgebra> to_boolean(const FiniteDba& d) {
    const Index n = static_cast<Index>(d.size());
    for (Index a = 0; a < n; ++a)
        if (d.neg(a) != d.opp(a) || d.neg(d.neg(a)) != a) return std::nullopt;
    BooleanAlgebra b;
    b.n = n;
    b.meet.assign(d.meet_table().begin(), d.meet_table().end());
    b.join.assign(d.join_table().begin(), d.join_table().end());
    b.complement.assign(d.neg_table().begin(), d.neg_table().end());
    b.bottom = d.bot();
    b.top = d.top();
    b.labels = d.labels();
    return b;
}

DbaHom check_hom(const FiniteDba& src, const FiniteDba& dst, std::vector<Index> map) {
    if (map.size() != src.size())
        throw DimensionError("hom map has " + std::to_string(map.size()) + " entries, source has " +
                             std::to_string(src.size()));
    for (auto v : map)
        if (v >= dst.size()) throw DimensionError("hom map entry " + std::to_string(v) + " out of range");
    DbaHom h;
    h.map = std::move(map);
    const auto& f = h.map;
    const Index n = static_cast<Index>(src.size());

    auto fail = [&](std::string why) {
        if (h.counterexample.empty()) h.counterexample = std::move(why);
    };
    auto s = [](Index v) { return std::to_string(v); };
    if (f[src.top()] != dst.top()) fail("h(⊤) ≠ ⊤");
    if (f[src.bot()] != dst.bot()) fail("h(⊥) ≠ ⊥");
    for (Index a = 0; a < n && h.counterexample.empty(); ++a) {
        if (f[src.neg(a)] != dst.neg(f[a])) fail("h(¬" + s(a) + ") ≠ ¬h(" + s(a) + ")");
        if (f[src.opp(a)] != dst.opp(f[a])) fail("h(⌐" + s(a) + ") ≠ ⌐h(" + s(a) + ")");
        for (Index b = 0; b < n && h.counterexample.empty(); ++b) {
            if (f[src.meet(a, b)] != dst.meet(f[a], f[b])) fail("h(" + s(a) + "⊓" + s(b) + ") ≠ h(a)⊓h(b)");
            if (f[src.join(a, b)] != dst.join(f[a], f[b])) fail("h(" + s(a) + "⊔" + s(b) + ") ≠ h(a)⊔h(b)");
        }
    }
    h.homomorphism = h.counterexample.empty();

    std::vector<bool> hit(dst.size(), false);
    h.injective = true;
    for (auto v : f) {
        if (hit[v]) h.injective = false;
        hit[v] = true;
    }
    h.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

    if (h.homomorphism) {
        const QuasiOrder qs(src), qd(dst);
        h.quasi_injective = true;
        for (Index x = 0; x < n && h.quasi_injective; ++x)
            for (Index y = 0; y < n; ++y)
                if (qs.leq(x, y) != qd.leq(f[x], f[y])) {
                    h.quasi_injective = false;
                    h.counterexample = "⊑ not reflected at (" + s(x) + "," + s(y) + ")";
                    break;
                }
    }
    return h;
}

PureExtension extend_pure_iso(const FiniteDba& d, const FiniteDba& m, const std::vector<Index>& pure_map) {
    if (!classify_dba(d).fully_contextual) throw HypothesisError("extend_pure_iso: source is not fully contextual");
    if (!classify_dba(m).fully_contextual) throw HypothesisError("extend_pure_iso: target is not fully contextual");
    const Subalgebra pd = pure_part(d);
    const Subalgebra pm = pure_part(m);
    const DbaHom hp = check_hom(pd.algebra, pm.algebra, pure_map);
    if (!hp.is_isomorphism())
        throw HypothesisError("extend_pure_iso: map is not an isomorphism of pure parts" +
                              (hp.counterexample.empty() ? std::string{} : ": " + hp.counterexample));

    constexpr Index kNone = ~Index{0};
    std::vector<Index> local(d.size(), kNone);
    for (std::size_t i = 0; i < pd.embedding.size(); ++i) local[pd.embedding[i]] = static_cast<Index>(i);
    auto h = [&](Index x) { return pm.embedding[pure_map[local[x]]]; };

    std::unordered_map<std::uint64_t, std::vector<Index>> buckets;
    const std::uint64_t mn = m.size();
    for (Index c = 0; c < m.size(); ++c) buckets[m.meet_part(c) * mn + m.join_part(c)].push_back(c);

    std::vector<Index> f(d.size());
    for (Index x = 0; x < d.size(); ++x) {
        const auto key = static_cast<std::uint64_t>(h(d.meet_part(x))) * mn + h(d.join_part(x));
        auto it = buckets.find(key);
        if (it == buckets.end())
            throw HypothesisError("extend_pure_iso: no element glues the images of element " + std::to_string(x));
        if (it->second.size() != 1)
            throw HypothesisError("extend_pure_iso: ambiguous gluing for element " + std::to_string(x));
        f[x] = it->second.front();
    }
    PureExtension ext;
    ext.hom = check_hom(d, m, std::move(f));
    ext.unique = true;
    for (std::size_t i = 0; i < pd.embedding.size(); ++i)
        if (ext.hom.map[pd.embedding[i]] != pm.embedding[pure_map[i]])
            throw InternalInconsistency("extension does not restrict to the given pure-part map");
    return ext;
}

namespace {

struct Invariant {
    bool meet_idem, join_idem, is_top, is_bot;
    std::size_t up, down;
    friend bool operator==(const Invariant&, const Invariant&) = default;
};

std::vector<Invariant> invariants(const FiniteDba& d) {
    const QuasiOrder q(d);
    std::vector<Invariant> out;
    for (Index x = 0; x < d.size(); ++x)
        out.push_back({d.in_meet_part(x), d.in_join_part(x), x == d.top(), x == d.bot(), q.up(x).count(),
                       q.down(x).count()});
    return out;
}

class IsoSearch {
public:
    IsoSearch(const FiniteDba& a, const FiniteDba& b, std::size_t limit)
        : a_(a), b_(b), limit_(limit), ia_(invariants(a)), ib_(invariants(b)), f_(a.size(), kNone), used_(b.size()) {}

    std::vector<std::vector<Index>> run() {
        if (a_.size() == b_.size()) extend(0);
        return std::move(found_);
    }

private:
    static constexpr Index kNone = ~Index{0};

    bool consistent(Index x) const {
        const Index y = f_[x];
        auto agrees = [&](Index src, Index img) { return f_[src] == kNone || f_[src] == img; };
        if (!agrees(a_.neg(x), b_.neg(y)) || !agrees(a_.opp(x), b_.opp(y))) return false;
        for (Index z = 0; z < a_.size(); ++z) {
            if (f_[z] == kNone) continue;
            const Index w = f_[z];
            if (!agrees(a_.meet(x, z), b_.meet(y, w)) || !agrees(a_.join(x, z), b_.join(y, w))) return false;
            if (a_.neg(z) == x && b_.neg(w) != y) return false;
            if (a_.opp(z) == x && b_.opp(w) != y) return false;
        }
        return true;
    }

    void extend(Index x) {
        if (found_.size() >= limit_) return;
        if (x == a_.size()) {
            if (check_hom(a_, b_, f_).is_isomorphism()) found_.push_back(f_);
            return;
        }
        for (Index y = 0; y < b_.size(); ++y) {
            if (used_[y] || !(ia_[x] == ib_[y])) continue;
            f_[x] = y;
            used_[y] = true;
            if (consistent(x)) extend(x + 1);
            used_[y] = false;
            f_[x] = kNone;
        }
    }

    const FiniteDba& a_;
    const FiniteDba& b_;
    std::size_t limit_;
    std::vector<Invariant> ia_, ib_;
    std::vector<Index> f_;
    std::vector<bool> used_;
    std::vector<std::vector<Index>> found_;
};

}  // namespace

std::vector<std::vector<Index>> find_isomorphisms(const FiniteDba& a, const FiniteDba& b, std::size_t limit) {
    return IsoSearch(a, b, limit).run();
}

std::vector<Index> compose(const std::vector<Index>& g, const std::vector<Index>& f) {
    std::vector<Index> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.at(f[i]);
    return out;
}

std::vector<Index> identity_map(std::size_t n) {
    std::vector<Index> out(n);
    std::iota(out.begin(), out.end(), Index{0});
    return out;
}

std::vector<Index> inverse_map(const std::vector<Index>& f) {
    std::vector<Index> out(f.size(), ~Index{0});
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= f.size() || out[f[i]] != ~Index{0}) throw DimensionError("inverse_map: map is not a bijection");
        out[f[i]] = static_cast<Index>(i);
    }
    return out;
}

}  // namespace dbatk
