#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "dbatk/error.hpp"

namespace dbatk {

/// Tags for the index space a set lives in.
struct ObjectSide {};
struct AttributeSide {};
struct CarrierSide {};
struct GroundSide {};

/// Fixed-width packed bit vector over the index space [0, width).
///
/// The tag keeps object sets, attribute sets and carrier subsets from being
/// mixed up at compile time; `retag` converts explicitly where the algebra
/// really does identify two index spaces.
template <class Side>
class BitSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitSet() = default;
    explicit BitSet(std::size_t width) : width_(width), words_((width + kWordBits - 1) / kWordBits, 0) {}
    BitSet(std::size_t width, std::initializer_list<std::size_t> members) : BitSet(width) {
        for (auto i : members) set(i);
    }

    static BitSet full(std::size_t width) {
        BitSet s(width);
        std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
        s.trim();
        return s;
    }

    /// Builds a set from the low `width` bits of `mask` (width <= 64).
    static BitSet from_mask(std::size_t width, Word mask) {
        if (width > kWordBits) throw DimensionError("from_mask: width exceeds 64");
        BitSet s(width);
        if (width > 0) s.words_[0] = mask;
        s.trim();
        return s;
    }

    static BitSet from_indices(std::size_t width, const std::vector<std::size_t>& idx) {
        BitSet s(width);
        for (auto i : idx) s.set(i);
        return s;
    }

    std::size_t width() const noexcept { return width_; }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }
    void set(std::size_t i, bool value = true) {
        check_index(i);
        const Word bit = Word{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= bit;
        else
            words_[i / kWordBits] &= ~bit;
    }
    void reset(std::size_t i) { set(i, false); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }
    bool is_full() const noexcept { return count() == width_; }

    bool subset_of(const BitSet& o) const {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool intersects(const BitSet& o) const {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    BitSet& operator&=(const BitSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    BitSet& operator|=(const BitSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    BitSet& operator-=(const BitSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

    BitSet complement() const {
        BitSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    /// Low 64 bits; throws when the set is wider than one word.
    Word to_mask() const {
        if (width_ > kWordBits) throw DimensionError("to_mask: width exceeds 64");
        return words_.empty() ? 0 : words_[0];
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t k = 0; k < words_.size(); ++k) {
            Word w = words_[k];
            while (w) {
                out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            Word w = words_[k];
            while (w) {
                f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    const std::vector<Word>& words() const noexcept { return words_; }

    friend bool operator==(const BitSet& a, const BitSet& b) = default;

    /// Canonical order: compares as binary numbers with index 0 least significant.
    friend bool operator<(const BitSet& a, const BitSet& b) {
        if (a.width_ != b.width_) return a.width_ < b.width_;
        for (std::size_t k = a.words_.size(); k-- > 0;)
            if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
        return false;
    }

    std::string to_string() const {
        std::string s(width_, '0');
        for (std::size_t i = 0; i < width_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    std::size_t hash() const noexcept {
        std::size_t h = std::hash<std::size_t>{}(width_);
        for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() noexcept {
        if (words_.empty()) return;
        const std::size_t rem = width_ % kWordBits;
        if (rem != 0) words_.back() &= (Word{1} << rem) - 1;
    }
    void check_index(std::size_t i) const {
        if (i >= width_) throw DimensionError("bit index " + std::to_string(i) + " out of range " + std::to_string(width_));
    }
    void check_same(const BitSet& o) const {
        if (o.width_ != width_)
            throw DimensionError("set width mismatch: " + std::to_string(width_) + " vs " + std::to_string(o.width_));
    }

    std::size_t width_ = 0;
    std::vector<Word> words_;
};

using ObjectSet = BitSet<ObjectSide>;
using AttributeSet = BitSet<AttributeSide>;
using CarrierSet = BitSet<CarrierSide>;
using GroundSet = BitSet<GroundSide>;

template <class To, class From>
BitSet<To> retag(const BitSet<From>& s) {
    BitSet<To> out(s.width());
    s.for_each([&](std::size_t i) { out.set(i); });
    return out;
}

template <class Side>
struct BitSetHash {
    std::size_t operator()(const BitSet<Side>& s) const noexcept { return s.hash(); }
};

}  // namespace dbatk
