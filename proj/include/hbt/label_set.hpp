#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace hbt {

// A finite set of labels in [0, 63], stored as a bitmask.
// Ordering is lexicographic on the increasing element sequence.
class LabelSet {
public:
    static constexpr int max_label = 63;

    constexpr LabelSet() = default;
    LabelSet(std::initializer_list<int> xs) {
        for (int x : xs) insert(x);
    }
    explicit LabelSet(const std::vector<int>& xs) {
        for (int x : xs) insert(x);
    }
    static constexpr LabelSet from_bits(std::uint64_t b) {
        LabelSet s;
        s.bits_ = b;
        return s;
    }
    // {lo, lo+1, ..., hi}; empty when hi < lo.
    static LabelSet range(int lo, int hi) {
        LabelSet s;
        for (int x = lo; x <= hi; ++x) s.insert(x);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int x) const {
        return x >= 0 && x <= max_label && ((bits_ >> x) & 1u);
    }
    constexpr bool subset_of(LabelSet o) const { return (bits_ & ~o.bits_) == 0; }

    void insert(int x) {
        if (x < 0 || x > max_label)
            throw input_error("label " + std::to_string(x) + " outside [0,63]");
        bits_ |= std::uint64_t{1} << x;
    }
    void erase(int x) {
        if (x >= 0 && x <= max_label) bits_ &= ~(std::uint64_t{1} << x);
    }
    LabelSet with(int x) const {
        LabelSet s = *this;
        s.insert(x);
        return s;
    }
    LabelSet without(int x) const {
        LabelSet s = *this;
        s.erase(x);
        return s;
    }

    int min() const {
        if (empty()) throw input_error("min of empty label set");
        return std::countr_zero(bits_);
    }
    int max() const {
        if (empty()) throw input_error("max of empty label set");
        return 63 - std::countl_zero(bits_);
    }
    // Number of elements strictly below / above x.
    int count_below(int x) const {
        if (x <= 0) return 0;
        if (x > max_label) return size();
        return std::popcount(bits_ & ((std::uint64_t{1} << x) - 1));
    }
    int count_above(int x) const {
        if (x < 0) return size();
        if (x >= max_label) return 0;
        return std::popcount(bits_ >> (x + 1));
    }
    // Elements strictly between a and b (either order).
    int count_between(int a, int b) const {
        if (a > b) std::swap(a, b);
        return size() - count_below(a + 1) - count_above(b - 1);
    }
    // 1-indexed position of the element x (0 if absent).
    int position(int x) const { return contains(x) ? count_below(x) + 1 : 0; }
    // 1-indexed i-th smallest element.
    int at(int i) const {
        std::uint64_t b = bits_;
        for (int k = 1; k < i; ++k) b &= b - 1;
        if (b == 0) throw input_error("label set position out of range");
        return std::countr_zero(b);
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr LabelSet operator|(LabelSet a, LabelSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr LabelSet operator&(LabelSet a, LabelSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr LabelSet operator-(LabelSet a, LabelSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(LabelSet a, LabelSet b) { return a.bits_ == b.bits_; }

    // Lexicographic on sorted sequences: the smallest label in the symmetric
    // difference decides, and a proper prefix sorts first.
    friend constexpr std::strong_ordering operator<=>(LabelSet a, LabelSet b) {
        std::uint64_t x = a.bits_ ^ b.bits_;
        if (x == 0) return std::strong_ordering::equal;
        std::uint64_t low = x & (~x + 1);
        return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    // Digit string "1245" when every label is a single digit, else "1.12.13".
    std::string str() const {
        std::string s;
        bool small = empty() || max() < 10;
        for (int x : elements()) {
            if (!small && !s.empty()) s += '.';
            s += std::to_string(x);
        }
        return s;
    }

private:
    std::uint64_t bits_ = 0;
};

struct LabelSetHash {
    std::size_t operator()(LabelSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

enum class Ordering { less, equal, greater };

inline Ordering lex_compare(LabelSet a, LabelSet b) {
    if (a.size() != b.size()) throw input_error("lex_compare: cardinality mismatch");
    auto c = a <=> b;
    if (c < 0) return Ordering::less;
    if (c > 0) return Ordering::greater;
    return Ordering::equal;
}

// All k-subsets of `ground`, in lexicographic order.
inline std::vector<LabelSet> k_subsets(LabelSet ground, int k) {
    std::vector<LabelSet> out;
    std::vector<int> g = ground.elements();
    int m = static_cast<int>(g.size());
    if (k < 0 || k > m) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        LabelSet s;
        for (int i : idx) s.insert(g[i]);
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline std::vector<LabelSet> k_subsets(int n, int k) { return k_subsets(LabelSet::range(1, n), k); }

// The |X| subsets of X of size |X|-1, lexicographically. Member i omits the
// (|X|+1-i)-th element, so the packet starts with X minus its maximum.
struct Packet {
    LabelSet generator;
    std::vector<LabelSet> members;
};

inline Packet packet_of(LabelSet x) {
    if (x.empty()) throw input_error("packet_of: empty generator");
    Packet p{x, {}};
    std::vector<int> e = x.elements();
    for (auto it = e.rbegin(); it != e.rend(); ++it) p.members.push_back(x.without(*it));
    return p;
}

// Replace each entry by its rank among the entries.
inline std::vector<int> standardize(const std::vector<int>& seq) {
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("standardize: duplicate entries");
    std::vector<int> out;
    out.reserve(seq.size());
    for (int v : seq)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return out;
}

// Dense index over a fixed family of label sets.
class SubsetIndex {
public:
    SubsetIndex() = default;
    explicit SubsetIndex(std::vector<LabelSet> family) : sets_(std::move(family)) {
        for (std::size_t i = 0; i < sets_.size(); ++i) pos_[sets_[i].bits()] = static_cast<int>(i);
    }
    int size() const { return static_cast<int>(sets_.size()); }
    const LabelSet& operator[](int i) const { return sets_[i]; }
    const std::vector<LabelSet>& sets() const { return sets_; }
    // -1 when absent.
    int find(LabelSet s) const {
        auto it = pos_.find(s.bits());
        return it == pos_.end() ? -1 : it->second;
    }
    int at(LabelSet s) const {
        int i = find(s);
        if (i < 0) throw input_error("label set " + s.str() + " not in family");
        return i;
    }

private:
    std::vector<LabelSet> sets_;
    std::unordered_map<std::uint64_t, int> pos_;
};

// Growable bitset with value semantics and total order; used as a compact
// membership mask over a SubsetIndex.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    int nbits() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool subset_of(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    const std::vector<std::uint64_t>& words() const { return w_; }
    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec& a, const BitVec& b) { return a.w_ <=> b.w_; }

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto w : w_) h = (h ^ w) * 1099511628211ull;
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& b) const noexcept { return b.hash(); }
};

}  // namespace hbt
