#pragma once

#include <algorithm>
#include <chrono>
#include <deque>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "label_set.hpp"

namespace hbt {

// Element of B(n,d), stored as its inversion set: a lex-sorted family of
// (d+1)-subsets of [n]. For d = 0 this is just a subset of [n].
struct BruhatElement {
    int n = 0;
    int d = 0;
    std::vector<LabelSet> inversions;

    bool contains(LabelSet y) const { return std::binary_search(inversions.begin(), inversions.end(), y); }
    int rank() const { return static_cast<int>(inversions.size()); }

    friend bool operator==(const BruhatElement&, const BruhatElement&) = default;
    friend auto operator<=>(const BruhatElement& a, const BruhatElement& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.d <=> b.d; c != 0) return c;
        return a.inversions <=> b.inversions;
    }
};

// A total order on binom([n], d).
struct AdmissibleOrder {
    int n = 0;
    int d = 0;
    std::vector<LabelSet> sequence;
};

struct EnumBudget {
    std::size_t max_elements = 10'000'000;
    double max_seconds = 0;  // 0 disables the clock
};

// Index tables for binom([n],d+1) and the (d+2)-packets over it.
class BruhatSpace {
public:
    BruhatSpace(int n, int d) : n_(n), d_(d) {
        if (n < 0 || d < 0 || n > LabelSet::max_label) throw input_error("bad (n,d)");
        univ_ = SubsetIndex(k_subsets(n, d + 1));
        for (LabelSet j : k_subsets(n, d + 2)) {
            std::vector<int> m;
            for (LabelSet y : packet_of(j).members) m.push_back(univ_.at(y));
            packets_.push_back(std::move(m));
        }
        through_.resize(univ_.size());
        for (std::size_t p = 0; p < packets_.size(); ++p)
            for (int y : packets_[p]) through_[y].push_back(static_cast<int>(p));
    }

    int n() const { return n_; }
    int d() const { return d_; }
    const SubsetIndex& universe() const { return univ_; }
    int universe_size() const { return univ_.size(); }

    BitVec empty_mask() const { return BitVec(univ_.size()); }
    BitVec full_mask() const {
        BitVec b(univ_.size());
        for (int i = 0; i < univ_.size(); ++i) b.set(i);
        return b;
    }

    BitVec to_mask(const std::vector<LabelSet>& sets) const {
        BitVec b(univ_.size());
        for (LabelSet s : sets) {
            if (s.size() != d_ + 1 || s.empty() || s.min() < 1 || s.max() > n_)
                throw input_error("inversion entry " + s.str() + " is not a " + std::to_string(d_ + 1) +
                                  "-subset of [" + std::to_string(n_) + "]");
            b.set(univ_.at(s));
        }
        return b;
    }
    BruhatElement to_element(const BitVec& b) const {
        BruhatElement e{n_, d_, {}};
        for (int i = 0; i < univ_.size(); ++i)
            if (b.test(i)) e.inversions.push_back(univ_[i]);
        return e;
    }

    // Restriction of `b` to packet p is an initial or final lex segment.
    bool packet_ok(const BitVec& b, int p, bool super = false) const {
        const auto& m = packets_[p];
        int len = static_cast<int>(m.size()), k = 0;
        for (int y : m) k += b.test(y);
        if (k == 0 || k == len) return true;
        bool initial = true, final = true;
        for (int i = 0; i < k; ++i) initial = initial && b.test(m[i]);
        for (int i = len - k; i < len; ++i) final = final && b.test(m[i]);
        if (!super) return initial || final;
        return (initial && k % 2 == 1) || (final && k % 2 == d_ % 2);
    }
    bool consistent(const BitVec& b) const {
        for (std::size_t p = 0; p < packets_.size(); ++p)
            if (!packet_ok(b, static_cast<int>(p))) return false;
        return true;
    }
    bool superconsistent(const BitVec& b) const {
        for (std::size_t p = 0; p < packets_.size(); ++p)
            if (!packet_ok(b, static_cast<int>(p), true)) return false;
        return true;
    }
    // Consistency of b after toggling entry y, assuming b itself is consistent.
    bool consistent_after_toggle(BitVec b, int y) const {
        if (b.test(y)) b.reset(y); else b.set(y);
        for (int p : through_[y])
            if (!packet_ok(b, p)) return false;
        return true;
    }

    const std::vector<std::vector<int>>& packets() const { return packets_; }

private:
    int n_, d_;
    SubsetIndex univ_;
    std::vector<std::vector<int>> packets_;
    std::vector<std::vector<int>> through_;
};

inline BruhatElement bruhat_bottom(int n, int d) { return {n, d, {}}; }
inline BruhatElement bruhat_top(int n, int d) { return {n, d, k_subsets(n, d + 1)}; }

inline BruhatElement make_bruhat(int n, int d, std::vector<LabelSet> inv) {
    std::sort(inv.begin(), inv.end());
    if (std::adjacent_find(inv.begin(), inv.end()) != inv.end()) throw input_error("duplicate inversion entry");
    BruhatElement e{n, d, std::move(inv)};
    BruhatSpace sp(n, d);
    sp.to_mask(e.inversions);  // validates entries
    return e;
}

inline bool is_consistent(const std::vector<LabelSet>& inv, int n, int d) {
    BruhatSpace sp(n, d);
    return sp.consistent(sp.to_mask(inv));
}

inline bool is_superconsistent(const std::vector<LabelSet>& inv, int n, int d) {
    BruhatSpace sp(n, d);
    return sp.superconsistent(sp.to_mask(inv));
}

namespace detail {

inline std::vector<int> order_positions(const AdmissibleOrder& o, const SubsetIndex& family) {
    if (static_cast<int>(o.sequence.size()) != family.size())
        throw input_error("order length does not match binom(n,d)");
    std::vector<int> pos(family.size(), -1);
    for (std::size_t i = 0; i < o.sequence.size(); ++i) {
        int k = family.find(o.sequence[i]);
        if (k < 0) throw input_error("order entry " + o.sequence[i].str() + " is not a d-subset of [n]");
        if (pos[k] >= 0) throw input_error("order repeats " + o.sequence[i].str());
        pos[k] = static_cast<int>(i);
    }
    return pos;
}

// +1 packet in lex order, -1 reversed, 0 neither.
inline int packet_direction(LabelSet j, const std::vector<int>& pos, const SubsetIndex& family) {
    auto m = packet_of(j).members;
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        int a = pos[family.at(m[i])], b = pos[family.at(m[i + 1])];
        inc = inc && a < b;
        dec = dec && a > b;
    }
    return inc ? 1 : (dec ? -1 : 0);
}

}  // namespace detail

inline bool is_admissible(const AdmissibleOrder& o) {
    SubsetIndex family(k_subsets(o.n, o.d));
    auto pos = detail::order_positions(o, family);
    for (LabelSet j : k_subsets(o.n, o.d + 1))
        if (detail::packet_direction(j, pos, family) == 0) return false;
    return true;
}

inline BruhatElement inversion_set(const AdmissibleOrder& o) {
    SubsetIndex family(k_subsets(o.n, o.d));
    auto pos = detail::order_positions(o, family);
    BruhatElement e{o.n, o.d, {}};
    for (LabelSet j : k_subsets(o.n, o.d + 1)) {
        int dir = detail::packet_direction(j, pos, family);
        if (dir == 0) throw input_error("inversion_set: order is not admissible at packet " + j.str());
        if (dir < 0) e.inversions.push_back(j);
    }
    return e;
}

inline AdmissibleOrder lex_order(int n, int d) { return {n, d, k_subsets(n, d)}; }

// All of B(n,d), grown breadth-first from the empty set; sorted output.
inline std::vector<BruhatElement> enumerate_bruhat(int n, int d, const EnumBudget& budget = {}) {
    if (d < 0 || n < 0) throw input_error("enumerate_bruhat: need n, d >= 0");
    BruhatSpace sp(n, d);
    auto t0 = std::chrono::steady_clock::now();
    std::unordered_set<BitVec, BitVecHash> seen;
    std::vector<BitVec> frontier{sp.empty_mask()};
    seen.insert(frontier.front());
    std::size_t steps = 0;
    while (!frontier.empty()) {
        std::vector<BitVec> next;
        for (const BitVec& b : frontier) {
            for (int y = 0; y < sp.universe_size(); ++y) {
                if (b.test(y) || !sp.consistent_after_toggle(b, y)) continue;
                BitVec c = b;
                c.set(y);
                if (seen.insert(c).second) {
                    next.push_back(std::move(c));
                    if (seen.size() > budget.max_elements)
                        throw resource_error("enumerate_bruhat(" + std::to_string(n) + "," + std::to_string(d) +
                                                 "): element budget exceeded",
                                             seen.size());
                }
            }
            if (budget.max_seconds > 0 && (++steps & 255) == 0) {
                double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (s > budget.max_seconds)
                    throw resource_error("enumerate_bruhat: time budget exceeded", seen.size());
            }
        }
        frontier = std::move(next);
    }
    std::vector<BruhatElement> out;
    out.reserve(seen.size());
    for (const BitVec& b : seen) out.push_back(sp.to_element(b));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<BruhatElement> covers_up(const BruhatElement& e) {
    BruhatSpace sp(e.n, e.d);
    BitVec b = sp.to_mask(e.inversions);
    std::vector<BruhatElement> out;
    for (int y = 0; y < sp.universe_size(); ++y)
        if (!b.test(y) && sp.consistent_after_toggle(b, y)) {
            BitVec c = b;
            c.set(y);
            out.push_back(sp.to_element(c));
        }
    return out;
}

inline std::vector<BruhatElement> covers_down(const BruhatElement& e) {
    BruhatSpace sp(e.n, e.d);
    BitVec b = sp.to_mask(e.inversions);
    std::vector<BruhatElement> out;
    for (int y = 0; y < sp.universe_size(); ++y)
        if (b.test(y) && sp.consistent_after_toggle(b, y)) {
            BitVec c = b;
            c.reset(y);
            out.push_back(sp.to_element(c));
        }
    return out;
}

// An order in A(n,d) whose inversion set is e: a topological sort of the
// packet chains, each chain reversed when its generator is in e.
inline AdmissibleOrder witness_order(const BruhatElement& e) {
    SubsetIndex family(k_subsets(e.n, e.d));
    int m = family.size();
    std::vector<std::vector<int>> succ(m);
    std::vector<int> indeg(m, 0);
    for (LabelSet j : k_subsets(e.n, e.d + 1)) {
        auto mem = packet_of(j).members;
        if (e.contains(j)) std::reverse(mem.begin(), mem.end());
        for (std::size_t i = 0; i + 1 < mem.size(); ++i) {
            int a = family.at(mem[i]), b = family.at(mem[i + 1]);
            succ[a].push_back(b);
            ++indeg[b];
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < m; ++i)
        if (indeg[i] == 0) ready.push(i);
    AdmissibleOrder o{e.n, e.d, {}};
    while (!ready.empty()) {
        int a = ready.top();
        ready.pop();
        o.sequence.push_back(family[a]);
        for (int b : succ[a])
            if (--indeg[b] == 0) ready.push(b);
    }
    if (static_cast<int>(o.sequence.size()) != m)
        throw input_error("witness_order: inversion set is not consistent");
    return o;
}

// A maximal chain of B(n,d) written as the order in which the (d+1)-sets are
// added. It passes through every target and ends at the top element; every
// prefix is consistent, so the result lies in A(n,d+1).
inline AdmissibleOrder admissible_order_through(const std::vector<BruhatElement>& targets, int n, int d) {
    BruhatSpace sp(n, d);
    std::vector<BitVec> goals;
    for (const auto& t : targets) {
        if (t.n != n || t.d != d) throw input_error("admissible_order_through: target parameters differ");
        BitVec b = sp.to_mask(t.inversions);
        if (!sp.consistent(b)) throw input_error("admissible_order_through: target is not consistent");
        goals.push_back(std::move(b));
    }
    goals.push_back(sp.full_mask());

    AdmissibleOrder out{n, d + 1, {}};
    BitVec cur = sp.empty_mask();
    for (const BitVec& goal : goals) {
        if (!cur.subset_of(goal)) throw construction_error("admissible_order_through: targets are not nested");
        std::unordered_set<BitVec, BitVecHash> failed;
        std::vector<int> path;
        // Depth-first search restricted to entries of `goal`.
        auto dfs = [&](auto&& self, BitVec& state) -> bool {
            if (state == goal) return true;
            if (failed.count(state)) return false;
            for (int y = 0; y < sp.universe_size(); ++y) {
                if (!goal.test(y) || state.test(y) || !sp.consistent_after_toggle(state, y)) continue;
                state.set(y);
                path.push_back(y);
                if (self(self, state)) return true;
                path.pop_back();
                state.reset(y);
            }
            failed.insert(state);
            return false;
        };
        if (!dfs(dfs, cur)) throw construction_error("admissible_order_through: no single-step chain to a target");
        for (int y : path) out.sequence.push_back(sp.universe()[y]);
    }
    return out;
}

// Every admissible order of binom([n],d) (small cases only).
inline std::vector<AdmissibleOrder> enumerate_admissible_orders(int n, int d, std::size_t limit = 1'000'000) {
    // Maximal chains of B(n,d-1) are exactly the admissible orders of binom([n],d).
    if (d < 1) throw input_error("enumerate_admissible_orders: need d >= 1");
    BruhatSpace sp(n, d - 1);
    std::vector<AdmissibleOrder> out;
    std::vector<int> path;
    BitVec state = sp.empty_mask();
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == sp.universe_size()) {
            AdmissibleOrder o{n, d, {}};
            for (int y : path) o.sequence.push_back(sp.universe()[y]);
            out.push_back(std::move(o));
            if (out.size() > limit) throw resource_error("enumerate_admissible_orders: limit exceeded", out.size());
            return;
        }
        for (int y = 0; y < sp.universe_size(); ++y) {
            if (state.test(y) || !sp.consistent_after_toggle(state, y)) continue;
            state.set(y);
            path.push_back(y);
            self(self);
            path.pop_back();
            state.reset(y);
        }
    };
    rec(rec);
    return out;
}

// Element of B(n,1) <-> word of a permutation of [n]. The admissible order on
// singletons is the word; (i,j) is an inversion when j precedes i.
inline BruhatElement permutation_to_bruhat(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    std::vector<int> pos(n + 1, -1);
    for (int i = 0; i < n; ++i) {
        if (word[i] < 1 || word[i] > n || pos[word[i]] >= 0) throw input_error("not a permutation of [n]");
        pos[word[i]] = i;
    }
    BruhatElement e{n, 1, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pos[j] < pos[i]) e.inversions.push_back(LabelSet{i, j});
    std::sort(e.inversions.begin(), e.inversions.end());
    return e;
}

inline std::vector<int> bruhat_to_permutation(const BruhatElement& e) {
    if (e.d != 1) throw input_error("bruhat_to_permutation: need d = 1");
    std::vector<int> w;
    for (LabelSet s : witness_order(e).sequence) w.push_back(s.min());
    return w;
}

}  // namespace hbt
