#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "exact_cover.hpp"
#include "label_set.hpp"

namespace hbt {

// Element of S(ground, d): a set of (d+1)-subsets of the ground labels.
struct Triangulation {
    LabelSet ground;
    int d = 0;
    std::vector<LabelSet> simplices;  // lex-sorted

    bool contains(LabelSet a) const { return std::binary_search(simplices.begin(), simplices.end(), a); }

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend auto operator<=>(const Triangulation& a, const Triangulation& b) {
        if (auto c = a.ground <=> b.ground; c != 0) return c;
        if (auto c = a.d <=> b.d; c != 0) return c;
        return a.simplices <=> b.simplices;
    }
};

inline Triangulation make_triangulation(LabelSet ground, int d, std::vector<LabelSet> simplices) {
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    return {ground, d, std::move(simplices)};
}

// True iff the moment-curve points i and j are separated by the hyperplane
// spanned by the points of A: an odd number of A's labels lie between them.
inline bool opposite_sides(int i, int j, LabelSet a) {
    if (i == j || a.contains(i) || a.contains(j)) throw input_error("opposite_sides: labels overlap");
    return a.count_between(i, j) % 2 == 1;
}

// Point j lies above the hyperplane through the points of F, where |F| is the
// ambient dimension: an even number of F's labels exceed j.
inline bool is_above(int j, LabelSet f) {
    if (f.contains(j)) throw input_error("is_above: j lies in F");
    return f.count_above(j) % 2 == 0;
}

namespace detail {

inline std::vector<LabelSet> simplex_facets(LabelSet b, bool upper) {
    if (b.size() < 2) throw input_error("simplex facets: need at least two vertices");
    int k = b.size() - 1;
    std::vector<LabelSet> out;
    auto e = b.elements();
    for (int i = 1; i <= b.size(); ++i) {
        bool same = (i - k) % 2 == 0;
        if (same == upper) out.push_back(b.without(e[i - 1]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Facets omitting the vertex at a position of the same parity as dim B.
inline std::vector<LabelSet> upper_facets_simplex(LabelSet b) { return detail::simplex_facets(b, true); }
inline std::vector<LabelSet> lower_facets_simplex(LabelSet b) { return detail::simplex_facets(b, false); }

// Facet matching: boundary facets of the cyclic polytope occur once, every
// other facet occurs twice with the two apexes on opposite sides.
inline bool is_triangulation(const std::vector<LabelSet>& simplices, LabelSet ground, int d) {
    if (simplices.empty() || d < 1) return false;
    std::map<LabelSet, std::vector<int>> apex;
    std::set<LabelSet> seen;
    for (LabelSet a : simplices) {
        if (a.size() != d + 1 || !a.subset_of(ground) || !seen.insert(a).second) return false;
        for (int v : a.elements()) apex[a.without(v)].push_back(v);
    }
    for (const auto& [f, vs] : apex) {
        if (vs.size() == 1) {
            LabelSet rest = ground - f;
            bool side = is_above(rest.min(), f);
            for (int j : rest.elements())
                if (is_above(j, f) != side) return false;
        } else if (vs.size() == 2) {
            if (!opposite_sides(vs[0], vs[1], f)) return false;
        } else {
            return false;
        }
    }
    return true;
}

inline bool is_triangulation(const Triangulation& t) { return is_triangulation(t.simplices, t.ground, t.d); }

// Lower and upper facets of the cyclic polytope C(ground, d+1), as
// (d+1)-sets: the minimum and maximum of S(ground, d).
inline std::pair<Triangulation, Triangulation> bottom_top(LabelSet ground, int d) {
    if (ground.size() < d + 1 || d < 0) throw input_error("bottom_top: ground set too small");
    Triangulation lo{ground, d, {}}, hi{ground, d, {}};
    for (LabelSet f : k_subsets(ground, d + 1)) {
        LabelSet rest = ground - f;
        bool all_above = true, all_below = true;
        for (int j : rest.elements()) {
            bool up = is_above(j, f);
            all_above = all_above && up;
            all_below = all_below && !up;
        }
        if (all_above) lo.simplices.push_back(f);
        if (all_below) hi.simplices.push_back(f);
    }
    return {lo, hi};
}

inline Triangulation tamari_bottom(LabelSet ground, int d) { return bottom_top(ground, d).first; }
inline Triangulation tamari_top(LabelSet ground, int d) { return bottom_top(ground, d).second; }
inline Triangulation tamari_bottom(int n, int d) { return tamari_bottom(LabelSet::range(1, n), d); }
inline Triangulation tamari_top(int n, int d) { return tamari_top(LabelSet::range(1, n), d); }

// Replace labels by their images under the order-preserving bijection ground -> target.
inline Triangulation relabel(const Triangulation& t, LabelSet target) {
    if (target.size() != t.ground.size()) throw input_error("relabel: ground sizes differ");
    auto src = t.ground.elements(), dst = target.elements();
    std::map<int, int> m;
    for (std::size_t i = 0; i < src.size(); ++i) m[src[i]] = dst[i];
    Triangulation out{target, t.d, {}};
    for (LabelSet a : t.simplices) {
        LabelSet b;
        for (int v : a.elements()) b.insert(m[v]);
        out.simplices.push_back(b);
    }
    std::sort(out.simplices.begin(), out.simplices.end());
    return out;
}

// ---- snug rectangles ------------------------------------------------------

struct SnugRectangle {
    LabelSet generator;
    std::vector<LabelSet> members;  // lex-sorted d-sets
};

// d-sets with one element in each window [a_i, a_{i+1} - 1].
inline SnugRectangle snug_rectangle(LabelSet a) {
    if (a.size() < 1) throw input_error("snug_rectangle: empty generator");
    auto e = a.elements();
    SnugRectangle r{a, {}};
    std::vector<int> pick(e.size() - 1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i + 1 == e.size()) {
            r.members.push_back(LabelSet(pick));
            return;
        }
        for (int x = e[i]; x < e[i + 1]; ++x) {
            pick[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(r.members.begin(), r.members.end());
    return r;
}

// Complements in [n-1] of the members of r(A).
inline std::vector<LabelSet> snug_complement(LabelSet a, int n) {
    LabelSet univ = LabelSet::range(1, n - 1);
    std::vector<LabelSet> out;
    for (LabelSet m : snug_rectangle(a).members) out.push_back(univ - m);
    std::sort(out.begin(), out.end());
    return out;
}

// The same family as a product: pick c-1 or c for each c in [n] \ A, keep
// the choices that are distinct and inside [n-1].
inline std::vector<LabelSet> snug_complement_product(LabelSet a, int n) {
    auto comp = (LabelSet::range(1, n) - a).elements();
    std::vector<LabelSet> out;
    for (std::uint32_t m = 0; m < (1u << comp.size()); ++m) {
        LabelSet s;
        bool ok = true;
        for (std::size_t i = 0; i < comp.size() && ok; ++i) {
            int v = (m >> i & 1u) ? comp[i] : comp[i] - 1;
            if (v < 1 || v > n - 1 || s.contains(v)) ok = false;
            else s.insert(v);
        }
        if (ok) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

using SnugPartition = std::vector<SnugRectangle>;

inline SnugPartition triangulation_to_snug(const Triangulation& t) {
    SnugPartition p;
    for (LabelSet a : t.simplices) p.push_back(snug_rectangle(a));
    return p;
}

// Inverse of triangulation_to_snug for a ground set [1..n].
inline Triangulation snug_to_triangulation(const SnugPartition& p, int n, int d) {
    std::set<LabelSet> covered;
    Triangulation t{LabelSet::range(1, n), d, {}};
    for (const auto& r : p) {
        if (r.generator.size() != d + 1 || !r.generator.subset_of(t.ground))
            throw input_error("snug_to_triangulation: bad generator " + r.generator.str());
        if (r.members != snug_rectangle(r.generator).members)
            throw input_error("snug_to_triangulation: rectangle members do not match generator");
        for (LabelSet m : r.members)
            if (!covered.insert(m).second) throw input_error("snug_to_triangulation: rectangles overlap at " + m.str());
        t.simplices.push_back(r.generator);
    }
    if (covered.size() != k_subsets(n - 1, d).size()) throw input_error("snug_to_triangulation: d-sets left uncovered");
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

struct TamariBudget {
    std::size_t max_elements = 10'000'000;
    double max_seconds = 0;
};

// S(n,d) as the exact covers of binom([n-1],d) by snug rectangles.
inline std::vector<Triangulation> enumerate_tamari(int n, int d, const TamariBudget& budget = {}) {
    if (d < 1 || n < d + 1) throw input_error("enumerate_tamari: need n >= d+1 >= 2");
    SubsetIndex cols(k_subsets(n - 1, d));
    std::vector<LabelSet> gens = k_subsets(n, d + 1);
    ExactCover ec(cols.size());
    for (LabelSet a : gens) {
        std::vector<int> c;
        for (LabelSet m : snug_rectangle(a).members) c.push_back(cols.at(m));
        ec.add_row(c);
    }
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Triangulation> out;
    ec.solve([&](const std::vector<int>& rows) {
        Triangulation t{LabelSet::range(1, n), d, {}};
        for (int r : rows) t.simplices.push_back(gens[r]);
        std::sort(t.simplices.begin(), t.simplices.end());
        out.push_back(std::move(t));
        if (out.size() > budget.max_elements)
            throw resource_error("enumerate_tamari: element budget exceeded", out.size());
        if (budget.max_seconds > 0 && (out.size() & 1023) == 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > budget.max_seconds)
            throw resource_error("enumerate_tamari: time budget exceeded", out.size());
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ---- covers ---------------------------------------------------------------

namespace detail {

inline std::vector<Triangulation> flips(const Triangulation& t, bool up) {
    std::vector<Triangulation> out;
    for (LabelSet b : k_subsets(t.ground, t.d + 2)) {
        auto from = up ? lower_facets_simplex(b) : upper_facets_simplex(b);
        if (!std::all_of(from.begin(), from.end(), [&](LabelSet f) { return t.contains(f); })) continue;
        auto to = up ? upper_facets_simplex(b) : lower_facets_simplex(b);
        Triangulation s{t.ground, t.d, {}};
        for (LabelSet a : t.simplices)
            if (!std::binary_search(from.begin(), from.end(), a)) s.simplices.push_back(a);
        s.simplices.insert(s.simplices.end(), to.begin(), to.end());
        std::sort(s.simplices.begin(), s.simplices.end());
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace detail

// Increasing flips: the lower facets of some (d+1)-simplex B are in S and are
// replaced by its upper facets.
inline std::vector<Triangulation> covers_up(const Triangulation& t) { return detail::flips(t, true); }
inline std::vector<Triangulation> covers_down(const Triangulation& t) { return detail::flips(t, false); }

// The simplex B with T = S with lower(B) replaced by upper(B).
inline LabelSet flip_simplex(const Triangulation& lower, const Triangulation& upper) {
    LabelSet u;
    for (LabelSet a : lower.simplices)
        if (!upper.contains(a)) u = u | a;
    for (LabelSet a : upper.simplices)
        if (!lower.contains(a)) u = u | a;
    return u;
}

// Closure of the bottom element under increasing flips.
inline std::vector<Triangulation> enumerate_tamari_flips(LabelSet ground, int d, const TamariBudget& budget = {}) {
    Triangulation b = tamari_bottom(ground, d);
    std::set<Triangulation> seen{b};
    std::vector<Triangulation> frontier{b};
    while (!frontier.empty()) {
        std::vector<Triangulation> next;
        for (const auto& s : frontier)
            for (auto& t : covers_up(s))
                if (seen.insert(t).second) {
                    next.push_back(t);
                    if (seen.size() > budget.max_elements)
                        throw resource_error("flip enumeration: element budget exceeded", seen.size());
                }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// S on an arbitrary ground: enumerate on [1..m] and relabel.
inline std::vector<Triangulation> enumerate_tamari(LabelSet ground, int d, const TamariBudget& budget = {}) {
    auto base = enumerate_tamari(ground.size(), d, budget);
    std::vector<Triangulation> out;
    for (auto& t : base) out.push_back(relabel(t, ground));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- ascending orders -----------------------------------------------------

// Edges A -> B between simplices sharing a facet F when B's apex is above F.
struct AscendingDag {
    std::vector<LabelSet> nodes;
    std::vector<std::vector<int>> succ;
};

inline AscendingDag ascending_dag(const Triangulation& t) {
    AscendingDag g{t.simplices, std::vector<std::vector<int>>(t.simplices.size())};
    std::map<LabelSet, std::vector<int>> by_facet;
    for (std::size_t i = 0; i < t.simplices.size(); ++i)
        for (int v : t.simplices[i].elements()) by_facet[t.simplices[i].without(v)].push_back(static_cast<int>(i));
    for (const auto& [f, ids] : by_facet) {
        if (ids.size() != 2) continue;
        int a = ids[0], b = ids[1];
        int apex_a = (t.simplices[a] - f).min(), apex_b = (t.simplices[b] - f).min();
        bool up_a = is_above(apex_a, f), up_b = is_above(apex_b, f);
        if (up_a == up_b) throw internal_error("ascending_dag: simplices on the same side of a shared facet");
        if (up_b) g.succ[a].push_back(b);
        else g.succ[b].push_back(a);
    }
    return g;
}

// Visit ascending orders until the callback returns false or `limit` have
// been produced. Returns the number visited.
inline std::size_t for_each_ascending_order(const Triangulation& t,
                                            const std::function<bool(const std::vector<LabelSet>&)>& visit,
                                            std::size_t limit = static_cast<std::size_t>(-1)) {
    AscendingDag g = ascending_dag(t);
    int m = static_cast<int>(g.nodes.size());
    std::vector<int> indeg(m, 0);
    for (auto& s : g.succ)
        for (int b : s) ++indeg[b];
    {
        // acyclicity check
        std::vector<int> deg = indeg, q;
        for (int i = 0; i < m; ++i)
            if (deg[i] == 0) q.push_back(i);
        int seen = 0;
        while (!q.empty()) {
            int a = q.back();
            q.pop_back();
            ++seen;
            for (int b : g.succ[a])
                if (--deg[b] == 0) q.push_back(b);
        }
        if (seen != m) throw internal_error("ascending order graph has a cycle");
    }
    std::vector<LabelSet> seq;
    std::vector<bool> used(m, false);
    std::size_t count = 0;
    bool go_on = true;
    auto rec = [&](auto&& self) -> void {
        if (!go_on) return;
        if (static_cast<int>(seq.size()) == m) {
            ++count;
            go_on = visit(seq) && count < limit;
            return;
        }
        for (int i = 0; i < m && go_on; ++i) {
            if (used[i] || indeg[i] != 0) continue;
            used[i] = true;
            seq.push_back(g.nodes[i]);
            for (int b : g.succ[i]) --indeg[b];
            self(self);
            for (int b : g.succ[i]) ++indeg[b];
            seq.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    return count;
}

inline std::vector<std::vector<LabelSet>> ascending_orders(const Triangulation& t,
                                                           std::size_t limit = static_cast<std::size_t>(-1)) {
    std::vector<std::vector<LabelSet>> out;
    for_each_ascending_order(
        t,
        [&](const std::vector<LabelSet>& o) {
            out.push_back(o);
            return true;
        },
        limit);
    return out;
}

inline std::vector<LabelSet> first_ascending_order(const Triangulation& t) {
    auto v = ascending_orders(t, 1);
    if (v.empty()) throw internal_error("no ascending order");
    return v.front();
}

// ---- collapses, links, extension ------------------------------------------

// c_I: send each label a to the least element of I u {top} that is >= a and
// drop simplices that degenerate.
inline Triangulation collapse(const Triangulation& t, LabelSet i) {
    int top = t.ground.max();
    if (!i.subset_of(t.ground) || i.contains(top)) throw input_error("collapse: I must lie in the ground minus its top");
    LabelSet target = i.with(top);
    auto tv = target.elements();
    auto m = [&](int a) { return *std::lower_bound(tv.begin(), tv.end(), a); };
    Triangulation out{target, t.d, {}};
    for (LabelSet a : t.simplices) {
        LabelSet b;
        for (int v : a.elements()) b.insert(m(v));
        if (b.size() == a.size()) out.simplices.push_back(b);
    }
    std::sort(out.simplices.begin(), out.simplices.end());
    out.simplices.erase(std::unique(out.simplices.begin(), out.simplices.end()), out.simplices.end());
    return out;
}

// lk_at(S) = { A \ at : at subset of A in S }.
inline Triangulation link(const Triangulation& t, LabelSet at) {
    if (!at.subset_of(t.ground)) throw input_error("link: labels not in ground set");
    Triangulation out{t.ground - at, t.d - at.size(), {}};
    for (LabelSet a : t.simplices)
        if (at.subset_of(a)) out.simplices.push_back(a - at);
    std::sort(out.simplices.begin(), out.simplices.end());
    return out;
}

// The extension of S in S([1..n], d) to S([0..n], d+1).
inline Triangulation extension(const Triangulation& t) {
    int n = t.ground.size();
    if (t.ground != LabelSet::range(1, n)) throw input_error("extension: ground must be [1..n]");
    Triangulation out{LabelSet::range(0, n), t.d + 1, {}};
    for (LabelSet a : t.simplices) {
        out.simplices.push_back(a.with(0));
        int a1 = a.at(1), a2 = a.size() > 1 ? a.at(2) : a1;
        LabelSet tail = a.without(a1);
        for (int x = a1; x <= a2 - 2; ++x) out.simplices.push_back(tail.with(x).with(x + 1));
    }
    std::sort(out.simplices.begin(), out.simplices.end());
    return out;
}

}  // namespace hbt
