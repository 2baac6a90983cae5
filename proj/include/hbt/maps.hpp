#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bruhat.hpp"
#include "cube.hpp"
#include "cyclic.hpp"
#include "tree.hpp"

namespace hbt {

// ---- f : B(n,d) -> S([0,n+1], d+1) ----------------------------------------

namespace detail {

// d = 0: the path through the vertices of [0,n+1] not in e.
inline Triangulation vertex_path(const BruhatElement& e) {
    LabelSet removed;
    for (LabelSet s : e.inversions) removed = removed | s;
    auto v = (LabelSet::range(0, e.n + 1) - removed).elements();
    Triangulation t{LabelSet::range(0, e.n + 1), 1, {}};
    for (std::size_t i = 0; i + 1 < v.size(); ++i) t.simplices.push_back(LabelSet{v[i], v[i + 1]});
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

inline std::vector<LabelSet> set_minus(const std::vector<LabelSet>& a, const std::vector<LabelSet>& b) {
    std::vector<LabelSet> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

// Closed form: one simplex {x, X, z} per d-set X whose face has no -1
// strictly inside the span of X.
inline Triangulation f_def2(const BruhatElement& e) {
    if (e.d == 0) return detail::vertex_path(e);
    Triangulation t{LabelSet::range(0, e.n + 1), e.d + 1, {}};
    for (LabelSet x : k_subsets(e.n, e.d)) {
        CubeFace f = face_of(e, x);
        int a1 = x.min(), ad = x.max();
        bool inner_ok = true;
        for (int y = a1 + 1; y < ad && inner_ok; ++y)
            if (!x.contains(y) && f.at(y) == -1) inner_ok = false;
        if (!inner_ok) continue;
        int lo = 0, hi = e.n + 1;
        for (int y = a1 - 1; y >= 1; --y)
            if (f.at(y) == -1) {
                lo = y;
                break;
            }
        for (int y = ad + 1; y <= e.n; ++y)
            if (f.at(y) == -1) {
                hi = y;
                break;
            }
        t.simplices.push_back(x.with(lo).with(hi));
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

inline Triangulation f_map(const BruhatElement& e) { return f_def2(e); }

// Inductive form: walk a maximal chain of B(n,d-1) whose inversion order is
// an admissible order of e, and collect the simplices swept by each step.
inline Triangulation f_def1(const BruhatElement& e) {
    if (e.d == 0) return detail::vertex_path(e);
    AdmissibleOrder o = witness_order(e);
    BruhatElement prefix{e.n, e.d - 1, {}};
    Triangulation cur = f_def1(prefix);
    Triangulation out{LabelSet::range(0, e.n + 1), e.d + 1, {}};
    for (LabelSet y : o.sequence) {
        prefix.inversions.insert(std::upper_bound(prefix.inversions.begin(), prefix.inversions.end(), y), y);
        Triangulation nxt = f_def1(prefix);
        if (nxt != cur) {
            auto gone = detail::set_minus(cur.simplices, nxt.simplices);
            auto came = detail::set_minus(nxt.simplices, cur.simplices);
            LabelSet a;
            for (LabelSet s : gone) a = a | s;
            for (LabelSet s : came) a = a | s;
            if (a.size() != e.d + 2 || gone != lower_facets_simplex(a) || came != upper_facets_simplex(a))
                throw internal_error("f_def1: chain step is not an increasing flip");
            out.simplices.push_back(a);
        }
        cur = std::move(nxt);
    }
    std::sort(out.simplices.begin(), out.simplices.end());
    return out;
}

// Flip form along a given order of I(e) in which every prefix is consistent.
inline Triangulation f_def3(const BruhatElement& e, const std::vector<LabelSet>& order) {
    LabelSet ground = LabelSet::range(0, e.n + 1);
    Triangulation t = tamari_bottom(ground, e.d + 1);
    for (LabelSet x : order) {
        std::vector<LabelSet> cands;
        for (int lo = 0; lo < x.min(); ++lo)
            for (int hi = x.max() + 1; hi <= e.n + 1; ++hi) {
                LabelSet a = x.with(lo).with(hi);
                auto low = lower_facets_simplex(a);
                if (std::all_of(low.begin(), low.end(), [&](LabelSet f) { return t.contains(f); })) cands.push_back(a);
            }
        if (cands.size() > 1) throw internal_error("f_def3: more than one flip for " + x.str());
        if (cands.empty()) continue;
        auto low = lower_facets_simplex(cands[0]);
        auto up = upper_facets_simplex(cands[0]);
        Triangulation s{ground, e.d + 1, detail::set_minus(t.simplices, low)};
        s.simplices.insert(s.simplices.end(), up.begin(), up.end());
        std::sort(s.simplices.begin(), s.simplices.end());
        t = std::move(s);
    }
    return t;
}

inline Triangulation f_def3(const BruhatElement& e) {
    AdmissibleOrder o;
    try {
        o = admissible_order_through({e}, e.n, e.d);
    } catch (const construction_error& err) {
        throw internal_error(std::string("f_def3: ") + err.what());
    }
    std::vector<LabelSet> order(o.sequence.begin(), o.sequence.begin() + e.rank());
    return f_def3(e, order);
}

// ---- d = 1: permutations, trees, fibers -----------------------------------

inline std::vector<int> inverse_permutation(const std::vector<int>& w) {
    std::vector<int> inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) inv.at(w[i] - 1) = static_cast<int>(i) + 1;
    return inv;
}

// Split at the position of the maximum; recurse on the standardized halves.
inline PlanarBinaryTree psi(const std::vector<int>& perm) {
    if (perm.empty()) return {};
    auto it = std::max_element(perm.begin(), perm.end());
    std::vector<int> a(perm.begin(), it), b(it + 1, perm.end());
    return PlanarBinaryTree::node(psi(standardize(a)), psi(standardize(b)));
}

namespace detail {

inline int apex_over(const Triangulation& t, int lo, int hi) {
    for (LabelSet a : t.simplices)
        if (a.contains(lo) && a.contains(hi)) {
            int m = (a - LabelSet{lo, hi}).min();
            if (m > lo && m < hi) return m;
        }
    throw input_error("triangulation has no triangle over edge " + std::to_string(lo) + "-" + std::to_string(hi));
}

inline void check_polygon(const Triangulation& t) {
    int lo = t.ground.min(), hi = t.ground.max();
    if (t.d != 2 || t.ground != LabelSet::range(lo, hi)) throw input_error("expected a polygon triangulation");
}

}  // namespace detail

// Dual tree rooted at the triangle on the edge {min, max} of the ground.
inline PlanarBinaryTree triangulation_to_tree(const Triangulation& t) {
    detail::check_polygon(t);
    auto rec = [&](auto&& self, int lo, int hi) -> PlanarBinaryTree {
        if (hi - lo < 2) return {};
        int a = detail::apex_over(t, lo, hi);
        return PlanarBinaryTree::node(self(self, lo, a), self(self, a, hi));
    };
    return rec(rec, t.ground.min(), t.ground.max());
}

// Inverse of triangulation_to_tree on the ground [lo, lo + size + 1].
inline Triangulation tree_to_triangulation(const PlanarBinaryTree& tree, int lo = 0) {
    int hi = lo + tree.size() + 1;
    Triangulation t{LabelSet::range(lo, hi), 2, {}};
    auto rec = [&](auto&& self, const PlanarBinaryTree& s, int a, int b) -> void {
        if (s.empty()) return;
        PlanarBinaryTree l = s.left();
        int m = a + l.size() + 1;
        t.simplices.push_back(LabelSet{a, m, b});
        self(self, l, a, m);
        self(self, s.right(), m, b);
    };
    rec(rec, tree, lo, hi);
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

// Middle vertices of the triangles, read along an ascending order.
inline std::vector<int> middle_vertex_word(const std::vector<LabelSet>& order) {
    std::vector<int> w;
    for (LabelSet a : order) w.push_back(a.at(2));
    return w;
}

// Weak-order minimum and maximum of the fiber of a polygon triangulation.
inline std::pair<std::vector<int>, std::vector<int>> min_max_fiber(const Triangulation& t) {
    detail::check_polygon(t);
    auto rec = [&](auto&& self, int lo, int hi) -> std::pair<std::vector<int>, std::vector<int>> {
        if (hi - lo < 2) return {};
        int a = detail::apex_over(t, lo, hi);
        auto [ml, xl] = self(self, lo, a);
        auto [mr, xr] = self(self, a, hi);
        std::vector<int> mn = ml, mx = xr;
        mn.insert(mn.end(), mr.begin(), mr.end());
        mn.push_back(a);
        mx.insert(mx.end(), xl.begin(), xl.end());
        mx.push_back(a);
        return {mn, mx};
    };
    int lo = t.ground.min();
    auto [mn, mx] = rec(rec, lo, t.ground.max());
    for (auto* w : {&mn, &mx})
        for (int& v : *w) v -= lo;
    return {mn, mx};
}

// { e in B(n,d) : f(e) = S } by filtering the enumeration.
inline std::vector<BruhatElement> fiber_f(const Triangulation& s, int n, int d, const EnumBudget& budget = {}) {
    if (s.ground != LabelSet::range(0, n + 1) || s.d != d + 1)
        throw input_error("fiber_f: triangulation must lie in S([0,n+1], d+1)");
    std::vector<BruhatElement> out;
    for (auto& e : enumerate_bruhat(n, d, budget))
        if (f_def2(e) == s) out.push_back(e);
    return out;
}

// ---- surjectivity for d <= 2 ----------------------------------------------

inline BruhatElement surjectivity_witness(const Triangulation& s) {
    int n = s.ground.size() - 2;
    if (s.ground != LabelSet::range(0, n + 1)) throw input_error("surjectivity_witness: ground must be [0,n+1]");
    if (s.d == 2) return permutation_to_bruhat(min_max_fiber(s).first);
    if (s.d != 3) throw input_error("surjectivity_witness: only S([0,n+1],2) and S([0,n+1],3)");
    // Sweep the simplices in ascending order through S([0,n+1],2), take the
    // minimum of each fiber, and refine that chain in B(n,1).
    auto order = first_ascending_order(s);
    Triangulation t = tamari_bottom(s.ground, 2);
    std::vector<BruhatElement> chain{permutation_to_bruhat(min_max_fiber(t).first)};
    for (LabelSet a : order) {
        auto low = lower_facets_simplex(a);
        if (!std::all_of(low.begin(), low.end(), [&](LabelSet f) { return t.contains(f); }))
            throw internal_error("surjectivity_witness: ascending sweep left the poset");
        auto up = upper_facets_simplex(a);
        Triangulation u{t.ground, 2, detail::set_minus(t.simplices, low)};
        u.simplices.insert(u.simplices.end(), up.begin(), up.end());
        std::sort(u.simplices.begin(), u.simplices.end());
        t = std::move(u);
        chain.push_back(permutation_to_bruhat(min_max_fiber(t).first));
    }
    AdmissibleOrder o;
    try {
        o = admissible_order_through(chain, n, 1);
    } catch (const construction_error& err) {
        throw internal_error(std::string("surjectivity_witness: ") + err.what());
    }
    BruhatElement e = inversion_set(o);
    if (f_def2(e) != s) throw internal_error("surjectivity_witness: witness maps elsewhere");
    return e;
}

// ---- g : S(n,d) -> B(n-1,d) -----------------------------------------------

namespace detail {

inline int tamari_n(const Triangulation& s) {
    int n = s.ground.size();
    if (s.ground != LabelSet::range(1, n)) throw input_error("expected a triangulation on [1..n]");
    return n;
}

}  // namespace detail

// X is an inversion when collapsing onto X u {n} gives the top element.
inline BruhatElement g_map(const Triangulation& s) {
    int n = detail::tamari_n(s);
    BruhatElement e{n - 1, s.d, {}};
    for (LabelSet x : k_subsets(n - 1, s.d + 1))
        if (collapse(s, x) == tamari_top(x.with(n), s.d)) e.inversions.push_back(x);
    return e;
}

// Preimage under g, present exactly for superconsistent e.
inline std::optional<Triangulation> g_inverse(const BruhatElement& e) {
    int n = e.n + 1, d = e.d;
    if (d < 1) throw input_error("g_inverse: need d >= 1");
    if (!is_superconsistent(e.inversions, e.n, d)) return std::nullopt;
    Triangulation t{LabelSet::range(1, n), d, {}};
    LabelSet univ = LabelSet::range(1, n - 1);
    for (LabelSet x : k_subsets(n - 1, d)) {
        auto comp = (univ - x).elements();
        LabelSet drop;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            int c = comp[i];
            bool inverted = e.contains(x.with(c));
            bool even = (d + static_cast<int>(i) + 1 - c) % 2 == 0;
            drop.insert(inverted == even ? c : c + 1);
        }
        t.simplices.push_back(LabelSet::range(1, n) - drop);
    }
    std::sort(t.simplices.begin(), t.simplices.end());
    t.simplices.erase(std::unique(t.simplices.begin(), t.simplices.end()), t.simplices.end());
    if (!is_triangulation(t) || g_map(t) != e) throw internal_error("g_inverse: construction failed");
    return t;
}

// ---- rectangular orders ---------------------------------------------------

struct RectangularOrder {
    SnugRectangle rectangle;
    std::vector<LabelSet> sequence;
};

namespace detail {

// Pairs (x, y) meaning x must precede y.
inline std::vector<std::pair<int, int>> rectangular_constraints(const SnugRectangle& r) {
    std::vector<std::pair<int, int>> out;
    const auto& m = r.members;
    for (std::size_t a = 0; a < m.size(); ++a) {
        auto xa = m[a].elements();
        int len = static_cast<int>(xa.size());
        for (int i = 1; i <= len; ++i) {
            std::vector<int> y = xa;
            ++y[i - 1];
            LabelSet ys(y);
            if (ys.size() != len) continue;
            auto it = std::lower_bound(m.begin(), m.end(), ys);
            if (it == m.end() || *it != ys) continue;
            int b = static_cast<int>(it - m.begin());
            if ((len - i) % 2 == 0) out.push_back({b, static_cast<int>(a)});
            else out.push_back({static_cast<int>(a), b});
        }
    }
    return out;
}

}  // namespace detail

inline bool is_rectangular(const SnugRectangle& r, const std::vector<LabelSet>& seq) {
    if (seq.size() != r.members.size()) return false;
    std::map<LabelSet, int> pos;
    for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<int>(i);
    if (pos.size() != seq.size()) return false;
    for (LabelSet m : r.members)
        if (!pos.count(m)) return false;
    for (auto [a, b] : detail::rectangular_constraints(r))
        if (pos[r.members[a]] > pos[r.members[b]]) return false;
    return true;
}

inline std::size_t for_each_rectangular_order(const SnugRectangle& r,
                                              const std::function<bool(const std::vector<LabelSet>&)>& visit,
                                              std::size_t limit = static_cast<std::size_t>(-1)) {
    int m = static_cast<int>(r.members.size());
    std::vector<std::vector<int>> succ(m);
    std::vector<int> indeg(m, 0);
    for (auto [a, b] : detail::rectangular_constraints(r)) {
        succ[a].push_back(b);
        ++indeg[b];
    }
    std::vector<LabelSet> seq;
    std::vector<bool> used(m, false);
    std::size_t count = 0;
    bool go_on = true;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == m) {
            ++count;
            go_on = visit(seq) && count < limit;
            return;
        }
        for (int i = 0; i < m && go_on; ++i) {
            if (used[i] || indeg[i] != 0) continue;
            used[i] = true;
            seq.push_back(r.members[i]);
            for (int b : succ[i]) --indeg[b];
            self(self);
            for (int b : succ[i]) ++indeg[b];
            seq.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    return count;
}

inline std::vector<RectangularOrder> rectangular_orders(const SnugRectangle& r,
                                                        std::size_t limit = static_cast<std::size_t>(-1)) {
    std::vector<RectangularOrder> out;
    for_each_rectangular_order(
        r,
        [&](const std::vector<LabelSet>& s) {
            out.push_back({r, s});
            return true;
        },
        limit);
    return out;
}

inline std::vector<LabelSet> first_rectangular_order(const SnugRectangle& r) {
    std::vector<LabelSet> s;
    for_each_rectangular_order(
        r,
        [&](const std::vector<LabelSet>& x) {
            s = x;
            return false;
        },
        1);
    return s;
}

// g read off an ascending order: concatenate rectangular orders of the
// snug rectangles and take the inversion set of the resulting order.
using RectangleChooser = std::function<std::vector<LabelSet>(const SnugRectangle&)>;

inline BruhatElement g_via_ascending(const Triangulation& s, const std::vector<LabelSet>& ascending,
                                     const RectangleChooser& choose = first_rectangular_order) {
    int n = detail::tamari_n(s);
    AdmissibleOrder o{n - 1, s.d, {}};
    for (LabelSet a : ascending) {
        auto part = choose(snug_rectangle(a));
        o.sequence.insert(o.sequence.end(), part.begin(), part.end());
    }
    if (!is_admissible(o)) throw internal_error("g_via_ascending: concatenation is not admissible");
    return inversion_set(o);
}

inline BruhatElement g_via_ascending(const Triangulation& s) { return g_via_ascending(s, first_ascending_order(s)); }

// g from a maximal chain of B(n-1,d-1) refining the images of an ascending
// sweep through S(n,d-1). Undefined for d < 2.
inline BruhatElement g_via_chain(const Triangulation& s, const std::vector<LabelSet>& ascending) {
    int n = detail::tamari_n(s);
    if (s.d < 2) throw input_error("g_via_chain: defined only for d >= 2");
    Triangulation t = tamari_bottom(s.ground, s.d - 1);
    std::vector<BruhatElement> chain{g_map(t)};
    for (LabelSet a : ascending) {
        auto low = lower_facets_simplex(a);
        if (!std::all_of(low.begin(), low.end(), [&](LabelSet f) { return t.contains(f); }))
            throw internal_error("g_via_chain: ascending sweep left the poset");
        auto up = upper_facets_simplex(a);
        Triangulation u{t.ground, t.d, detail::set_minus(t.simplices, low)};
        u.simplices.insert(u.simplices.end(), up.begin(), up.end());
        std::sort(u.simplices.begin(), u.simplices.end());
        t = std::move(u);
        chain.push_back(g_map(t));
    }
    AdmissibleOrder o;
    try {
        o = admissible_order_through(chain, n - 1, s.d - 1);
    } catch (const construction_error& err) {
        throw internal_error(std::string("g_via_chain: ") + err.what());
    }
    return inversion_set(o);
}

inline BruhatElement g_via_chain(const Triangulation& s) { return g_via_chain(s, first_ascending_order(s)); }

}  // namespace hbt
