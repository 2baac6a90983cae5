#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bruhat.hpp"
#include "exact.hpp"

namespace hbt {

// A face of [-1,1]^n: each coordinate is -1, +1 or free (0 here, '*' in text).
struct CubeFace {
    std::vector<signed char> signs;  // index 0 is coordinate 1

    int n() const { return static_cast<int>(signs.size()); }
    int dim() const { return static_cast<int>(std::count(signs.begin(), signs.end(), 0)); }
    int at(int i) const { return signs[i - 1]; }
    LabelSet stars() const {
        LabelSet s;
        for (int i = 0; i < n(); ++i)
            if (signs[i] == 0) s.insert(i + 1);
        return s;
    }
    bool has(int value) const { return std::find(signs.begin(), signs.end(), value) != signs.end(); }

    std::string str() const {
        std::string s;
        for (auto v : signs) s += v < 0 ? '-' : (v > 0 ? '+' : '*');
        return s;
    }
    static CubeFace parse(const std::string& s) {
        CubeFace f;
        for (char c : s) {
            if (c == '-') f.signs.push_back(-1);
            else if (c == '+') f.signs.push_back(1);
            else if (c == '*') f.signs.push_back(0);
            else throw input_error("cube face: unexpected character in \"" + s + "\"");
        }
        return f;
    }

    friend bool operator==(const CubeFace&, const CubeFace&) = default;
    friend auto operator<=>(const CubeFace&, const CubeFace&) = default;
};

// K(e): one d-face per d-subset X, keyed by X.
struct FaceComplex {
    int n = 0;
    int d = 0;
    std::map<LabelSet, CubeFace> faces;
};

// Sign attached to a coordinate y outside X: (-1)^{#{a in X : a > y}}.
inline int p_sign(int y, LabelSet x) {
    if (x.contains(y)) throw input_error("p_sign: y lies in X");
    return x.count_above(y) % 2 == 0 ? 1 : -1;
}

inline CubeFace face_of(const BruhatElement& e, LabelSet x) {
    if (x.size() != e.d || (!x.empty() && (x.min() < 1 || x.max() > e.n)))
        throw input_error("face_of: X must be a d-subset of [n]");
    CubeFace f;
    f.signs.resize(e.n);
    for (int i = 1; i <= e.n; ++i) {
        if (x.contains(i)) continue;
        int xi = e.contains(x.with(i)) ? 1 : -1;
        f.signs[i - 1] = static_cast<signed char>(p_sign(i, x) * xi);
    }
    return f;
}

inline FaceComplex face_complex(const BruhatElement& e) {
    FaceComplex k{e.n, e.d, {}};
    for (LabelSet x : k_subsets(e.n, e.d)) k.faces.emplace(x, face_of(e, x));
    return k;
}

namespace detail {

inline std::vector<CubeFace> star_facets(const CubeFace& f, bool upper) {
    int k = f.dim();
    if (k == 0) throw input_error("facets of a vertex requested");
    std::vector<CubeFace> out;
    int i = 0;
    for (int c = 0; c < f.n(); ++c) {
        if (f.signs[c] != 0) continue;
        ++i;
        bool even = (k + i + (upper ? 0 : 1)) % 2 == 0;
        CubeFace g = f;
        g.signs[c] = even ? 1 : -1;
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Star i (counted from the left) fixed to (-1)^{k+i}, k the face dimension.
inline std::vector<CubeFace> upper_facets(const CubeFace& f) { return detail::star_facets(f, true); }
inline std::vector<CubeFace> lower_facets(const CubeFace& f) { return detail::star_facets(f, false); }

// A linear map R^n -> R^d with exact entries.
struct ExactLinearMap {
    int rows = 0;
    int cols = 0;
    RatMatrix entries;

    std::vector<Rational> column(int j) const {  // 1-indexed
        std::vector<Rational> c(rows);
        for (int i = 0; i < rows; ++i) c[i] = entries[i][j - 1];
        return c;
    }
};

inline ExactLinearMap vandermonde_map(int n, int d) {
    if (d < 1 || n < d) throw input_error("vandermonde_map: need n >= d >= 1");
    ExactLinearMap t{d, n, RatMatrix(d, std::vector<Rational>(n))};
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= n; ++j) {
            Integer v = 1;
            for (int k = 0; k < i; ++k) v *= j;
            t.entries[i - 1][j - 1] = Rational(v);
        }
    return t;
}

inline bool is_totally_positive(const ExactLinearMap& t) {
    for (int k = 1; k <= std::min(t.rows, t.cols); ++k)
        for (LabelSet rs : k_subsets(t.rows, k))
            for (LabelSet cs : k_subsets(t.cols, k)) {
                RatMatrix m;
                for (int r : rs.elements()) {
                    std::vector<Rational> row;
                    for (int c : cs.elements()) row.push_back(t.entries[r - 1][c - 1]);
                    m.push_back(std::move(row));
                }
                if (determinant(m) <= 0) return false;
            }
    return true;
}

struct TilingReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<CubeFace> free_subfaces;  // subfaces met by exactly one face
};

namespace detail {

// sign det[T e_k for k in `span` (increasing), v].
inline int orientation(const ExactLinearMap& t, LabelSet span, const std::vector<Rational>& v) {
    RatMatrix m(t.rows, std::vector<Rational>());
    for (int k : span.elements()) {
        auto c = t.column(k);
        for (int r = 0; r < t.rows; ++r) m[r].push_back(c[r]);
    }
    for (int r = 0; r < t.rows; ++r) m[r].push_back(v[r]);
    return sign_of(determinant(m));
}

}  // namespace detail

// Facet-matching check that the projected faces tile T([-1,1]^n), and that
// the unmatched subfaces are exactly K(0) and K(1) of B(n,d-1).
inline TilingReport verify_tiling(const FaceComplex& k, const ExactLinearMap& t) {
    if (k.d < 1) throw input_error("verify_tiling: need d >= 1");
    if (t.rows != k.d || t.cols != k.n) throw input_error("verify_tiling: map has the wrong shape");
    if (!is_totally_positive(t)) throw input_error("verify_tiling: map is not totally positive");
    TilingReport rep;
    auto fail = [&](std::string s) {
        rep.ok = false;
        rep.violations.push_back(std::move(s));
    };

    for (LabelSet x : k_subsets(k.n, k.d)) {
        auto it = k.faces.find(x);
        if (it == k.faces.end()) fail("missing face for X=" + x.str());
        else if (it->second.n() != k.n || it->second.stars() != x) fail("face for X=" + x.str() + " has wrong stars");
    }

    // subface -> list of (free direction j, sign it was fixed to)
    std::map<CubeFace, std::vector<std::pair<int, int>>> meets;
    for (const auto& [x, f] : k.faces) {
        if (f.dim() != k.d) continue;
        for (int j : x.elements())
            for (int s : {-1, 1}) {
                CubeFace g = f;
                g.signs[j - 1] = static_cast<signed char>(s);
                meets[g].push_back({j, s});
            }
    }
    for (const auto& [g, list] : meets) {
        LabelSet span = g.stars();
        if (list.size() == 1) {
            // Must be a boundary facet of the zonotope: every generator off the
            // hyperplane points back into the tile from the same side.
            int side = 0;
            bool boundary = true;
            for (int j = 1; j <= k.n && boundary; ++j) {
                if (span.contains(j)) continue;
                int o = detail::orientation(t, span, t.column(j)) * g.at(j);
                if (o == 0 || (side != 0 && o != side)) boundary = false;
                side = o;
            }
            if (!boundary) fail("dangling subface " + g.str());
            rep.free_subfaces.push_back(g);
        } else if (list.size() == 2) {
            int sides[2];
            for (int q = 0; q < 2; ++q) {
                auto [j, s] = list[q];
                auto v = t.column(j);
                for (auto& c : v) c *= -s;
                sides[q] = detail::orientation(t, span, v);
            }
            if (sides[0] == 0 || sides[0] == sides[1]) fail("faces overlap across subface " + g.str());
        } else {
            fail("subface " + g.str() + " shared by " + std::to_string(list.size()) + " faces");
        }
    }

    std::set<CubeFace> expect;
    for (const auto& e : {bruhat_bottom(k.n, k.d - 1), bruhat_top(k.n, k.d - 1)})
        for (const auto& [x, f] : face_complex(e).faces) expect.insert(f);
    std::set<CubeFace> got(rep.free_subfaces.begin(), rep.free_subfaces.end());
    if (got != expect) fail("free boundary differs from K(0) u K(1) in dimension d-1");
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

// { X : the face F_X contains the vertex (1,...,1) }.
inline std::vector<LabelSet> vertex_figure_ones(const BruhatElement& e) {
    std::vector<LabelSet> out;
    for (LabelSet x : k_subsets(e.n, e.d))
        if (!face_of(e, x).has(-1)) out.push_back(x);
    return out;
}

// W(a) = (a1, min(a1,a2), ..., min(a1..an)) applied to every vertex of f.
inline std::vector<std::vector<int>> prefix_min_vertices(const CubeFace& f) {
    std::vector<int> st;
    for (int i = 0; i < f.n(); ++i)
        if (f.signs[i] == 0) st.push_back(i);
    std::set<std::vector<int>> pts;
    for (std::uint32_t m = 0; m < (1u << st.size()); ++m) {
        std::vector<int> v(f.signs.begin(), f.signs.end());
        for (std::size_t q = 0; q < st.size(); ++q) v[st[q]] = (m >> q & 1u) ? 1 : -1;
        for (std::size_t i = 1; i < v.size(); ++i) v[i] = std::min(v[i], v[i - 1]);
        pts.insert(v);
    }
    return {pts.begin(), pts.end()};
}

inline bool prefix_min_preserves_dim(const CubeFace& f) {
    auto pts = prefix_min_vertices(f);
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> row;
        for (std::size_t c = 0; c < pts[i].size(); ++c) row.push_back(pts[i][c] - pts[0][c]);
        diffs.push_back(std::move(row));
    }
    int rank = diffs.empty() ? 0 : matrix_rank(diffs);
    return rank == f.dim();
}

// Image vertices of W labelled by their first -1 coordinate (n+1 if none).
inline LabelSet prefix_min_image(const CubeFace& f) {
    LabelSet labels;
    for (const auto& v : prefix_min_vertices(f)) {
        int lab = f.n() + 1;
        for (int i = 0; i < f.n(); ++i)
            if (v[i] == -1) {
                lab = i + 1;
                break;
            }
        labels.insert(lab);
    }
    return labels;
}

// { X : W keeps the dimension of F_X }.
inline std::vector<LabelSet> prefix_min_faces(const BruhatElement& e) {
    std::vector<LabelSet> out;
    for (LabelSet x : k_subsets(e.n, e.d))
        if (prefix_min_preserves_dim(face_of(e, x))) out.push_back(x);
    return out;
}

}  // namespace hbt
