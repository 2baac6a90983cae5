#pragma once

// Exhaustive small-scale checks grouped into suites, shared by the CLI's
// `verify` command and the acceptance binary.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cube.hpp"
#include "json_io.hpp"
#include "maps.hpp"
#include "poset.hpp"

namespace hbt {

struct VerifyLimits {
    int max_n = 5;
    int max_d = 3;
    std::uint64_t seed = 1;
    EnumBudget budget{};
};

struct SuiteReport {
    SuiteReport() = default;
    explicit SuiteReport(std::string name) : id(std::move(name)) {}

    std::string id;
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::vector<std::string> witnesses;  // first few failures

    bool ok() const { return failed == 0; }

    void check(bool cond, const std::function<std::string()>& witness) {
        ++checks;
        if (cond) return;
        ++failed;
        if (witnesses.size() < 5) witnesses.push_back(witness());
    }
};

namespace detail {

inline TamariBudget tamari_budget(const VerifyLimits& lim) {
    return {lim.budget.max_elements, lim.budget.max_seconds};
}

inline std::string nd(int n, int d) { return "(" + std::to_string(n) + "," + std::to_string(d) + ")"; }

// B(n,d) for 1 <= d < n <= max_n, d <= max_d.
template <class Fn>
void for_bruhat_sizes(const VerifyLimits& lim, Fn fn) {
    for (int n = 2; n <= lim.max_n; ++n)
        for (int d = 1; d < n && d <= lim.max_d; ++d) fn(n, d);
}

// S(n,d) for 1 <= d, d+2 <= n <= max_n, d <= max_d.
template <class Fn>
void for_tamari_sizes(const VerifyLimits& lim, Fn fn) {
    for (int n = 3; n <= lim.max_n; ++n)
        for (int d = 1; d + 2 <= n && d <= lim.max_d; ++d) fn(n, d);
}

inline bool has(const std::vector<Triangulation>& v, const Triangulation& t) {
    return std::find(v.begin(), v.end(), t) != v.end();
}

inline bool includes(const std::vector<LabelSet>& big, const std::vector<LabelSet>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace detail

// Tiling of the zonotope and cover pairs as single-cube flips.
inline SuiteReport verify_tiling_suite(const VerifyLimits& lim) {
    SuiteReport r{"thm2.1"};
    detail::for_bruhat_sizes(lim, [&](int n, int d) {
        auto t = vandermonde_map(n, d);
        for (auto& e : enumerate_bruhat(n, d, lim.budget)) {
            auto rep = verify_tiling(face_complex(e), t);
            r.check(rep.ok, [&] {
                return "tiling " + detail::nd(n, d) + " " + element_key(e) + ": " +
                       (rep.violations.empty() ? "" : rep.violations.front());
            });
            std::set<CubeFace> a;
            for (auto& [x, f] : face_complex(e).faces) a.insert(f);
            for (auto& c : covers_up(e)) {
                LabelSet y;
                for (auto s : c.inversions)
                    if (!e.contains(s)) y = s;
                std::set<CubeFace> b;
                for (auto& [x, f] : face_complex(c).faces) b.insert(f);
                std::vector<CubeFace> gone, came;
                std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(gone));
                std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(came));
                bool ok = !gone.empty();
                if (ok) {
                    CubeFace g = gone.front();
                    for (int i : y.elements()) g.signs[i - 1] = 0;
                    ok = g.stars() == y && gone == lower_facets(g) && came == upper_facets(g);
                }
                r.check(ok, [&] { return "cover faces " + element_key(e) + " -> " + element_key(c); });
            }
        }
    });
    return r;
}

// The three definitions of f agree, and f is order-preserving.
inline SuiteReport verify_f_suite(const VerifyLimits& lim) {
    SuiteReport r{"thm4.x"};
    detail::for_bruhat_sizes(lim, [&](int n, int d) {
        for (auto& e : enumerate_bruhat(n, d, lim.budget)) {
            auto s = f_def2(e);
            r.check(is_triangulation(s), [&] { return "f_def2 not a triangulation: " + element_key(e); });
            r.check(f_def1(e) == s, [&] { return "f_def1 != f_def2 at " + element_key(e); });
            r.check(f_def3(e) == s, [&] { return "f_def3 != f_def2 at " + element_key(e); });
            for (auto& c : covers_up(e)) {
                auto t = f_def2(c);
                r.check(t == s || detail::has(covers_up(s), t),
                        [&] { return "f not order-preserving on " + element_key(e) + " -> " + element_key(c); });
            }
        }
    });
    return r;
}

// B(n,1): counts, f through binary trees, fibers as intervals.
inline SuiteReport verify_dim_one_suite(const VerifyLimits& lim) {
    SuiteReport r{"prop5.x"};
    for (int n = 1; n <= lim.max_n; ++n) {
        auto all = enumerate_bruhat(n, 1, lim.budget);
        std::size_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        r.check(all.size() == fact, [&] { return "|B(" + std::to_string(n) + ",1)| = " + std::to_string(all.size()); });
        std::map<Triangulation, std::set<std::vector<int>>> fib;
        for (auto& p : detail::all_perms(n)) {
            auto e = permutation_to_bruhat(p);
            auto s = f_map(e);
            r.check(s == tree_to_triangulation(psi(inverse_permutation(p))),
                    [&] { return "f != theta^-1 psi at " + element_key(e); });
            fib[s].insert(p);
        }
        for (auto& [s, words] : fib) {
            std::set<std::vector<int>> asc;
            for (auto& o : ascending_orders(s)) asc.insert(middle_vertex_word(o));
            r.check(asc == words, [&] { return "fiber != ascending orders over " + element_key(s); });
            auto [mn, mx] = min_max_fiber(s);
            auto lo = permutation_to_bruhat(mn).inversions, hi = permutation_to_bruhat(mx).inversions;
            std::set<std::vector<int>> interval;
            for (auto& e : all)
                if (detail::includes(e.inversions, lo) && detail::includes(hi, e.inversions))
                    interval.insert(bruhat_to_permutation(e));
            r.check(interval == words, [&] { return "fiber != [Min,Max] over " + element_key(s); });
        }
    }
    return r;
}

// The golden B(6,2) example, and f onto S([0,n+1],d+1) for d = 1, 2.
inline SuiteReport verify_surjectivity_suite(const VerifyLimits& lim) {
    SuiteReport r{"prop6.1"};
    for (int n = 1; n <= lim.max_n; ++n)
        for (int dd : {2, 3}) {
            if (n + 2 < dd + 1) continue;
            for (auto& s : enumerate_tamari(LabelSet::range(0, n + 1), dd, detail::tamari_budget(lim))) {
                BruhatElement w;
                bool ok = true;
                try {
                    w = surjectivity_witness(s);
                } catch (const std::exception&) {
                    ok = false;
                }
                r.check(ok && f_map(w) == s, [&] { return "no witness for " + element_key(s); });
            }
        }
    return r;
}

// Links of f(e) inside the cube: vertex figure at (1,..,1) and prefix images.
inline SuiteReport verify_links_suite(const VerifyLimits& lim) {
    SuiteReport r{"prop7.x"};
    detail::for_bruhat_sizes(lim, [&](int n, int d) {
        for (auto& e : enumerate_bruhat(n, d, lim.budget)) {
            auto s = f_map(e);
            r.check(vertex_figure_ones(e) == link(s, {0, n + 1}).simplices,
                    [&] { return "vertex figure != lk_{0,n+1} at " + element_key(e); });
            std::vector<LabelSet> images;
            for (LabelSet x : prefix_min_faces(e)) images.push_back(prefix_min_image(face_of(e, x)));
            std::sort(images.begin(), images.end());
            r.check(images == link(s, {0}).simplices, [&] { return "W(K) != lk_0 at " + element_key(e); });
        }
    });
    return r;
}

// Snug partitions: bijection, two enumerations agree, collapses stay valid.
inline SuiteReport verify_snug_suite(const VerifyLimits& lim) {
    SuiteReport r{"thm8.1"};
    detail::for_tamari_sizes(lim, [&](int n, int d) {
        auto a = enumerate_tamari(n, d, detail::tamari_budget(lim));
        auto b = enumerate_tamari_flips(LabelSet::range(1, n), d, detail::tamari_budget(lim));
        r.check(a == b, [&] { return "exact cover != flip closure for S" + detail::nd(n, d); });
        std::set<std::vector<LabelSet>> parts;
        for (auto& t : a) {
            auto p = triangulation_to_snug(t);
            std::vector<LabelSet> key;
            for (auto& rect : p) key.push_back(rect.generator);
            std::sort(key.begin(), key.end());
            parts.insert(key);
            r.check(snug_to_triangulation(p, n, d) == t, [&] { return "snug roundtrip fails at " + element_key(t); });
            for (int k = d; k <= n - 1; ++k)
                for (LabelSet i : k_subsets(n - 1, k)) {
                    auto c = collapse(t, i);
                    r.check(is_triangulation(c), [&] { return "collapse by " + i.str() + " of " + element_key(t); });
                }
        }
        r.check(parts.size() == a.size(), [&] { return "snug map not injective on S" + detail::nd(n, d); });
    });
    return r;
}

// g(S) is consistent; the image of g is the superconsistent elements; the
// small cases S(d+2,d), S(d+3,d).
inline SuiteReport verify_image_suite(const VerifyLimits& lim) {
    SuiteReport r{"thm9.1"};
    detail::for_tamari_sizes(lim, [&](int n, int d) {
        std::set<BruhatElement> image;
        for (auto& s : enumerate_tamari(n, d, detail::tamari_budget(lim))) {
            auto e = g_map(s);
            r.check(is_consistent(e.inversions, n - 1, d), [&] { return "I(S) inconsistent: " + element_key(s); });
            image.insert(e);
        }
        std::set<BruhatElement> super;
        for (auto& e : enumerate_bruhat(n - 1, d, lim.budget))
            if (is_superconsistent(e.inversions, n - 1, d)) super.insert(e);
        r.check(image == super, [&] { return "image of g != superconsistent in B" + detail::nd(n - 1, d); });
    });
    for (int d = 1; d <= lim.max_d; ++d) {
        r.check(enumerate_tamari(d + 2, d).size() == 2, [&] { return "|S(d+2,d)| != 2 at d=" + std::to_string(d); });
        int n = d + 3;
        auto all = enumerate_tamari(n, d);
        r.check(all.size() == static_cast<std::size_t>(d + 3), [&] { return "|S(d+3,d)| != d+3 at d=" + std::to_string(d); });
        for (int i = 1; i <= d + 1; ++i) {
            LabelSet a = LabelSet::range(1, n).without(i).without(i + 2);
            std::vector<Triangulation> si;
            for (auto& t : all)
                if (t.contains(a)) si.push_back(t);
            std::vector<LabelSet> want;
            LabelSet full = LabelSet::range(1, d + 2);
            if ((d - i) % 2 == 0) {
                for (int k = 1; k <= i; ++k) want.push_back(full.without(k));
            } else {
                for (int k = i + 1; k <= d + 2; ++k) want.push_back(full.without(k));
            }
            std::sort(want.begin(), want.end());
            r.check(si.size() == 1 && g_map(si[0]).inversions == want,
                    [&] { return "I(S_i) formula fails at d=" + std::to_string(d) + " i=" + std::to_string(i); });
        }
        // two branches from 0^ to 1^, split by the parity of d - i
        auto h = tamari_hasse(all);
        auto name = [&](int idx) {
            const auto& t = all[idx];
            if (t == tamari_bottom(n, d)) return 0;
            if (t == tamari_top(n, d)) return n + 1;
            for (int i = 1; i <= d + 1; ++i)
                if (t.contains(LabelSet::range(1, n).without(i).without(i + 2))) return i;
            return -1;
        };
        std::set<std::pair<int, int>> edges, want;
        for (auto [x, y] : h.edges()) edges.insert({name(x), name(y)});
        std::vector<int> even, odd;
        for (int i = 1; i <= d + 1; ++i) ((d - i) % 2 == 0 ? even : odd).push_back(i);
        std::reverse(odd.begin(), odd.end());
        for (auto* chain : {&even, &odd}) {
            int prev = 0;
            for (int i : *chain) {
                want.insert({prev, i});
                prev = i;
            }
            want.insert({prev, n + 1});
        }
        r.check(edges == want, [&] { return "Hasse shape of S(d+3,d) wrong at d=" + std::to_string(d); });
    }
    return r;
}

// g is order-preserving; each cover adds the snug rectangle of the flip.
inline SuiteReport verify_g_order_suite(const VerifyLimits& lim) {
    SuiteReport r{"thm10.1"};
    detail::for_tamari_sizes(lim, [&](int n, int d) {
        auto all = enumerate_tamari(n, d, detail::tamari_budget(lim));
        for (auto& s : all) {
            auto gs = g_map(s);
            for (auto& t : covers_up(s)) {
                auto gt = g_map(t);
                std::vector<LabelSet> diff;
                std::set_difference(gt.inversions.begin(), gt.inversions.end(), gs.inversions.begin(),
                                    gs.inversions.end(), std::back_inserter(diff));
                bool ok = detail::includes(gt.inversions, gs.inversions) &&
                          diff == snug_rectangle(flip_simplex(s, t)).members;
                r.check(ok, [&] { return "g cover " + element_key(s) + " -> " + element_key(t); });
            }
        }
        r.check(g_map(tamari_bottom(n, d)) == bruhat_bottom(n - 1, d), [&] { return "g(0^) != 0^ in S" + detail::nd(n, d); });
        r.check(g_map(tamari_top(n, d)) == bruhat_top(n - 1, d), [&] { return "g(1^) != 1^ in S" + detail::nd(n, d); });
    });
    return r;
}

// g is a poset embedding with inverse g_inverse; f(g(S)) is the extension.
inline SuiteReport verify_embedding_suite(const VerifyLimits& lim) {
    SuiteReport r{"thm11.1"};
    detail::for_tamari_sizes(lim, [&](int n, int d) {
        auto all = enumerate_tamari(n, d, detail::tamari_budget(lim));
        auto h = tamari_hasse(all);
        std::vector<BruhatElement> img;
        for (auto& s : all) img.push_back(g_map(s));
        for (int i = 0; i < h.size(); ++i)
            for (int j = 0; j < h.size(); ++j) {
                bool below = detail::includes(img[j].inversions, img[i].inversions);
                r.check(below == h.leq(i, j),
                        [&] { return "embedding fails on " + element_key(all[i]) + " , " + element_key(all[j]); });
            }
        for (std::size_t i = 0; i < all.size(); ++i) {
            auto back = g_inverse(img[i]);
            r.check(back && *back == all[i], [&] { return "g_inverse(g(S)) != S at " + element_key(all[i]); });
            auto ext = extension(all[i]);
            r.check(f_map(img[i]) == ext, [&] { return "f(g(S)) != ext(S) at " + element_key(all[i]); });
            r.check(link(ext, {0}) == all[i], [&] { return "lk_0(ext(S)) != S at " + element_key(all[i]); });
        }
        for (auto& e : enumerate_bruhat(n - 1, d, lim.budget)) {
            auto s = g_inverse(e);
            bool super = is_superconsistent(e.inversions, n - 1, d);
            r.check(s.has_value() == super && (!s || g_map(*s) == e),
                    [&] { return "g_inverse wrong on " + element_key(e); });
        }
    });
    return r;
}

// Ascending orders of the extremes, and two alternative routes to g. The
// routes are also run on a few seeded random ascending orders.
inline SuiteReport verify_routes_suite(const VerifyLimits& lim) {
    SuiteReport r{"prop12.x"};
    std::mt19937_64 rng(lim.seed);
    for (int d = 1; d <= lim.max_d; ++d) {
        LabelSet g = LabelSet::range(1, d + 2);
        auto lo = ascending_orders(tamari_bottom(g, d));
        auto hi = ascending_orders(tamari_top(g, d));
        std::vector<int> lo_want, hi_want;
        for (int v = d + 2; v >= 1; v -= 2) lo_want.push_back(v);
        for (int v = (d + 1) % 2 == 0 ? 2 : 1; v <= d + 1; v += 2) hi_want.push_back(v);
        auto omitted = [&](const std::vector<LabelSet>& o) {
            std::vector<int> out;
            for (auto a : o) out.push_back((g - a).min());
            return out;
        };
        r.check(lo.size() == 1 && omitted(lo[0]) == lo_want, [&] { return "ascending order of 0^ at d=" + std::to_string(d); });
        r.check(hi.size() == 1 && omitted(hi[0]) == hi_want, [&] { return "ascending order of 1^ at d=" + std::to_string(d); });
    }
    detail::for_tamari_sizes(lim, [&](int n, int d) {
        for (auto& s : enumerate_tamari(n, d, detail::tamari_budget(lim))) {
            auto want = g_map(s);
            r.check(g_via_ascending(s) == want, [&] { return "ascending route != g at " + element_key(s); });
            if (d >= 2) r.check(g_via_chain(s) == want, [&] { return "chain route != g at " + element_key(s); });
            auto orders = ascending_orders(s, 64);
            for (int k = 0; k < 2; ++k) {
                const auto& o = orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
                r.check(g_via_ascending(s, o) == want, [&] { return "ascending route depends on the order at " + element_key(s); });
                if (d >= 2) r.check(g_via_chain(s, o) == want, [&] { return "chain route depends on the order at " + element_key(s); });
            }
        }
    });
    return r;
}

using SuiteFn = SuiteReport (*)(const VerifyLimits&);

// Sorted by suite id.
inline const std::vector<std::pair<std::string, SuiteFn>>& verify_suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s = {
        {"prop12.x", verify_routes_suite}, {"prop5.x", verify_dim_one_suite}, {"prop6.1", verify_surjectivity_suite},
        {"prop7.x", verify_links_suite},   {"thm10.1", verify_g_order_suite}, {"thm11.1", verify_embedding_suite},
        {"thm2.1", verify_tiling_suite},   {"thm4.x", verify_f_suite},        {"thm8.1", verify_snug_suite},
        {"thm9.1", verify_image_suite},
    };
    return s;
}

// `all` or one suite id; throws input_error for an unknown id.
inline std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyLimits& lim) {
    std::vector<SuiteReport> out;
    for (auto& [id, fn] : verify_suites())
        if (suite == "all" || suite == id) out.push_back(fn(lim));
    if (out.empty()) throw input_error("unknown suite: " + suite);
    return out;
}

}  // namespace hbt
