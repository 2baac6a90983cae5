// Acceptance criteria 1-12. One PASS/FAIL line per criterion; exit status is
// nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hbt/hbt.hpp"
#include "moment_curve_oracle.hpp"

using namespace hbt;

namespace {

using Sets = std::vector<LabelSet>;

struct Outcome {
    bool ok = true;
    std::string note;
};

// Collects the first failure; later checks still run so timings are honest.
struct Check {
    Outcome out;
    void operator()(bool cond, const std::string& what) {
        if (!cond && out.ok) {
            out.ok = false;
            out.note = what;
        }
    }
};

bool includes(const Sets& big, const Sets& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Sets with(Sets a, const Sets& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

const Sets kGoldenI = parse_compact_sets("123,124,456,356");
const Sets kGoldenS = parse_compact_sets("0125,0156,0167,0234,0245,1256,1267,2345,2357,2567,3457");

Outcome golden() {
    Check c;
    auto e = make_bruhat(6, 2, kGoldenI);
    auto s = f_def2(e);
    c(s.ground == LabelSet::range(0, 7) && s.d == 3, "f(e) is not in S([0,7],3)");
    c(s.simplices == kGoldenS, "f(e) = " + compact_str(s.simplices));
    auto fib = fiber_f(s, 6, 2);
    std::set<Sets> got;
    for (auto& x : fib) got.insert(x.inversions);
    std::set<Sets> want{kGoldenI, with(kGoldenI, parse_compact_sets("134")), with(kGoldenI, parse_compact_sets("346"))};
    c(got == want, "fiber has " + std::to_string(got.size()) + " elements");
    int maximal = 0;
    bool has_max = false;
    for (auto& a : got) {
        bool dominated = false, all_below = true;
        for (auto& b : got) {
            if (a != b && includes(b, a)) dominated = true;
            if (!includes(a, b)) all_below = false;
        }
        maximal += !dominated;
        has_max = has_max || all_below;
    }
    c(maximal == 2, "fiber has " + std::to_string(maximal) + " maximal elements");
    c(!has_max, "fiber has a maximum");
    return c.out;
}

Outcome definitions_agree() {
    Check c;
    for (auto [n, d] : {std::pair{4, 1}, {5, 1}, {4, 2}, {5, 2}, {4, 3}})
        for (auto& e : enumerate_bruhat(n, d)) {
            auto s = f_def2(e);
            c(f_def1(e) == s, "f_def1 differs at " + element_key(e));
            c(f_def3(e) == s, "f_def3 differs at " + element_key(e));
        }
    return c.out;
}

Outcome dimension_one() {
    Check c;
    std::size_t fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        c(enumerate_bruhat(n, 1).size() == fact, "|B(" + std::to_string(n) + ",1)| != n!");
    }
    for (auto& e : enumerate_bruhat(5, 1)) {
        auto w = bruhat_to_permutation(e);
        c(f_map(e) == tree_to_triangulation(psi(inverse_permutation(w))), "f != theta^-1 psi at " + element_key(e));
    }
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_bruhat(n, 1);
        std::map<Triangulation, std::set<Sets>> fib;
        for (auto& e : all) fib[f_map(e)].insert(e.inversions);
        c(fib.size() == enumerate_tamari(LabelSet::range(0, n + 1), 2).size(), "f is not onto S([0,n+1],2)");
        for (auto& [s, members] : fib) {
            auto [mn, mx] = min_max_fiber(s);
            auto lo = permutation_to_bruhat(mn).inversions, hi = permutation_to_bruhat(mx).inversions;
            std::set<Sets> interval;
            for (auto& e : all)
                if (includes(e.inversions, lo) && includes(hi, e.inversions)) interval.insert(e.inversions);
            c(interval == members, "fiber over " + element_key(s) + " is not [Min,Max]");
        }
    }
    return c.out;
}

Outcome surjectivity() {
    Check c;
    // B(n,2) needs n >= 2
    for (int n = 2; n <= 5; ++n)
        for (auto& s : enumerate_tamari(LabelSet::range(0, n + 1), 3)) {
            bool ok = false;
            try {
                ok = f_map(surjectivity_witness(s)) == s;
            } catch (const std::exception&) {
            }
            c(ok, "no witness for " + element_key(s));
        }
    return c.out;
}

Outcome cube_model() {
    Check c;
    for (auto [n, d] : {std::pair{4, 2}, {5, 2}, {4, 1}, {5, 1}}) {
        auto t = vandermonde_map(n, d);
        std::set<CubeFace> boundary;
        for (const auto& e : {bruhat_bottom(n, d - 1), bruhat_top(n, d - 1)})
            for (const auto& [x, f] : face_complex(e).faces) boundary.insert(f);
        for (auto& e : enumerate_bruhat(n, d)) {
            auto rep = verify_tiling(face_complex(e), t);
            c(rep.ok, "tiling fails at " + element_key(e));
            c(std::set<CubeFace>(rep.free_subfaces.begin(), rep.free_subfaces.end()) == boundary,
              "free boundary differs at " + element_key(e));
            std::set<CubeFace> a;
            for (auto& [x, f] : face_complex(e).faces) a.insert(f);
            for (auto& up : covers_up(e)) {
                LabelSet y;
                for (auto s : up.inversions)
                    if (!e.contains(s)) y = s;
                std::set<CubeFace> b;
                for (auto& [x, f] : face_complex(up).faces) b.insert(f);
                std::vector<CubeFace> gone, came;
                std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(gone));
                std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(came));
                bool ok = !gone.empty();
                if (ok) {
                    CubeFace g = gone.front();
                    for (int i : y.elements()) g.signs[i - 1] = 0;
                    ok = g.stars() == y && gone == lower_facets(g) && came == upper_facets(g);
                }
                c(ok, "cover " + element_key(e) + " -> " + element_key(up) + " is not one cube flip");
            }
        }
    }
    return c.out;
}

// The image labels of a face under the literal max-prefix W: a tuple
// (-1,..,-1,1,..,1) with a-1 leading -1s is vertex a.
LabelSet max_prefix_labels(const CubeFace& f) {
    LabelSet st = f.stars();
    auto free = st.elements();
    LabelSet labels;
    for (std::uint32_t m = 0; m < (1u << free.size()); ++m) {
        std::vector<int> v(f.signs.begin(), f.signs.end());
        for (std::size_t q = 0; q < free.size(); ++q) v[free[q] - 1] = (m >> q & 1u) ? 1 : -1;
        for (std::size_t i = 1; i < v.size(); ++i) v[i] = std::max(v[i], v[i - 1]);
        int lab = f.n() + 1;
        for (int i = 0; i < f.n(); ++i)
            if (v[i] == 1) {
                lab = i + 1;
                break;
            }
        labels.insert(lab);
    }
    return labels;
}

Outcome links() {
    Check c;
    std::size_t literal = 0, total = 0;
    for (auto [n, d] : {std::pair{4, 1}, {5, 1}, {4, 2}})
        for (auto& e : enumerate_bruhat(n, d)) {
            auto s = f_map(e);
            c(vertex_figure_ones(e) == link(s, {0, n + 1}).simplices, "vertex figure differs at " + element_key(e));
            Sets images, literal_images;
            for (LabelSet x : prefix_min_faces(e)) images.push_back(prefix_min_image(face_of(e, x)));
            for (LabelSet x : k_subsets(n, d)) {
                auto lab = max_prefix_labels(face_of(e, x));
                if (lab.size() == d + 1) literal_images.push_back(lab);
            }
            std::sort(images.begin(), images.end());
            std::sort(literal_images.begin(), literal_images.end());
            c(images == link(s, {0}).simplices, "W(K) != lk_0 at " + element_key(e));
            literal += literal_images == link(s, {0}).simplices;
            ++total;
        }
    Outcome o = c.out;
    std::string lit = "W = -maxprefix(-x); literal maxprefix matches " + std::to_string(literal) + "/" +
                      std::to_string(total);
    o.note = o.note.empty() ? lit : o.note + "; " + lit;
    return o;
}

Outcome snug() {
    Check c;
    for (auto [n, d] : {std::pair{6, 2}, {7, 2}, {6, 3}}) {
        auto a = enumerate_tamari(n, d);
        c(a == enumerate_tamari_flips(LabelSet::range(1, n), d), "exact cover != flip BFS for S(" + std::to_string(n) + "," + std::to_string(d) + ")");
        std::set<Sets> seen;
        for (auto& t : a) {
            auto p = triangulation_to_snug(t);
            Sets cells;
            for (auto& r : p) cells.insert(cells.end(), r.members.begin(), r.members.end());
            std::sort(cells.begin(), cells.end());
            c(cells == k_subsets(n - 1, d), "snug rectangles do not partition binom([n-1],d) at " + element_key(t));
            c(snug_to_triangulation(p, n, d) == t, "snug roundtrip fails at " + element_key(t));
            Sets gens;
            for (auto& r : p) gens.push_back(r.generator);
            std::sort(gens.begin(), gens.end());
            seen.insert(gens);
        }
        c(seen.size() == a.size(), "snug map is not injective");
    }
    return c.out;
}

Outcome small_cyclic() {
    VerifyLimits lim;
    lim.max_n = 0;  // only the S(d+2,d), S(d+3,d) part of the suite
    lim.max_d = 5;
    auto rep = verify_image_suite(lim);
    Outcome o{rep.ok(), rep.witnesses.empty() ? "" : rep.witnesses.front()};
    return o;
}

Outcome g_suite() {
    Check c;
    for (auto [n, d] : {std::pair{5, 1}, {6, 2}, {6, 3}}) {
        auto all = enumerate_tamari(n, d);
        auto h = tamari_hasse(all);
        std::vector<BruhatElement> img;
        for (auto& s : all) img.push_back(g_map(s));
        c(std::set<BruhatElement>(img.begin(), img.end()).size() == all.size(), "g is not injective");
        for (int i = 0; i < h.size(); ++i)
            for (int j = 0; j < h.size(); ++j)
                c(h.leq(i, j) == includes(img[j].inversions, img[i].inversions), "g is not a poset embedding");
        c(g_map(tamari_bottom(n, d)) == bruhat_bottom(n - 1, d), "g(0) != 0");
        c(g_map(tamari_top(n, d)) == bruhat_top(n - 1, d), "g(1) != 1");
        std::set<BruhatElement> super;
        for (auto& e : enumerate_bruhat(n - 1, d)) {
            bool sc = is_superconsistent(e.inversions, n - 1, d);
            if (sc) super.insert(e);
            auto back = g_inverse(e);
            c(back.has_value() == sc, "g_inverse defined off the superconsistent set at " + element_key(e));
            if (back) c(g_map(*back) == e, "g(g_inverse(e)) != e at " + element_key(e));
        }
        c(super == std::set<BruhatElement>(img.begin(), img.end()), "image of g != superconsistent elements");
        for (std::size_t i = 0; i < all.size(); ++i) {
            auto back = g_inverse(img[i]);
            c(back && *back == all[i], "g_inverse(g(S)) != S at " + element_key(all[i]));
            c(g_via_ascending(all[i]) == img[i], "ascending route differs at " + element_key(all[i]));
            if (d >= 2) c(g_via_chain(all[i]) == img[i], "chain route differs at " + element_key(all[i]));
        }
    }
    return c.out;
}

Outcome extension_suite() {
    Check c;
    for (auto [n, d] : {std::pair{6, 2}, {5, 2}, {5, 1}})
        for (auto& s : enumerate_tamari(n, d)) {
            auto ext = extension(s);
            c(f_map(g_map(s)) == ext, "f(g(S)) != ext(S) at " + element_key(s));
            c(link(ext, {0}) == s, "lk_0(ext(S)) != S at " + element_key(s));
        }
    return c.out;
}

Outcome oracle_agreement() {
    Check c;
    const int n = 8;
    for (int d = 1; d <= 4; ++d) {
        for (LabelSet f : k_subsets(n, d))
            for (int j = 1; j <= n; ++j) {
                if (f.contains(j)) continue;
                c(is_above(j, f) == oracle::above(j, f), "is_above(" + std::to_string(j) + "," + f.str() + ")");
                for (int i = j + 1; i <= n; ++i)
                    if (!f.contains(i))
                        c(opposite_sides(i, j, f) == oracle::opposite(i, j, f),
                          "opposite_sides(" + std::to_string(i) + "," + std::to_string(j) + "," + f.str() + ")");
            }
        for (LabelSet b : k_subsets(n, d + 1)) {
            auto up = upper_facets_simplex(b), lo = lower_facets_simplex(b);
            for (int v : b.elements()) {
                bool is_up = std::binary_search(up.begin(), up.end(), b.without(v));
                bool is_lo = std::binary_search(lo.begin(), lo.end(), b.without(v));
                bool want = oracle::facet_is_upper(b, v);
                c(is_up == want && is_lo == !want, "facet of " + b.str() + " omitting " + std::to_string(v));
            }
        }
    }
    return c.out;
}

Outcome moebius_values() {
    Check c;
    auto ends = [](const HasseDiagram& h) { return std::pair{h.sources().front(), h.sinks().front()}; };
    auto b31 = bruhat_hasse(enumerate_bruhat(3, 1));
    auto [b0, b1] = ends(b31);
    c(moebius(b31, b0, b1) == 1, "mu(0,1) in B(3,1) = " + std::to_string(moebius(b31, b0, b1)));
    auto s52 = tamari_hasse(enumerate_tamari(5, 2));
    auto [s0, s1] = ends(s52);
    c(moebius(s52, s0, s1) == 1, "mu(0,1) in S(5,2) = " + std::to_string(moebius(s52, s0, s1)));
    auto h = bruhat_hasse(enumerate_bruhat(5, 2));
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> pick(0, h.size() - 1);
    int tested = 0;
    while (tested < 100) {
        int a = pick(rng), b = pick(rng);
        if (!h.leq(a, b)) continue;
        ++tested;
        long long left = 0, right = 0;
        for (int z : h.interval(a, b)) {
            left += moebius(h, a, z);
            right += moebius(h, z, b);
        }
        c(left == (a == b) && right == (a == b), "delta sum fails on [" + h.key(a) + ", " + h.key(b) + "]");
    }
    return c.out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: only the global limit applies
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const double total_limit = 15 * 60;
    std::vector<Criterion> all = {
        {1, "golden example: f, fiber, no maximum", 10, golden},
        {2, "f_def1 = f_def2 = f_def3", 60, definitions_agree},
        {3, "d=1: n!, theta^-1 psi, fibers are intervals", 0, dimension_one},
        {4, "f onto S([0,n+1],3) for n <= 5", 300, surjectivity},
        {5, "cube tilings, free boundary, cover flips", 0, cube_model},
        {6, "links: vertex figure and prefix images", 0, links},
        {7, "snug bijection, exact cover = flip BFS", 0, snug},
        {8, "S(d+2,d), S(d+3,d) sizes, formulas, shape", 0, small_cyclic},
        {9, "g: embedding, image, inverse, routes", 0, g_suite},
        {10, "f(g(S)) = ext(S), lk_0(ext(S)) = S", 0, extension_suite},
        {11, "parity predicates vs moment-curve oracle", 0, oracle_agreement},
        {12, "Moebius values and delta sums", 0, moebius_values},
    };
    auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.ok = false;
            o.note = "over the time limit; " + o.note;
        }
        failed += !o.ok;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3fs", secs);
        std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  [" << buf;
        if (c.limit_seconds > 0) std::cout << " < " << c.limit_seconds << "s";
        std::cout << "]" << (o.note.empty() ? "" : "  " + o.note) << "\n";
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = total < total_limit;
    std::cout << "total: " << total << "s (limit " << total_limit << "s) " << (in_time ? "ok" : "EXCEEDED") << "\n";
    std::cout << (failed == 0 && in_time ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 && in_time ? 0 : 1;
}
