// A short tour: one element of B(6,2), its image under f, the fiber over
// that image, and the embedding g of S(6,2) into B(5,2).

#include <iostream>

#include "hbt/hbt.hpp"

using namespace hbt;

namespace {

void show(const char* what, const std::vector<LabelSet>& sets) {
    std::cout << what << ":";
    for (auto& s : sets) std::cout << " " << s.str();
    std::cout << "\n";
}

}  // namespace

int main() {
    auto e = make_bruhat(6, 2, parse_compact_sets("123,124,456,356"));
    show("I(e)", e.inversions);

    auto s = f_map(e);
    show("f(e)", s.simplices);
    std::cout << "f(e) is a triangulation of C(8,3): " << std::boolalpha << is_triangulation(s) << "\n";

    auto fib = fiber_f(s, 6, 2);
    std::cout << "fiber over f(e) has " << fib.size() << " elements\n";
    for (auto& x : fib) show("  member", x.inversions);

    show("lk_0 f(e)", link(s, {0}).simplices);
    show("faces of K(e) at (1,...,1)", vertex_figure_ones(e));

    auto all = enumerate_tamari(6, 2);
    std::size_t super = 0;
    for (auto& b : enumerate_bruhat(5, 2)) super += is_superconsistent(b.inversions, 5, 2);
    std::cout << "|S(6,2)| = " << all.size() << ", superconsistent elements of B(5,2) = " << super << "\n";

    auto t = all[all.size() / 2];
    show("S", t.simplices);
    show("g(S)", g_map(t).inversions);
    show("f(g(S))", f_map(g_map(t)).simplices);
    show("extension(S)", extension(t).simplices);

    auto h = tamari_hasse(enumerate_tamari(5, 2));
    std::cout << "\nHasse diagram of S(5,2):\n" << export_dot(h, [&](int i) {
        return compact_str(tamari_from_json(parse_json(h.key(i))).simplices);
    });
}
