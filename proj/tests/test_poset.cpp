#include <gtest/gtest.h>

#include <random>

#include "hbt/maps.hpp"
#include "hbt/poset.hpp"

using namespace hbt;

namespace {

int unique_source(const HasseDiagram& h) {
    auto s = h.sources();
    EXPECT_EQ(s.size(), 1u);
    return s.empty() ? -1 : s.front();
}

int unique_sink(const HasseDiagram& h) {
    auto s = h.sinks();
    EXPECT_EQ(s.size(), 1u);
    return s.empty() ? -1 : s.front();
}

}  // namespace

TEST(Hasse, SmallCounts) {
    auto b31 = bruhat_hasse(enumerate_bruhat(3, 1));
    EXPECT_EQ(b31.size(), 6);
    EXPECT_EQ(b31.edge_count(), 6u);
    auto s52 = tamari_hasse(enumerate_tamari(5, 2));
    EXPECT_EQ(s52.size(), 5);
    EXPECT_EQ(s52.edge_count(), 5u);
    EXPECT_EQ(unique_source(s52), s52.index_of(element_key(tamari_bottom(5, 2))));
    EXPECT_EQ(unique_sink(s52), s52.index_of(element_key(tamari_top(5, 2))));
}

// S(d+3,d) is a (d+3)-gon: two chains from bottom to top through the d+1
// middle elements, split by parity.
TEST(Hasse, PolygonShape) {
    for (int d = 1; d <= 4; ++d) {
        auto h = tamari_hasse(enumerate_tamari(d + 3, d));
        EXPECT_EQ(h.size(), d + 3);
        EXPECT_EQ(h.edge_count(), static_cast<std::size_t>(d + 3));
        int lo = unique_source(h), hi = unique_sink(h);
        ASSERT_EQ(h.up(lo).size(), 2u);
        std::vector<int> lengths;
        for (int start : h.up(lo)) {
            int len = 1, cur = start;
            while (cur != hi) {
                ASSERT_EQ(h.up(cur).size(), 1u);
                cur = h.up(cur).front();
                ++len;
            }
            lengths.push_back(len);
        }
        std::sort(lengths.begin(), lengths.end());
        EXPECT_EQ(lengths, (std::vector<int>{(d + 1) / 2 + 1, (d + 2) / 2 + 1}));
    }
}

TEST(Hasse, UniqueExtremes) {
    for (auto [n, d] : {std::pair{4, 1}, {5, 2}, {5, 3}}) {
        auto h = bruhat_hasse(enumerate_bruhat(n, d));
        EXPECT_EQ(unique_source(h), h.index_of(element_key(bruhat_bottom(n, d))));
        EXPECT_EQ(unique_sink(h), h.index_of(element_key(bruhat_top(n, d))));
    }
    for (auto [n, d] : {std::pair{6, 2}, {7, 3}}) {
        auto h = tamari_hasse(enumerate_tamari(n, d));
        unique_source(h);
        unique_sink(h);
    }
}

TEST(Hasse, RejectsBadInput) {
    EXPECT_THROW(HasseDiagram("x", {"a", "b"}, {{0, 1}, {1, 0}}), input_error);
    EXPECT_THROW(HasseDiagram("x", {"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), input_error);
    EXPECT_THROW(HasseDiagram("x", {"a", "a"}, {}), input_error);
    EXPECT_THROW(HasseDiagram("x", {"a"}, {{0, 3}}), input_error);
    EXPECT_THROW(HasseDiagram("x", {"a"}, {{0, 0}}), input_error);
}

TEST(Hasse, TransitiveReductionOnBruhat) {
    auto h = bruhat_hasse(enumerate_bruhat(5, 2));
    for (auto [a, b] : h.edges())
        for (int c : h.up(a))
            if (c != b) {
                EXPECT_FALSE(h.leq(c, b));
            }
}

TEST(Moebius, Examples) {
    auto b31 = bruhat_hasse(enumerate_bruhat(3, 1));
    for (int i = 0; i < b31.size(); ++i) EXPECT_EQ(moebius(b31, i, i), 1);
    EXPECT_EQ(moebius(b31, unique_source(b31), unique_sink(b31)), 1);
    auto s52 = tamari_hasse(enumerate_tamari(5, 2));
    EXPECT_EQ(moebius(s52, unique_source(s52), unique_sink(s52)), 1);
    // an atom pair in the hexagon is incomparable
    auto atoms = b31.up(unique_source(b31));
    ASSERT_EQ(atoms.size(), 2u);
    EXPECT_THROW(moebius(b31, atoms[0], atoms[1]), input_error);
    EXPECT_THROW(moebius(b31, unique_sink(b31), unique_source(b31)), input_error);
}

// Independent check: mu by the dual recursion sum_{a<=z<=b} mu(z,b) = delta.
TEST(Moebius, DeltaSumOnRandomIntervals) {
    auto h = bruhat_hasse(enumerate_bruhat(5, 2));
    std::mt19937 rng(20261014);
    std::uniform_int_distribution<int> pick(0, h.size() - 1);
    int tested = 0;
    while (tested < 60) {
        int a = pick(rng), b = pick(rng);
        if (!h.leq(a, b)) continue;
        ++tested;
        long long s = 0;
        for (int z : h.interval(a, b)) s += moebius(h, a, z);
        EXPECT_EQ(s, a == b ? 1 : 0);
        long long t = 0;
        for (int z : h.interval(a, b)) t += moebius(h, z, b);
        EXPECT_EQ(t, a == b ? 1 : 0);
    }
}

TEST(Monotone, HigherBruhatToTamari) {
    auto src_e = enumerate_bruhat(4, 1);
    auto src = bruhat_hasse(src_e);
    auto dst = tamari_hasse(enumerate_tamari(LabelSet::range(0, 5), 2));
    std::vector<std::string> image;
    for (auto& e : src_e) image.push_back(element_key(f_map(e)));
    EXPECT_TRUE(check_monotone(image, src, dst).empty());
    // the reversed target catches every non-degenerate cover
    EXPECT_FALSE(check_monotone(image, src, dst.reversed()).empty());
}

TEST(Monotone, TamariToBruhat) {
    auto src_t = enumerate_tamari(6, 2);
    auto src = tamari_hasse(src_t);
    auto dst = bruhat_hasse(enumerate_bruhat(5, 2));
    EXPECT_TRUE(check_monotone([&](int i) { return element_key(g_map(src_t[i])); }, src, dst).empty());
}

TEST(Monotone, TopLinkReversesOrder) {
    auto src_t = enumerate_tamari(LabelSet::range(0, 5), 2);
    auto src = tamari_hasse(src_t);
    auto dst = tamari_hasse(enumerate_tamari(LabelSet::range(0, 4), 1));
    std::vector<std::string> image;
    for (auto& s : src_t) image.push_back(element_key(link(s, {5})));
    EXPECT_TRUE(check_monotone(image, src, dst.reversed()).empty());
    EXPECT_FALSE(check_monotone(image, src, dst).empty());
}

TEST(Monotone, MissingImage) {
    auto src = bruhat_hasse(enumerate_bruhat(3, 1));
    std::vector<std::string> image(src.size(), "nope");
    EXPECT_THROW(check_monotone(image, src, src), input_error);
    EXPECT_THROW(check_monotone(std::vector<std::string>{}, src, src), input_error);
}

TEST(Export, ChainDot) {
    HasseDiagram h("bruhat", {"\"a\"", "\"b\""}, {{0, 1}});
    auto dot = export_dot(h);
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 1);
    EXPECT_NE(dot.find("n0 -> n1"), std::string::npos);
    EXPECT_NE(dot.find("\\\"a\\\""), std::string::npos);
}

TEST(Export, Deterministic) {
    auto a = tamari_hasse(enumerate_tamari(6, 2));
    auto b = tamari_hasse(enumerate_tamari(6, 2));
    EXPECT_EQ(export_dot(a), export_dot(b));
    EXPECT_EQ(export_json(a), export_json(b));
}

TEST(Export, JsonRoundtrip) {
    auto s52 = tamari_hasse(enumerate_tamari(5, 2));
    auto back = hasse_from_json(parse_json(export_json(s52)));
    EXPECT_EQ(back, s52);
    auto j = hasse_to_json(s52);
    EXPECT_EQ(j["kind"], "tamari");
    for (auto& el : j["elements"]) EXPECT_NO_THROW(tamari_from_json(el));
    auto b42 = bruhat_hasse(enumerate_bruhat(4, 2));
    EXPECT_EQ(hasse_from_json(hasse_to_json(b42)), b42);
    EXPECT_THROW(hasse_from_json(parse_json("{\"elements\":[1,2],\"covers\":[[0]]}")), input_error);
}
