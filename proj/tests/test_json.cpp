#include <gtest/gtest.h>

#include "hbt/json_io.hpp"
#include "hbt/maps.hpp"

using namespace hbt;

TEST(Json, BruhatSchema) {
    auto e = make_bruhat(6, 2, parse_compact_sets("123,124,456,356"));
    auto j = to_json(e);
    EXPECT_EQ(j.dump(), R"({"type":"bruhat","n":6,"d":2,"inversions":[[1,2,3],[1,2,4],[3,5,6],[4,5,6]]})");
    EXPECT_EQ(bruhat_from_json(j), e);
}

TEST(Json, TamariSchema) {
    auto t = tamari_bottom(5, 2);
    auto j = to_json(t);
    EXPECT_EQ(j["type"], "tamari");
    EXPECT_EQ(j["d"], 2);
    EXPECT_EQ(tamari_from_json(j), t);
}

TEST(Json, RoundtripAll) {
    for (auto& e : enumerate_bruhat(5, 2)) EXPECT_EQ(bruhat_from_json(parse_json(element_key(e))), e);
    for (auto& t : enumerate_tamari(7, 3)) EXPECT_EQ(tamari_from_json(parse_json(element_key(t))), t);
    for (auto& e : enumerate_bruhat(4, 1)) {
        auto s = f_map(e);
        EXPECT_EQ(tamari_from_json(parse_json(element_key(s))), s);
    }
}

TEST(Json, Rejects) {
    EXPECT_THROW(parse_json("{"), input_error);
    EXPECT_THROW(bruhat_from_json(parse_json(R"({"type":"bruhat","n":6,"d":2,"inversions":["123","124","356","456","134","346"]})")),
                 input_error);
    EXPECT_THROW(bruhat_from_json(parse_json(R"({"type":"bruhat","n":3,"d":1,"inversions":["123"]})")), input_error);
    EXPECT_THROW(tamari_from_json(parse_json(R"({"type":"tamari","labels":[1,2,3,4,5],"d":2,"simplices":["123"]})")),
                 input_error);
    EXPECT_THROW(bruhat_from_json(parse_json("[]")), input_error);
}

TEST(Json, CompactSets) {
    EXPECT_TRUE(parse_compact_sets("").empty());
    auto v = parse_compact_sets("124,123");
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0], (LabelSet{1, 2, 3}));
    EXPECT_EQ(v[1], (LabelSet{1, 2, 4}));
}
