#include <gtest/gtest.h>

#include "test_support.hpp"

namespace wtoll {
namespace {

using testing::set_of;

TEST(OracleMembership, Examples) {
    auto p4 = gen::path(4);
    auto w = oracle::oracle_membership(p4, 0, 3, 1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->sequence, (std::vector<Vertex>{0, 1, 2, 3}));

    EXPECT_FALSE(oracle::oracle_membership(gen::path(5), 0, 2, 4));

    auto star = gen::star(3);
    auto s = oracle::oracle_membership(star, 1, 2, 3);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->sequence, (std::vector<Vertex>{1, 0, 3, 0, 2}));
}

TEST(OracleMembership, Errors) {
    EXPECT_THROW(oracle::oracle_membership(gen::path(10), 0, 2, 4), RefusalError);
    EXPECT_NO_THROW(oracle::oracle_membership(gen::path(10), 0, 2, 4, std::nullopt, 10));
    EXPECT_THROW(oracle::oracle_membership(gen::path(4), 0, 1, 2), ArgumentError);
    EXPECT_THROW(oracle::oracle_membership(gen::path(4), 0, 3, 3), ArgumentError);
}

TEST(OracleMembership, WitnessesAreValidWalksThroughV) {
    for (const auto& g : testing::small_corpus()) {
        const auto n = g.order();
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = 0; w < n; ++w) {
                if (u == w || g.adjacent(u, w)) continue;
                for (Vertex v = 0; v < n; ++v) {
                    if (v == u || v == w) continue;
                    auto walk = oracle::oracle_membership(g, u, w, v);
                    if (!walk) continue;
                    ASSERT_TRUE(oracle::is_weakly_toll_walk(g, walk->sequence));
                    ASSERT_EQ(walk->sequence.front(), u);
                    ASSERT_EQ(walk->sequence.back(), w);
                    ASSERT_NE(std::find(walk->sequence.begin() + 1, walk->sequence.end() - 1, v),
                              walk->sequence.end() - 1);
                    ASSERT_LE(walk->sequence.size(), 2 * n + 3);
                }
            }
    }
}

// A longer length bound finds nothing the default bound misses.
TEST(OracleMembership, LengthBoundIsNotTruncating) {
    for (const auto& g : testing::small_corpus()) {
        const auto n = g.order();
        if (n > 6) continue;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex w = 0; w < n; ++w) {
                if (u == w || g.adjacent(u, w)) continue;
                for (Vertex v = 0; v < n; ++v) {
                    if (v == u || v == w) continue;
                    ASSERT_EQ(oracle::oracle_membership(g, u, w, v).has_value(),
                              oracle::oracle_membership(g, u, w, v, 3 * n).has_value());
                }
            }
    }
}

TEST(OracleWalkCheck, RejectsBadWalks) {
    auto p4 = gen::path(4);
    EXPECT_TRUE(oracle::is_weakly_toll_walk(p4, {0, 1, 2, 3}));
    EXPECT_TRUE(oracle::is_weakly_toll_walk(p4, {0, 1, 2}));
    EXPECT_FALSE(oracle::is_weakly_toll_walk(p4, {0, 2, 3}));       // 0-2 not an edge
    EXPECT_FALSE(oracle::is_weakly_toll_walk(p4, {0, 1, 2, 1}));    // endpoints adjacent
    auto c4 = gen::cycle(4);
    EXPECT_FALSE(oracle::is_weakly_toll_walk(c4, {0, 1, 2, 3, 2})); // 3 is a second neighbor of 0
}

TEST(OracleSets, Examples) {
    auto p4 = gen::path(4);
    EXPECT_EQ(oracle::oracle_interval(p4, set_of(p4, {0, 3})), p4.vertices());
    auto k4 = gen::complete(4);
    EXPECT_EQ(oracle::oracle_interval(k4, set_of(k4, {1, 3})), set_of(k4, {1, 3}));
    EXPECT_EQ(oracle::oracle_hull(k4, set_of(k4, {1, 3})), set_of(k4, {1, 3}));
    EXPECT_EQ(oracle::oracle_extreme(p4), set_of(p4, {0, 3}));
    EXPECT_THROW(oracle::oracle_extreme(gen::path(10)), RefusalError);
}

} // namespace
} // namespace wtoll
