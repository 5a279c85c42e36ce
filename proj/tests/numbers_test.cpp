#include <gtest/gtest.h>

#include "test_support.hpp"

namespace wtoll {
namespace {

using testing::set_of;

TEST(Wtn, Complete) {
    auto r = wtn(gen::complete(5));
    EXPECT_EQ(r.value, 5u);
    EXPECT_EQ(r.tag, CaseTag::Complete);
}

TEST(Wtn, Path) {
    auto g = gen::path(4);
    auto r = wtn(g);
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.witness, set_of(g, {0, 3}));
    EXPECT_EQ(r.tag, CaseTag::WtnK2);
    EXPECT_EQ(brute_force_wtn(g).value, 2u);
}

TEST(Wtn, Star) {
    auto g = gen::star(3);
    auto r = wtn(g);
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.witness, set_of(g, {1, 2}));
    EXPECT_EQ(r.tag, CaseTag::WtnK0);
}

TEST(Wtn, Bowtie) {
    auto g = gen::bowtie();
    auto r = wtn(g);
    EXPECT_EQ(r.value, 4u);
    EXPECT_EQ(r.witness, set_of(g, {0, 1, 3, 4}));
    EXPECT_EQ(r.tag, CaseTag::WtnK2);
    EXPECT_EQ(brute_force_wtn(g).value, 4u);
}

TEST(Wtn, TwinsCanBeNeededWithoutExtremeClasses) {
    // No extreme vertices, yet the unique-size minimum interval set holds two twins.
    auto g = parse_graph6("El^g");
    EXPECT_TRUE(extreme_vertices(g).empty());
    auto r = wtn(g);
    EXPECT_EQ(r.value, 3u);
    EXPECT_EQ(r.witness, set_of(g, {0, 2, 4}));
    EXPECT_EQ(g.closed_neighborhood(2), g.closed_neighborhood(4));
}

TEST(Wtn, RejectsDisconnected) { EXPECT_THROW(wtn(Graph(2, {})), DisconnectedError); }

TEST(Wth, Complete) {
    for (std::size_t n : {1, 2, 3, 5}) {
        auto r = wth(gen::complete(n));
        EXPECT_EQ(r.value, n);
        EXPECT_EQ(r.tag, CaseTag::Complete);
    }
}

TEST(Wth, PrimePair) {
    auto g = gen::cycle(5);
    auto r = wth(g);
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.tag, CaseTag::PrimePair);
    EXPECT_EQ(r.witness, set_of(g, {0, 2}));
    // any nonadjacent pair works on a prime non-complete graph
    for (Vertex a = 0; a < 5; ++a)
        for (Vertex b = a + 1; b < 5; ++b)
            if (!g.adjacent(a, b)) { EXPECT_EQ(hull(g, set_of(g, {a, b})), g.vertices()); }
}

TEST(Wth, Path) {
    auto g = gen::path(4);
    auto r = wth(g);
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.witness, set_of(g, {0, 3}));
    EXPECT_EQ(r.tag, CaseTag::TwoExtremalBothExtreme);
    ASSERT_TRUE(r.exclusive_sizes);
    EXPECT_EQ(*r.exclusive_sizes, (std::pair<std::size_t, std::size_t>{1, 1}));
    EXPECT_EQ(brute_force_wth(g).value, 2u);
}

TEST(Wth, Bowtie) {
    auto g = gen::bowtie();
    auto r = wth(g);
    EXPECT_EQ(r.value, 4u);
    EXPECT_EQ(r.witness, set_of(g, {0, 1, 3, 4}));
    EXPECT_EQ(r.tag, CaseTag::TwoExtremalBothExtreme);
    EXPECT_EQ(*r.exclusive_sizes, (std::pair<std::size_t, std::size_t>{2, 2}));
    EXPECT_EQ(brute_force_wth(g).value, 4u);
}

TEST(Wth, ThreeExtremalAtoms) {
    // three pendant paths from a centre: atoms are the three edges at the centre plus the outer edges
    Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    auto r = wth(spider);
    EXPECT_EQ(r.tag, CaseTag::ThreeExtremal);
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(brute_force_wth(spider).value, 2u);
}

TEST(Wth, ExclusiveNotClique) {
    // C5 on 0..4 with a pendant 5 at vertex 0: extremal atom C5 has exclusive {1,2,3,4}
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    auto r = wth(g);
    EXPECT_EQ(r.tag, CaseTag::ExclusiveNotClique);
    EXPECT_EQ(r.value, 2u);
    EXPECT_EQ(r.witness, set_of(g, {1, 4}));
    EXPECT_EQ(brute_force_wth(g).value, 2u);
}

TEST(Wth, RejectsDisconnected) { EXPECT_THROW(wth(Graph(3, {{0, 1}})), DisconnectedError); }

TEST(BruteForce, Examples) {
    EXPECT_EQ(brute_force_wtn(gen::complete(4)).value, 4u);
    EXPECT_EQ(brute_force_wth(gen::complete(4)).value, 4u);
    EXPECT_EQ(brute_force_wtn(gen::cycle(5)).value, 2u);
    EXPECT_EQ(brute_force_wth(gen::cycle(5)).value, 2u);
    EXPECT_THROW(brute_force_wtn(gen::path(11)), RefusalError);
    EXPECT_EQ(brute_force_wth(gen::path(11), 11).value, 2u);
}

TEST(Numbers, AgreeWithBruteForceOnCorpus) {
    for (const auto& g : testing::small_corpus()) {
        const auto n = wtn(g), h = wth(g);
        ASSERT_EQ(n.value, brute_force_wtn(g).value) << to_graph6(g);
        ASSERT_EQ(h.value, brute_force_wth(g).value) << to_graph6(g);
        ASSERT_EQ(wtn(g, {.twin_pruning = false}).witness, n.witness) << to_graph6(g);
        ASSERT_EQ(interval(g, n.witness), g.vertices());
        ASSERT_EQ(hull(g, h.witness), g.vertices());
        ASSERT_LE(h.value, n.value);
        const auto ext = extreme_vertices(g);
        ASSERT_TRUE(ext.is_subset_of(n.witness)) << to_graph6(g);
        ASSERT_TRUE(ext.is_subset_of(h.witness)) << to_graph6(g);
    }
}

TEST(Numbers, AgreeWithBruteForceOnRandomGraphs) {
    for (const auto& g : testing::random_connected_corpus(150, 8, 10, 2024)) {
        ASSERT_EQ(wtn(g).value, brute_force_wtn(g).value) << to_graph6(g);
        ASSERT_EQ(wth(g).value, brute_force_wth(g).value) << to_graph6(g);
    }
}

} // namespace
} // namespace wtoll
