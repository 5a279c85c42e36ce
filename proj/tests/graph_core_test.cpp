#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

namespace wtoll {
namespace {

using testing::set_of;

TEST(EdgeList, ParsesPath) {
    auto g = parse_edge_list("4 3\n0 1\n1 2\n2 3");
    EXPECT_EQ(g, gen::path(4));
    EXPECT_EQ(g.size(), 3u);
}

TEST(EdgeList, SingleVertex) {
    auto g = parse_edge_list("1 0");
    EXPECT_EQ(g.order(), 1u);
    EXPECT_EQ(g.size(), 0u);
}

TEST(EdgeList, Triangle) { EXPECT_EQ(parse_edge_list("3 3\n0 1\n1 2\n0 2"), gen::complete(3)); }

TEST(EdgeList, CommentsBlankLinesAndDuplicates) {
    auto g = parse_edge_list("# a comment\n\n3 3\n  # indented comment\n0 1\n1 0\n1 2\n");
    EXPECT_EQ(g, gen::path(3));
}

TEST(EdgeList, ErrorsNameTheLine) {
    auto line_of = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{999};
    };
    EXPECT_EQ(line_of("3 2\n0 1\n1 1\n"), 3u);      // self-loop
    EXPECT_EQ(line_of("3 2\n0 1\n1 3\n"), 3u);      // out of range
    EXPECT_EQ(line_of("3 2\n0 1\nx y\n"), 3u);      // malformed
    EXPECT_EQ(line_of("# c\n3 1\n0 1 2\n"), 3u);    // too many fields
    EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);      // more edges than declared
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
    EXPECT_THROW(parse_edge_list(""), ParseError);
    EXPECT_THROW(parse_edge_list("-1 0"), ParseError);
}

TEST(Graph6, RoundTripsStar) {
    auto g = parse_graph6("D?{");
    EXPECT_EQ(to_graph6(g), "D?{");
    // bits 6..9 are the pairs (0,4),(1,4),(2,4),(3,4): a star centred at 4
    EXPECT_EQ(g, Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
}

TEST(Graph6, TriangleFromReferenceEncoder) {
    const auto encoded = testing::reference_graph6(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(encoded, "Bw");
    auto g = parse_graph6(encoded);
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.size(), 3u);
    EXPECT_TRUE(is_complete(g));
}

TEST(Graph6, Errors) {
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("D?"), ParseError);     // too short
    EXPECT_THROW(parse_graph6("D?{?"), ParseError);   // too long
    EXPECT_THROW(parse_graph6("D? {"), ParseError);   // bad character
    EXPECT_THROW(parse_graph6("~?"), ParseError);     // truncated long header
}

TEST(Graph6, LongHeader) {
    auto g = gen::path(70);
    auto s = to_graph6(g);
    EXPECT_EQ(s[0], '~');
    EXPECT_EQ(parse_graph6(s), g);
}

TEST(Graph6, HeaderPrefixAccepted) { EXPECT_EQ(parse_graph6(">>graph6<<Bw"), gen::complete(3)); }

// Property: serialising and re-parsing gives identical adjacency, in both formats.
TEST(GraphIo, RandomRoundTrips) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        auto g = gen::random_gnp(rng() % 80, gen::unit_draw(rng), rng);
        EXPECT_EQ(parse_graph6(to_graph6(g)), g);
        EXPECT_EQ(parse_edge_list(to_edge_list(g, {"round trip"})), g);
    }
}

TEST(Graph, RejectsSelfLoopsAndRange) {
    EXPECT_THROW(Graph(3, {{1, 1}}), ArgumentError);
    EXPECT_THROW(Graph(3, {{0, 3}}), ArgumentError);
}

TEST(Components, PathSplit) {
    auto g = gen::path(4);
    auto cs = connected_components(g, set_of(g, {1}));
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(cs[0], set_of(g, {0}));
    EXPECT_EQ(cs[1], set_of(g, {2, 3}));
}

TEST(Components, AllRemoved) {
    auto g = gen::cycle(6);
    EXPECT_TRUE(connected_components(g, g.vertices()).empty());
}

TEST(Components, CycleIsOneComponent) {
    auto g = gen::cycle(5);
    auto cs = connected_components(g, g.empty_set());
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].size(), 5u);
}

// Property: components are disjoint, cover V - removed, and no edge joins two of them.
TEST(Components, PartitionProperty) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 1 + rng() % 30;
        auto g = gen::random_gnp(n, 0.5 * gen::unit_draw(rng), rng);
        VertexSet removed(n);
        for (Vertex v = 0; v < n; ++v)
            if (gen::unit_draw(rng) < 0.3) removed.insert(v);
        auto cs = connected_components(g, removed);
        std::vector<int> owner(n, -1);
        VertexSet cover(n);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            EXPECT_FALSE(cs[i].intersects(cover));
            cover |= cs[i];
            for (auto v : cs[i]) owner[v] = static_cast<int>(i);
        }
        EXPECT_EQ(cover, ~removed);
        for (auto [u, v] : g.edges())
            if (owner[u] >= 0 && owner[v] >= 0) { EXPECT_EQ(owner[u], owner[v]); }
    }
}

TEST(Clique, Basics) {
    auto k3 = gen::complete(3);
    EXPECT_TRUE(is_clique(k3, k3.vertices()));
    auto p4 = gen::path(4);
    EXPECT_FALSE(is_clique(p4, set_of(p4, {0, 2})));
    EXPECT_TRUE(is_clique(p4, set_of(p4, {2})));
    EXPECT_TRUE(is_clique(p4, p4.empty_set()));
}

TEST(Complete, Basics) {
    EXPECT_TRUE(is_complete(gen::complete(5)));
    EXPECT_FALSE(is_complete(gen::path(4)));
    EXPECT_TRUE(is_complete(gen::complete(1)));
}

TEST(MaxClique, NamedGraphs) {
    EXPECT_EQ(max_clique(gen::complete(4)).size(), 4u);
    EXPECT_EQ(max_clique(gen::cycle(5)).size(), 2u);
    const auto bowtie = gen::bowtie();
    EXPECT_EQ(testing::brute_clique_number(bowtie), 3u);
    const auto c = max_clique(bowtie);
    EXPECT_EQ(c.size(), 3u);
    EXPECT_TRUE(is_clique(bowtie, c));
    EXPECT_TRUE(max_clique(Graph(0, {})).empty());
}

TEST(MaxClique, MatchesEnumeration) {
    for (const auto& g : testing::small_corpus()) {
        auto c = max_clique(g);
        ASSERT_TRUE(is_clique(g, c));
        ASSERT_EQ(c.size(), testing::brute_clique_number(g)) << to_graph6(g);
    }
    std::mt19937_64 rng(8);
    for (int t = 0; t < 2000; ++t) {
        auto g = gen::random_gnp(8, gen::unit_draw(rng), rng);
        auto c = max_clique(g);
        ASSERT_TRUE(is_clique(g, c));
        ASSERT_EQ(c.size(), testing::brute_clique_number(g)) << to_graph6(g);
    }
}

TEST(MaxClique, Deterministic) {
    auto g = gen::random_gnp(60, 0.4, 5);
    EXPECT_EQ(max_clique(g), max_clique(g));
}

TEST(VertexSetOps, Algebra) {
    VertexSet a(130, {0, 64, 129}), b(130, {64, 100});
    EXPECT_EQ((a | b).to_vector(), (std::vector<Vertex>{0, 64, 100, 129}));
    EXPECT_EQ((a & b).to_vector(), (std::vector<Vertex>{64}));
    EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 129}));
    EXPECT_EQ((~a).size(), 127u);
    EXPECT_EQ(VertexSet::full(130).size(), 130u);
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_THROW(a.insert(130), ArgumentError);
    EXPECT_THROW(a |= VertexSet(5), ArgumentError);
    EXPECT_TRUE(VertexSet(4, {0, 2}).lex_less(VertexSet(4, {0, 3})));
    EXPECT_TRUE(VertexSet(4, {0}).lex_less(VertexSet(4, {0, 3})));
}

} // namespace
} // namespace wtoll
