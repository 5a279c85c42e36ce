#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graph.hpp"
#include "graph_algorithms.hpp"

namespace wtoll::gen {

inline Graph path(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 1; i < n; ++i) es.emplace_back(i - 1, i);
    return Graph(n, es);
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

/// K_{1,leaves} with centre 0.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> es;
    for (Vertex i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph(a + b, es);
}

/// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

/// `count` triangles chained through shared cut vertices.
inline Graph triangle_chain(std::size_t count) {
    std::vector<Edge> es;
    for (std::size_t t = 0; t < count; ++t) {
        const Vertex a = 2 * t, b = 2 * t + 1, c = 2 * t + 2;
        es.insert(es.end(), {{a, b}, {a, c}, {b, c}});
    }
    return Graph(2 * count + 1, es);
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (unit_draw(rng) < p) es.emplace_back(i, j);
    return Graph(n, es);
}

inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_gnp(n, p, rng);
}

/// G(n, p) redrawn from the same stream until connected.
inline Graph random_connected_gnp(std::size_t n, double p, std::mt19937_64& rng) {
    if (n > 1 && p <= 0.0) throw ArgumentError("random_connected_gnp: p must be positive");
    while (true) {
        auto g = random_gnp(n, p, rng);
        if (is_connected(g)) return g;
    }
}

inline Graph random_connected_gnp(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_connected_gnp(n, p, rng);
}

} // namespace wtoll::gen
