#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atoms.hpp"
#include "combinations.hpp"
#include "graph_algorithms.hpp"
#include "interval.hpp"
#include "numbers.hpp"

namespace wtoll {

inline constexpr std::size_t kWtcCap = 16;

/// Largest convex proper subset by enumeration from size n-1 downwards,
/// lexicographically least within a size.
inline InvariantResult wtc_exhaustive(const Graph& g, std::size_t cap = kWtcCap) {
    const auto n = g.order();
    if (n < 2) throw ArgumentError("wtc requires at least 2 vertices");
    if (n > cap)
        throw RefusalError("wtc exhaustive search limited to n <= " + std::to_string(cap) + ", got n=" +
                           std::to_string(n) + "; deciding wtc(G) >= k is NP-complete");
    const auto pool = g.vertices().to_vector();
    for (std::size_t k = n - 1;; --k) {
        std::optional<VertexSet> found;
        for_each_combination(pool, k, [&](const std::vector<Vertex>& xs) {
            auto s = VertexSet::from(n, xs);
            if (is_convex(g, s)) {
                found = std::move(s);
                return true;
            }
            return false;
        });
        if (found) return {k, std::move(*found), CaseTag::WtcExhaustive, std::nullopt, {}};
        if (k == 0) break;
    }
    throw InternalError("wtc: the empty set was reported non-convex");
}

/// Weakly toll convexity number of a connected graph on n >= 2 vertices.
///
/// On a prime non-complete graph the proper convex sets are exactly the
/// cliques, so the answer is a maximum clique. Everything else falls back to
/// the capped exhaustive search.
inline InvariantResult wtc_exact(const Graph& g, std::size_t cap = kWtcCap) {
    require_connected(g);
    if (g.order() < 2) throw ArgumentError("wtc requires at least 2 vertices");
    if (!is_complete(g) && is_prime(g)) {
        auto clique = max_clique(g);
        if (!is_convex(g, clique) || clique == g.vertices())
            throw InternalError("wtc: maximum clique is not a proper convex set");
        auto value = clique.size();
        return {value, std::move(clique), CaseTag::WtcPrimeClique, std::nullopt, {}};
    }
    auto r = wtc_exhaustive(g, cap);
    if (!is_convex(g, r.witness) || r.witness == g.vertices())
        throw InternalError("wtc: exhaustive witness is not a proper convex set");
    return r;
}

/// Clique instance (G, k) mapped to a prime graph G' with the same answer.
struct ReductionOutput {
    Graph graph;
    std::size_t k = 0;
    /// added[i] is the nonadjacent pair behind vertex n + i.
    std::vector<std::pair<Vertex, Vertex>> added;

    std::vector<std::string> comments(std::size_t source_order) const {
        std::vector<std::string> out{"clique-reduction k=" + std::to_string(k) + " source_n=" +
                                     std::to_string(source_order)};
        for (std::size_t i = 0; i < added.size(); ++i)
            out.push_back("x " + std::to_string(source_order + i) + " = " + std::to_string(added[i].first) + " " +
                          std::to_string(added[i].second));
        return out;
    }
};

/// Adds one vertex per nonadjacent pair {u, v}, adjacent to exactly u and v.
/// Requires k >= 3: below that the added degree-2 vertices create cliques of
/// size 2 the source graph may not have.
inline ReductionOutput clique_reduction(const Graph& g, std::size_t k) {
    if (k < 3) throw ArgumentError("clique_reduction: k must be at least 3 (got " + std::to_string(k) + ")");
    const auto n = g.order();
    if (n < 2) throw ArgumentError("clique_reduction: graph needs at least 2 vertices");
    ReductionOutput out;
    out.k = k;
    auto edges = g.edges();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) {
                const Vertex x = n + out.added.size();
                out.added.emplace_back(u, v);
                edges.emplace_back(u, x);
                edges.emplace_back(v, x);
            }
    out.graph = Graph(n + out.added.size(), edges);
    return out;
}

} // namespace wtoll
