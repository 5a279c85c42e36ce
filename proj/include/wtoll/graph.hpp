#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace wtoll {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Keeps both sorted neighbor lists (for iteration) and neighborhood bitsets
/// (for O(1) adjacency and word-parallel set arithmetic).
class Graph {
public:
    Graph() = default;

    /// Parallel edges collapse; self-loops and out-of-range endpoints throw.
    Graph(std::size_t n, const std::vector<Edge>& edges) : adjacency_(n), neighborhoods_(n, VertexSet(n)) {
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n)
                throw ArgumentError("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 0.." +
                                    std::to_string(n) + "-1");
            if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
            neighborhoods_[u].insert(v);
            neighborhoods_[v].insert(u);
        }
        for (Vertex v = 0; v < n; ++v) {
            adjacency_[v] = neighborhoods_[v].to_vector();
            m_ += adjacency_[v].size();
        }
        m_ /= 2;
    }

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const { return neighborhoods_.at(u).contains(v); }

    /// Sorted open neighborhood N(v).
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

    /// N(v) as a set.
    const VertexSet& open_neighborhood(Vertex v) const { return neighborhoods_.at(v); }

    /// N[v] = N(v) + v.
    VertexSet closed_neighborhood(Vertex v) const {
        VertexSet s = neighborhoods_.at(v);
        s.insert(v);
        return s;
    }

    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    std::size_t max_degree() const noexcept {
        std::size_t d = 0;
        for (const auto& a : adjacency_) d = std::max(d, a.size());
        return d;
    }

    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet empty_set() const { return VertexSet(order()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v : adjacency_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by `keep`, relabelled in increasing order of the kept vertices.
    Graph induced(const VertexSet& keep) const {
        std::vector<Vertex> index(order(), order());
        std::size_t k = 0;
        for (auto v : keep) index[v] = k++;
        std::vector<Edge> es;
        for (auto [u, v] : edges())
            if (keep.contains(u) && keep.contains(v)) es.emplace_back(index[u], index[v]);
        return Graph(k, es);
    }

    bool operator==(const Graph& o) const { return adjacency_ == o.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> neighborhoods_;
    std::size_t m_ = 0;
};

inline void require_vertex(const Graph& g, Vertex v) {
    if (v >= g.order())
        throw ArgumentError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order()) + "-1");
}

inline void require_subset(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw ArgumentError("vertex set universe does not match graph order");
}

} // namespace wtoll
