#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "graph.hpp"

namespace wtoll {

/// Vertex sets of the connected components of g - removed, ordered by least member.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
    require_subset(g, removed);
    const auto n = g.order();
    VertexSet seen = removed;
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(n);
        seen.insert(s);
        stack.push_back(s);
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            comp.insert(x);
            for (auto y : g.neighbors(x))
                if (!seen.contains(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) { return connected_components(g, g.empty_set()); }

/// Vertices reachable from `start` in g - removed (including start). Empty if start is removed.
inline VertexSet reachable_from(const Graph& g, Vertex start, const VertexSet& removed) {
    VertexSet comp(g.order());
    if (removed.contains(start)) return comp;
    std::vector<Vertex> stack{start};
    comp.insert(start);
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : g.neighbors(x))
            if (!removed.contains(y) && !comp.contains(y)) {
                comp.insert(y);
                stack.push_back(y);
            }
    }
    return comp;
}

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
    return g.order() == 0 || reachable_from(g, 0, g.empty_set()).size() == g.order();
}

inline void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    require_subset(g, s);
    for (auto v : s) {
        VertexSet rest = s;
        rest.erase(v);
        if (!rest.is_subset_of(g.open_neighborhood(v))) return false;
    }
    return true;
}

inline bool is_complete(const Graph& g) {
    const auto n = g.order();
    return g.size() == n * (n - (n ? 1 : 0)) / 2;
}

namespace detail {

// Branch and bound over bitsets in a fixed priority order; greedy colour
// classes give the upper bound used for pruning.
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Graph& g) : n_(g.order()), order_(g.order()) {
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<Vertex> pos(n_);
        for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
        adj_.assign(n_, VertexSet(n_));
        for (auto [u, v] : g.edges()) {
            adj_[pos[u]].insert(pos[v]);
            adj_[pos[v]].insert(pos[u]);
        }
    }

    VertexSet run() {
        std::vector<Vertex> current;
        if (n_ > 0) expand(VertexSet::full(n_), current);
        VertexSet out(n_);
        for (auto i : best_) out.insert(order_[i]);
        return out;
    }

private:
    void colour(const VertexSet& candidates, std::vector<Vertex>& verts, std::vector<std::size_t>& bounds) const {
        VertexSet uncoloured = candidates;
        std::size_t k = 0;
        while (!uncoloured.empty()) {
            ++k;
            VertexSet q = uncoloured;
            while (!q.empty()) {
                auto v = q.first();
                q.erase(v);
                q -= adj_[v];
                uncoloured.erase(v);
                verts.push_back(v);
                bounds.push_back(k);
            }
        }
    }

    void expand(VertexSet candidates, std::vector<Vertex>& current) {
        std::vector<Vertex> verts;
        std::vector<std::size_t> bounds;
        colour(candidates, verts, bounds);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current.size() + bounds[i] <= best_.size()) return;
            auto v = verts[i];
            current.push_back(v);
            VertexSet next = candidates & adj_[v];
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
            candidates.erase(v);
        }
    }

    std::size_t n_;
    std::vector<Vertex> order_;
    std::vector<VertexSet> adj_;
    std::vector<Vertex> best_;
};

} // namespace detail

/// A maximum clique. Exact; exponential in the worst case.
inline VertexSet max_clique(const Graph& g) { return detail::MaxCliqueSearch(g).run(); }

} // namespace wtoll
