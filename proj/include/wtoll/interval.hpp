#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"
#include "graph_algorithms.hpp"

namespace wtoll {

/// Certificate that v lies on a weakly toll (u, w)-walk: the walk enters through
/// `via_u`, leaves through `via_w`, and otherwise stays inside `component`.
struct MembershipWitness {
    Vertex via_u;
    Vertex via_w;
    VertexSet component;
};

/// (N[u] - via_u) + (N[w] - via_w): the vertices a weakly toll walk entering
/// through via_u and leaving through via_w may not touch in between.
inline VertexSet blocked_set(const Graph& g, Vertex u, Vertex w, Vertex via_u, Vertex via_w) {
    for (auto x : {u, w, via_u, via_w}) require_vertex(g, x);
    if (u == w) throw ArgumentError("blocked_set: endpoints must be distinct");
    if (g.adjacent(u, w)) throw ArgumentError("blocked_set: endpoints must be nonadjacent");
    if (!g.adjacent(u, via_u)) throw ArgumentError("blocked_set: via_u must be a neighbor of u");
    if (!g.adjacent(w, via_w)) throw ArgumentError("blocked_set: via_w must be a neighbor of w");
    VertexSet a = g.closed_neighborhood(u);
    a.erase(via_u);
    VertexSet b = g.closed_neighborhood(w);
    b.erase(via_w);
    return a | b;
}

/// Decides whether v lies on some weakly toll (u, w)-walk. Neighbor pairs
/// (via_u, via_w) are tried in ascending lexicographic order and the first
/// certificate found is returned.
inline std::optional<MembershipWitness> in_weakly_toll_walk(const Graph& g, Vertex u, Vertex w, Vertex v) {
    for (auto x : {u, w, v}) require_vertex(g, x);
    if (u == w || u == v || v == w) throw ArgumentError("in_weakly_toll_walk: u, w, v must be pairwise distinct");
    if (g.adjacent(u, w)) throw ArgumentError("in_weakly_toll_walk: u and w must be nonadjacent");
    for (auto via_u : g.neighbors(u))
        for (auto via_w : g.neighbors(w)) {
            auto blocked = blocked_set(g, u, w, via_u, via_w);
            auto comp = reachable_from(g, via_u, blocked);
            if (comp.contains(via_w) && comp.contains(v)) return MembershipWitness{via_u, via_w, std::move(comp)};
        }
    return std::nullopt;
}

/// I({u, w}). Equal or adjacent endpoints contribute nothing beyond themselves.
///
/// Removing S(via_u, via_w) leaves G - (N[u] + N[w]) plus via_u and via_w, so the
/// components of G - (N[u] + N[w]) are computed once and every neighbor pair is
/// resolved by checking which of those components the two entry vertices touch.
inline VertexSet pair_interval(const Graph& g, Vertex u, Vertex w) {
    require_vertex(g, u);
    require_vertex(g, w);
    const auto n = g.order();
    VertexSet result(n, {u, w});
    if (u == w || g.adjacent(u, w)) return result;

    const VertexSet closed = g.closed_neighborhood(u) | g.closed_neighborhood(w);
    const auto comps = connected_components(g, closed);
    std::vector<std::size_t> comp_of(n, comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (auto x : comps[c]) comp_of[x] = c;

    // For each entry candidate: the components it touches, and their union.
    std::vector<VertexSet> touches(n);
    std::vector<VertexSet> reach(n);
    const VertexSet entries = g.open_neighborhood(u) | g.open_neighborhood(w);
    for (auto x : entries) {
        touches[x] = VertexSet(comps.size());
        reach[x] = VertexSet(n, {x});
        for (auto y : g.neighbors(x))
            if (comp_of[y] < comps.size() && !touches[x].contains(comp_of[y])) {
                touches[x].insert(comp_of[y]);
                reach[x] |= comps[comp_of[y]];
            }
    }

    const VertexSet& nu = g.open_neighborhood(u);
    const VertexSet& nw = g.open_neighborhood(w);
    // A common neighbor can only pair with itself: otherwise it is blocked.
    for (auto c : nu & nw) result |= reach[c];

    const VertexSet only_u = nu - nw;
    const VertexSet only_w = nw - nu;
    VertexSet used(n);
    for (auto a : only_u)
        for (auto b : only_w) {
            if (used.contains(a) && used.contains(b)) continue;
            if (g.adjacent(a, b) || touches[a].intersects(touches[b])) {
                used.insert(a);
                used.insert(b);
            }
        }
    for (auto x : used) result |= reach[x];
    return result;
}

/// I(S): S plus every vertex on a weakly toll walk between two vertices of S.
inline VertexSet interval(const Graph& g, const VertexSet& s) {
    require_subset(g, s);
    VertexSet result = s;
    const auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.adjacent(members[i], members[j])) result |= pair_interval(g, members[i], members[j]);
    return result;
}

/// H(S), the least weakly toll convex superset of S. Each pair of hull vertices
/// is expanded exactly once, as soon as both of its endpoints are known.
inline VertexSet hull(const Graph& g, const VertexSet& s) {
    require_subset(g, s);
    VertexSet h = s;
    std::vector<Vertex> pending = s.to_vector();
    std::vector<Vertex> done;
    done.reserve(g.order());
    for (std::size_t next = 0; next < pending.size(); ++next) {
        const auto x = pending[next];
        for (auto y : done) {
            if (g.adjacent(x, y)) continue;
            const VertexSet added = pair_interval(g, x, y) - h;
            for (auto z : added) {
                h.insert(z);
                pending.push_back(z);
            }
        }
        done.push_back(x);
    }
    return h;
}

inline bool is_convex(const Graph& g, const VertexSet& s) { return interval(g, s) == s; }

/// True iff x is interior to no weakly toll walk between two other vertices,
/// i.e. V - x is convex.
inline bool is_extreme(const Graph& g, Vertex x) {
    require_vertex(g, x);
    const auto n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        if (a == x) continue;
        for (Vertex b = a + 1; b < n; ++b) {
            if (b == x || g.adjacent(a, b)) continue;
            if (pair_interval(g, a, b).contains(x)) return false;
        }
    }
    return true;
}

/// ext(G).
inline VertexSet extreme_vertices(const Graph& g) {
    const auto n = g.order();
    VertexSet interior(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            VertexSet inner = pair_interval(g, a, b);
            inner.erase(a);
            inner.erase(b);
            interior |= inner;
        }
    return ~interior;
}

} // namespace wtoll
