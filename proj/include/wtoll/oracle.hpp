#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace wtoll::oracle {

// Ground truth straight from the walk definition. Uses nothing from the
// library beyond Graph and VertexSet.

inline constexpr std::size_t kOracleCap = 9;

struct WalkWitness {
    std::vector<Vertex> sequence;
};

/// Checks the definition literally: consecutive vertices adjacent, endpoints
/// distinct and nonadjacent, the only walk vertex adjacent to the first vertex
/// is the second one and the only one adjacent to the last is the penultimate.
inline bool is_weakly_toll_walk(const Graph& g, const std::vector<Vertex>& walk) {
    if (walk.size() < 3) return false;
    for (auto x : walk)
        if (x >= g.order()) return false;
    const auto first = walk.front(), last = walk.back();
    if (first == last || g.adjacent(first, last)) return false;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.adjacent(walk[i], walk[i + 1])) return false;
    const auto second = walk[1], penultimate = walk[walk.size() - 2];
    for (auto x : walk) {
        if (g.adjacent(first, x) && x != second) return false;
        if (g.adjacent(last, x) && x != penultimate) return false;
    }
    return true;
}

/// Searches for a weakly toll (u, w)-walk through v with at most `max_length`
/// edges (default 2n + 2). Partial walks are extended one vertex at a time and
/// discarded as soon as they touch a second neighbor of u or of w. Partial
/// walks that agree on (last vertex, committed neighbor of w, whether v has
/// been seen) have identical continuations, so only the shortest is kept.
inline std::optional<WalkWitness> oracle_membership(const Graph& g, Vertex u, Vertex w, Vertex v,
                                                    std::optional<std::size_t> max_length = std::nullopt,
                                                    std::size_t cap = kOracleCap) {
    const auto n = g.order();
    if (n > cap) throw RefusalError("oracle limited to n <= " + std::to_string(cap));
    if (u >= n || w >= n || v >= n) throw ArgumentError("oracle_membership: vertex out of range");
    if (u == w || u == v || v == w) throw ArgumentError("oracle_membership: u, w, v must be pairwise distinct");
    if (g.adjacent(u, w)) throw ArgumentError("oracle_membership: u and w must be nonadjacent");
    const std::size_t limit = max_length.value_or(2 * n + 2);

    const std::size_t none = n;
    auto encode = [&](Vertex x, std::size_t committed, bool seen) {
        return (x * (n + 1) + committed) * 2 + (seen ? 1 : 0);
    };
    struct State {
        Vertex x;
        std::size_t committed;
        bool seen;
    };
    const std::size_t state_count = n * (n + 1) * 2;

    for (Vertex first_step = 0; first_step < n; ++first_step) {
        if (!g.adjacent(u, first_step)) continue;
        std::vector<long> parent(state_count, -2);
        std::vector<State> frontier;
        const State start{first_step, g.adjacent(w, first_step) ? first_step : none, first_step == v};
        parent[encode(start.x, start.committed, start.seen)] = -1;
        frontier.push_back(start);

        auto rebuild = [&](State s) {
            std::vector<Vertex> rev{w};
            long code = static_cast<long>(encode(s.x, s.committed, s.seen));
            while (code >= 0) {
                rev.push_back(static_cast<Vertex>(code / 2 / (n + 1)));
                code = parent[static_cast<std::size_t>(code)];
            }
            rev.push_back(u);
            return WalkWitness{std::vector<Vertex>(rev.rbegin(), rev.rend())};
        };

        // frontier holds partial walks u, first_step, ..., x with `depth` edges
        for (std::size_t depth = 1; depth < limit && !frontier.empty(); ++depth) {
            std::vector<State> next;
            for (const auto& s : frontier) {
                for (Vertex y = 0; y < n; ++y) {
                    if (!g.adjacent(s.x, y)) continue;
                    if (y == w && s.seen && s.committed == s.x) return rebuild(s);
                    if (g.adjacent(u, y) && y != first_step) continue;
                    std::size_t committed = s.committed;
                    if (g.adjacent(w, y)) {
                        if (committed == none) committed = y;
                        else if (committed != y) continue;
                    }
                    const State t{y, committed, s.seen || y == v};
                    auto code = encode(t.x, t.committed, t.seen);
                    if (parent[code] != -2) continue;
                    parent[code] = static_cast<long>(encode(s.x, s.committed, s.seen));
                    next.push_back(t);
                }
            }
            frontier = std::move(next);
        }
    }
    return std::nullopt;
}

inline VertexSet oracle_interval(const Graph& g, const VertexSet& s, std::size_t cap = kOracleCap) {
    const auto n = g.order();
    if (n > cap) throw RefusalError("oracle limited to n <= " + std::to_string(cap));
    VertexSet out = s;
    for (auto a : s)
        for (auto b : s) {
            if (b <= a || g.adjacent(a, b)) continue;
            for (Vertex x = 0; x < n; ++x)
                if (!out.contains(x) && oracle_membership(g, a, b, x, std::nullopt, cap)) out.insert(x);
        }
    return out;
}

inline VertexSet oracle_hull(const Graph& g, const VertexSet& s, std::size_t cap = kOracleCap) {
    VertexSet cur = s;
    while (true) {
        VertexSet next = oracle_interval(g, cur, cap);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

inline VertexSet oracle_extreme(const Graph& g, std::size_t cap = kOracleCap) {
    const auto n = g.order();
    if (n > cap) throw RefusalError("oracle limited to n <= " + std::to_string(cap));
    VertexSet out(n);
    for (Vertex x = 0; x < n; ++x) {
        bool interior = false;
        for (Vertex a = 0; a < n && !interior; ++a)
            for (Vertex b = a + 1; b < n && !interior; ++b)
                if (a != x && b != x && !g.adjacent(a, b) && oracle_membership(g, a, b, x, std::nullopt, cap))
                    interior = true;
        if (!interior) out.insert(x);
    }
    return out;
}

} // namespace wtoll::oracle
