#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "graph_algorithms.hpp"

namespace wtoll {

/// Clique-separator decomposition: the maximal prime subgraphs (atoms) of a
/// connected graph, each given by its vertex set, sorted by least member.
struct AtomDecomposition {
    std::vector<VertexSet> atoms;
    /// Per atom: members that lie in at least one other atom.
    std::vector<VertexSet> shared;
    /// Per atom: members that lie in no other atom.
    std::vector<VertexSet> exclusive;
    std::vector<bool> extremal;
    /// For an extremal atom i, an atom j whose intersection with i contains
    /// every other intersection with i.
    std::vector<std::optional<std::size_t>> extremal_partner;
};

namespace detail {

struct MinimalOrdering {
    std::vector<Vertex> order;          // order[k] is the (k+1)-th eliminated vertex
    std::vector<VertexSet> higher_adj;  // neighbors in the triangulation with later elimination
    VertexSet generators;               // vertices whose higher_adj is a minimal separator
};

// MCS-M: a minimal elimination ordering together with the vertices at which
// the maximum label fails to increase, which mark the minimal separators of
// the triangulation.
inline MinimalOrdering mcs_m(const Graph& g) {
    const auto n = g.order();
    MinimalOrdering out{std::vector<Vertex>(n), std::vector<VertexSet>(n, VertexSet(n)), VertexSet(n)};
    std::vector<std::size_t> label(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<bool> reached(n, false);
    std::vector<std::vector<Vertex>> buckets(n + 1);
    std::vector<Vertex> update;
    long previous = -1;

    for (std::size_t i = n; i-- > 0;) {
        Vertex x = n;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered[v] && (x == n || label[v] > label[x])) x = v;
        if (static_cast<long>(label[x]) <= previous) out.generators.insert(x);
        previous = static_cast<long>(label[x]);
        numbered[x] = true;
        out.order[i] = x;

        std::fill(reached.begin(), reached.end(), false);
        reached[x] = true;
        update.clear();
        for (auto y : g.neighbors(x))
            if (!numbered[y]) {
                reached[y] = true;
                buckets[label[y]].push_back(y);
                update.push_back(y);
            }
        for (std::size_t j = 0; j <= n; ++j) {
            while (!buckets[j].empty()) {
                auto y = buckets[j].back();
                buckets[j].pop_back();
                for (auto z : g.neighbors(y)) {
                    if (numbered[z] || reached[z]) continue;
                    reached[z] = true;
                    if (label[z] > j) {
                        buckets[label[z]].push_back(z);
                        update.push_back(z);
                    } else {
                        buckets[j].push_back(z);
                    }
                }
            }
        }
        for (auto y : update) {
            ++label[y];
            out.higher_adj[y].insert(x);
        }
    }
    return out;
}

} // namespace detail

/// Atom indices i for which some other atom j satisfies
/// A_i & A_k  subset of  A_i & A_j  for every k != i.
/// Returns the list and, per atom, the partner j (when extremal).
inline std::vector<std::size_t> extremal_atoms(const AtomDecomposition& d,
                                               std::vector<std::optional<std::size_t>>* partners = nullptr) {
    const auto count = d.atoms.size();
    std::vector<std::size_t> out;
    if (partners) partners->assign(count, std::nullopt);
    if (count < 2) return out;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (j == i) continue;
            const VertexSet dominant = d.atoms[i] & d.atoms[j];
            bool ok = true;
            for (std::size_t k = 0; k < count && ok; ++k)
                if (k != i && !(d.atoms[i] & d.atoms[k]).is_subset_of(dominant)) ok = false;
            if (ok) {
                out.push_back(i);
                if (partners) (*partners)[i] = j;
                break;
            }
        }
    }
    return out;
}

/// Decomposes a connected graph into its atoms along clique minimal separators.
inline AtomDecomposition decompose(const Graph& g) {
    require_connected(g);
    const auto n = g.order();
    AtomDecomposition d;
    const auto meo = detail::mcs_m(g);

    VertexSet remaining = g.vertices();
    for (auto x : meo.order) {
        if (!meo.generators.contains(x)) continue;
        const VertexSet& sep = meo.higher_adj[x];
        if (!is_clique(g, sep)) continue;
        VertexSet removed = ~remaining | sep;
        VertexSet comp = reachable_from(g, x, removed);
        if (comp.empty()) continue;
        d.atoms.push_back(comp | sep);
        remaining -= comp;
    }
    if (!remaining.empty()) d.atoms.push_back(remaining);

    std::sort(d.atoms.begin(), d.atoms.end(), [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });

    std::vector<std::size_t> hits(n, 0);
    for (const auto& a : d.atoms)
        for (auto v : a) ++hits[v];
    for (const auto& a : d.atoms) {
        VertexSet sh(n);
        for (auto v : a)
            if (hits[v] > 1) sh.insert(v);
        d.shared.push_back(sh);
        d.exclusive.push_back(a - sh);
    }
    d.extremal.assign(d.atoms.size(), false);
    for (auto i : extremal_atoms(d, &d.extremal_partner)) d.extremal[i] = true;
    return d;
}

/// True iff the connected graph g has no clique separator.
inline bool is_prime(const Graph& g) { return decompose(g).atoms.size() <= 1; }

} // namespace wtoll
