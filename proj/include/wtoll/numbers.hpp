#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "atoms.hpp"
#include "combinations.hpp"
#include "graph.hpp"
#include "graph_algorithms.hpp"
#include "interval.hpp"
#include "twins.hpp"

namespace wtoll {

/// Which branch of the case analysis produced a result.
enum class CaseTag {
    Complete,
    PrimePair,
    ThreeExtremal,
    ExclusiveNotClique,
    TwoExtremalBothExtreme,
    TwoExtremalOneExtreme,
    TwoExtremalNoneExtreme,
    WtnK0,
    WtnK1,
    WtnK2,
    BruteForce,
    WtcPrimeClique,
    WtcExhaustive,
};

constexpr std::string_view to_string(CaseTag t) {
    switch (t) {
    case CaseTag::Complete: return "COMPLETE";
    case CaseTag::PrimePair: return "PRIME_PAIR";
    case CaseTag::ThreeExtremal: return "THREE_EXTREMAL";
    case CaseTag::ExclusiveNotClique: return "EXCLUSIVE_NOT_CLIQUE";
    case CaseTag::TwoExtremalBothExtreme: return "TWO_EXTREMAL_BOTH_EXTREME";
    case CaseTag::TwoExtremalOneExtreme: return "TWO_EXTREMAL_ONE_EXTREME";
    case CaseTag::TwoExtremalNoneExtreme: return "TWO_EXTREMAL_NONE_EXTREME";
    case CaseTag::WtnK0: return "WTN_K0";
    case CaseTag::WtnK1: return "WTN_K1";
    case CaseTag::WtnK2: return "WTN_K2";
    case CaseTag::BruteForce: return "BRUTE_FORCE";
    case CaseTag::WtcPrimeClique: return "WTC_PRIME_CLIQUE";
    case CaseTag::WtcExhaustive: return "WTC_EXHAUSTIVE";
    }
    return "UNKNOWN";
}

struct InvariantResult {
    std::size_t value = 0;
    VertexSet witness;
    CaseTag tag = CaseTag::BruteForce;
    /// Sizes of the two extremal exclusive sets, set by the two-extremal branches of wth.
    std::optional<std::pair<std::size_t, std::size_t>> exclusive_sizes;
    /// Extreme twin classes used by wtn (k = size).
    std::vector<VertexSet> extreme_classes;
};

struct WtnOptions {
    /// Swapping two true twins is an automorphism, so only candidate sets
    /// whose members are a least-identifier prefix of each twin class are
    /// tested. Both the value and the lexicographically least witness are
    /// unchanged.
    bool twin_pruning = true;
};

/// Weakly toll interval number of a connected graph, with a minimum interval set.
///
/// With k extreme twin classes (k <= 2) the minimum interval set is their
/// union plus 2..8, 1..5 or 0..2 further vertices for k = 0, 1, 2. Candidate
/// sets are tried by increasing size, lexicographically within a size.
inline InvariantResult wtn(const Graph& g, const WtnOptions& opts = {}) {
    require_connected(g);
    const auto n = g.order();
    if (is_complete(g)) return {n, g.vertices(), CaseTag::Complete, std::nullopt, {}};

    const auto twins = twin_classes(g);
    const auto ext = extreme_twin_classes(g, twins);
    VertexSet base(n);
    std::vector<VertexSet> ext_classes;
    for (auto c : ext.classes) {
        base |= twins.classes[c];
        ext_classes.push_back(twins.classes[c]);
    }

    const std::vector<Vertex> pool = (~base).to_vector();
    // previous_twin[v]: the next smaller member of v's class, or n.
    std::vector<Vertex> previous_twin(n, n);
    for (const auto& c : twins.classes) {
        Vertex prev = n;
        for (auto v : c) {
            previous_twin[v] = prev;
            prev = v;
        }
    }

    static constexpr std::size_t lo[] = {2, 1, 0};
    static constexpr std::size_t hi[] = {8, 5, 2};
    static constexpr CaseTag tags[] = {CaseTag::WtnK0, CaseTag::WtnK1, CaseTag::WtnK2};
    const auto k = ext.classes.size();
    const VertexSet all = g.vertices();

    for (std::size_t extra = lo[k]; extra <= hi[k]; ++extra) {
        std::optional<VertexSet> found;
        for_each_combination(pool, extra, [&](const std::vector<Vertex>& xs) {
            VertexSet s = base;
            for (auto x : xs) s.insert(x);
            if (opts.twin_pruning)
                for (auto x : xs)
                    if (previous_twin[x] < n && !s.contains(previous_twin[x])) return false;
            if (interval(g, s) == all) {
                found = std::move(s);
                return true;
            }
            return false;
        });
        if (found) return {found->size(), std::move(*found), tags[k], std::nullopt, std::move(ext_classes)};
    }
    throw InternalError("wtn: no interval set within the bound for k=" + std::to_string(k));
}

namespace detail {

inline std::optional<std::pair<Vertex, Vertex>> least_nonadjacent_pair(const Graph& g, const VertexSet& s) {
    for (auto a : s)
        for (auto b : s)
            if (a < b && !g.adjacent(a, b)) return std::pair{a, b};
    return std::nullopt;
}

inline InvariantResult certified_hull_result(const Graph& g, VertexSet witness, CaseTag tag,
                                             std::optional<std::pair<std::size_t, std::size_t>> sizes = {}) {
    if (hull(g, witness) != g.vertices())
        throw InternalError(std::string("wth: witness for ") + std::string(to_string(tag)) + " is not a hull set");
    auto value = witness.size();
    return {value, std::move(witness), tag, sizes, {}};
}

} // namespace detail

/// Weakly toll hull number of a connected graph, with a minimum hull set.
/// Uses the atom decomposition; only the two-extremal-atom case needs
/// extremeness tests. Every witness is checked with a hull computation.
inline InvariantResult wth(const Graph& g) {
    require_connected(g);
    const auto n = g.order();
    if (is_complete(g)) return {n, g.vertices(), CaseTag::Complete, std::nullopt, {}};

    const auto d = decompose(g);
    if (d.atoms.size() == 1) {
        auto [a, b] = *detail::least_nonadjacent_pair(g, g.vertices());
        return detail::certified_hull_result(g, VertexSet(n, {a, b}), CaseTag::PrimePair);
    }

    std::vector<std::size_t> ext;
    for (std::size_t i = 0; i < d.atoms.size(); ++i)
        if (d.extremal[i]) ext.push_back(i);
    if (ext.size() < 2) throw InternalError("wth: reducible graph with fewer than two extremal atoms");

    if (ext.size() >= 3)
        return detail::certified_hull_result(
            g, VertexSet(n, {d.exclusive[ext[0]].first(), d.exclusive[ext[1]].first()}), CaseTag::ThreeExtremal);

    for (auto i : ext) {
        if (is_clique(g, d.exclusive[i])) continue;
        // Exclusive vertices with a neighbor in the shared clique never form a clique here.
        VertexSet border(n);
        for (auto v : d.exclusive[i])
            if (g.open_neighborhood(v).intersects(d.shared[i])) border.insert(v);
        auto pair = detail::least_nonadjacent_pair(g, border);
        if (!pair) throw InternalError("wth: exclusive border of a non-clique extremal atom is a clique");
        return detail::certified_hull_result(g, VertexSet(n, {pair->first, pair->second}),
                                             CaseTag::ExclusiveNotClique);
    }

    auto pick = [&](std::size_t i) {
        if (is_clique(g, d.atoms[i])) return d.exclusive[i].first();
        for (auto v : d.exclusive[i])
            if (!d.shared[i].is_subset_of(g.open_neighborhood(v))) return v;
        throw InternalError("wth: non-complete extremal atom without an exclusive vertex missing a shared neighbor");
    };
    const auto m1 = ext[0], m2 = ext[1];
    const Vertex u1 = pick(m1), u2 = pick(m2);
    const bool e1 = is_extreme(g, u1), e2 = is_extreme(g, u2);
    const std::pair sizes{d.exclusive[m1].size(), d.exclusive[m2].size()};

    if (e1 && e2)
        return detail::certified_hull_result(g, d.exclusive[m1] | d.exclusive[m2], CaseTag::TwoExtremalBothExtreme,
                                             sizes);
    if (e1) {
        VertexSet w = d.exclusive[m1];
        w.insert(u2);
        return detail::certified_hull_result(g, std::move(w), CaseTag::TwoExtremalOneExtreme, sizes);
    }
    if (e2) {
        VertexSet w = d.exclusive[m2];
        w.insert(u1);
        return detail::certified_hull_result(g, std::move(w), CaseTag::TwoExtremalOneExtreme, sizes);
    }
    return detail::certified_hull_result(g, VertexSet(n, {u1, u2}), CaseTag::TwoExtremalNoneExtreme, sizes);
}

namespace detail {

template <typename Closure>
InvariantResult brute_force_min(const Graph& g, std::size_t cap, Closure&& closure) {
    require_connected(g);
    const auto n = g.order();
    if (n > cap)
        throw RefusalError("brute force limited to n <= " + std::to_string(cap) + ", got n=" + std::to_string(n));
    const VertexSet all = g.vertices();
    const auto pool = all.to_vector();
    for (std::size_t k = 0; k <= n; ++k) {
        std::optional<VertexSet> found;
        for_each_combination(pool, k, [&](const std::vector<Vertex>& xs) {
            auto s = VertexSet::from(n, xs);
            if (closure(s) == all) {
                found = std::move(s);
                return true;
            }
            return false;
        });
        if (found) return {k, std::move(*found), CaseTag::BruteForce, std::nullopt, {}};
    }
    throw InternalError("brute force: V itself failed to cover V");
}

} // namespace detail

inline constexpr std::size_t kBruteForceCap = 10;

/// Exact wtn by subset enumeration in increasing size. Test oracle.
inline InvariantResult brute_force_wtn(const Graph& g, std::size_t cap = kBruteForceCap) {
    return detail::brute_force_min(g, cap, [&](const VertexSet& s) { return interval(g, s); });
}

/// Exact wth by subset enumeration in increasing size. Test oracle.
inline InvariantResult brute_force_wth(const Graph& g, std::size_t cap = kBruteForceCap) {
    return detail::brute_force_min(g, cap, [&](const VertexSet& s) { return hull(g, s); });
}

} // namespace wtoll
