#pragma once

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "interval.hpp"

namespace wtoll {

/// Partition of V into true-twin classes (equal closed neighborhoods).
/// Classes are ordered by least member.
struct TwinPartition {
    std::vector<VertexSet> classes;
    std::vector<std::size_t> class_of;

    const VertexSet& class_containing(Vertex v) const { return classes.at(class_of.at(v)); }
};

inline TwinPartition twin_classes(const Graph& g) {
    const auto n = g.order();
    TwinPartition p;
    p.class_of.assign(n, 0);
    std::map<std::vector<VertexSet::Word>, std::size_t> index;
    for (Vertex v = 0; v < n; ++v) {
        auto [it, fresh] = index.try_emplace(g.closed_neighborhood(v).words(), p.classes.size());
        if (fresh) p.classes.emplace_back(n);
        p.classes[it->second].insert(v);
        p.class_of[v] = it->second;
    }
    return p;
}

/// One vertex (the least) from each twin class meeting s.
inline VertexSet representatives(const TwinPartition& p, const VertexSet& s) {
    VertexSet out(s.universe());
    for (const auto& c : p.classes) {
        auto x = (c & s).first();
        if (x < s.universe()) out.insert(x);
    }
    return out;
}

struct ExtremeClasses {
    std::vector<std::size_t> classes;
    /// Classes where only some members are extreme.
    std::vector<std::string> warnings;
};

/// Twin classes made up entirely of extreme vertices. A connected graph has at
/// most two; finding more throws InternalError.
inline ExtremeClasses extreme_twin_classes(const Graph& g, const TwinPartition& p) {
    require_connected(g);
    if (is_complete(g)) throw ArgumentError("extreme_twin_classes: graph must not be complete");
    const VertexSet ext = extreme_vertices(g);
    ExtremeClasses out;
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        const auto& c = p.classes[i];
        if (c.is_subset_of(ext)) {
            out.classes.push_back(i);
        } else if (c.intersects(ext)) {
            out.warnings.push_back("twin class " + std::to_string(i) + " is only partly extreme");
        }
    }
    if (out.classes.size() > 2)
        throw InternalError("found " + std::to_string(out.classes.size()) +
                            " extreme twin classes; a connected graph has at most 2");
    return out;
}

} // namespace wtoll
