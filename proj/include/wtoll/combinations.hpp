#pragma once

#include <cstddef>
#include <vector>

#include "vertex_set.hpp"

namespace wtoll {

/// Calls f(chosen) for every k-subset of pool in lexicographic order of
/// positions, stopping early when f returns true. Returns whether it stopped.
template <typename F>
bool for_each_combination(const std::vector<Vertex>& pool, std::size_t k, F&& f) {
    if (k > pool.size()) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Vertex> chosen(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
        if (f(static_cast<const std::vector<Vertex>&>(chosen))) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace wtoll
