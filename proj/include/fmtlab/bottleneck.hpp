#pragma once

#include <fmtlab/structure.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fmtlab
{
    struct Bottleneck
    {
        /// r-independent in the structure with S deleted; ids of the original structure.
        std::vector<int> independent;
        std::vector<int> removed;
        /// Every element of A is adjacent to every element of S.
        bool complete_bipartite = false;
    };

    struct BottleneckOptions
    {
        /// Largest |S| tried.
        int cap = 3;
        /// Up to this many remaining elements, a maximum r-independent set is
        /// computed exactly when the greedy one is too small.
        int exact_limit = 64;
        std::uint64_t node_budget = 100'000'000;
    };

    /// Whether the elements are pairwise at Gaifman distance > r once removed is deleted.
    auto is_r_independent(const Structure & g, std::span<const int> elements, int r,
            std::span<const int> removed = {}) -> bool;

    /// Largest r-independent set found in the structure minus removed: greedy,
    /// then exact branch and bound when small enough. Stops early at target.
    auto r_independent_set(const Structure & g, int r, std::span<const int> removed, int target,
            const BottleneckOptions & options = {}) -> std::vector<int>;

    /// Tries S in order of size 0..cap, lexicographically within a size, and
    /// returns the first with an r-independent A of size >= m in G - S.
    auto find_bottleneck(const Structure & g, int r, int m, const BottleneckOptions & options = {})
        -> std::optional<Bottleneck>;
}
