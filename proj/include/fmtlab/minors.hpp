#pragma once

#include <fmtlab/structure.hpp>

#include <cstdint>
#include <optional>
#include <string_view>

namespace fmtlab
{
    struct MinorOptions
    {
        /// Cap on branch-set search nodes; exceeding it throws BudgetExceeded.
        std::uint64_t node_budget = 100'000'000;
        /// Component, block, 2-separator, leaf and degree-2 reductions.
        bool reductions = true;
        /// Refute via planarity: H non-planar and G planar, or H plus an apex
        /// non-planar and G plus an apex planar.
        bool planarity_refutation = true;
    };

    auto pattern_k4() -> Structure;
    auto pattern_k5() -> Structure;
    auto pattern_k33() -> Structure;
    auto pattern_k23() -> Structure;

    /// k4, k5, k33, k23.
    auto pattern_by_name(std::string_view name) -> std::optional<Structure>;

    /// Whether H is a minor of G, both taken as (Gaifman) graphs. Decided by
    /// partitioning vertex sets into connected branch sets whose contraction
    /// contains H.
    auto has_minor(const Structure & g, const Structure & h, const MinorOptions & options = {}) -> bool;

    /// No K5 and no K3,3 minor.
    auto is_planar(const Structure & g, const MinorOptions & options = {}) -> bool;

    /// No K4 and no K2,3 minor.
    auto is_outerplanar(const Structure & g, const MinorOptions & options = {}) -> bool;

    /// Boyer-Myrvold planarity of the Gaifman graph.
    auto planarity_test(const Structure & g) -> bool;
}
