#pragma once

#include <fmtlab/structure.hpp>

#include <string>
#include <utility>
#include <vector>

namespace fmtlab
{
    /// Bags of elements joined by tree edges (indices into bags).
    struct TreeDecomposition
    {
        std::vector<std::vector<int>> bags;
        std::vector<std::pair<int, int>> edges;

        /// Largest bag size minus one; -1 without bags.
        auto width() const -> int;
    };

    /// Empty when valid, otherwise the first axiom that fails.
    /// Throws std::invalid_argument for a malformed decomposition (bad ids, not a tree).
    auto explain_tree_decomposition(const Structure & g, const TreeDecomposition & t) -> std::string;

    /// Bags cover every element and every Gaifman edge, and the bags holding
    /// any one element form a subtree.
    auto validate_tree_decomposition(const Structure & g, const TreeDecomposition & t) -> bool;

    /// Width 3 path decomposition of wheel(n): bags {apex, c1, ci, c(i+1)}.
    auto wheel_decomposition(int n) -> TreeDecomposition;

    /// A single bag holding the whole domain.
    auto trivial_decomposition(const Structure & g) -> TreeDecomposition;
}
