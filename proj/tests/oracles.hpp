#pragma once

#include <fmtlab/formula.hpp>
#include <fmtlab/structure.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

// Slow, obviously-correct reference implementations used as test oracles.
namespace oracle
{
    using fmtlab::Formula;
    using fmtlab::Structure;

    /// Every map from source to target, in lexicographic order.
    auto all_maps(int from, int to) -> std::vector<std::vector<int>>;

    auto preserves(const Structure & a, const Structure & b, const std::vector<int> & map) -> bool;
    auto count_homs(const Structure & a, const Structure & b) -> std::uint64_t;
    auto hom_exists(const Structure & a, const Structure & b) -> bool;
    auto injective_hom_exists(const Structure & a, const Structure & b) -> bool;

    /// Tries every colouring with k colours for k = 0, 1, ...
    auto chromatic_number(const Structure & g) -> int;

    /// Tries every permutation.
    auto isomorphic(const Structure & a, const Structure & b) -> bool;

    /// Assigns each vertex of G a branch-set label (or none) in every possible way.
    auto has_minor(const Structure & g, const Structure & h) -> bool;

    /// Floyd-Warshall in the Gaifman graph; -1 for unreachable.
    auto distances(const Structure & a) -> std::vector<std::vector<int>>;

    /// Tarski semantics straight off the syntax tree.
    auto satisfies(const Formula & f, const Structure & a, std::map<std::string, int> valuation = {}) -> bool;

    auto random_graph(std::mt19937_64 & rng, int n, double density) -> Structure;
    auto graph_from_mask(int n, std::uint64_t mask) -> Structure;
}
