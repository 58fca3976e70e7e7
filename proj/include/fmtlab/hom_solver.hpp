#pragma once

#include <fmtlab/homomorphism.hpp>
#include <fmtlab/structure.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmtlab
{
    /// Side constraints on a homomorphism search. An embedding is injective + strong.
    struct HomConstraints
    {
        bool injective = false;
        bool strong = false;
        bool full = false;
        /// Pre-assigned (source, target) pairs.
        std::vector<std::pair<int, int>> partial;

        static auto embedding() -> HomConstraints
        {
            HomConstraints c;
            c.injective = true;
            c.strong = true;
            return c;
        }
    };

    struct SolverOptions
    {
        /// Cap on search nodes; exceeding it throws BudgetExceeded.
        std::uint64_t node_budget = 100'000'000;
        /// Every permutation of the target domain is an automorphism (cliques),
        /// so among not-yet-used target values only the least needs trying.
        bool interchangeable_targets = false;
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t solutions = 0;
    };

    /// Calls visit on each solution in search order; visit returns false to stop.
    auto for_each_hom(const Structure & source, const Structure & target, const HomConstraints & constraints,
            const SolverOptions & options, const std::function<auto (const Mapping &) -> bool> & visit) -> SearchStats;

    auto find_hom(const Structure & source, const Structure & target, const HomConstraints & constraints = {},
            const SolverOptions & options = {}) -> std::optional<Homomorphism>;

    /// All constraint-satisfying homomorphisms, sorted lexicographically by map.
    auto enumerate_homs(const Structure & source, const Structure & target, const HomConstraints & constraints = {},
            const SolverOptions & options = {}) -> std::vector<Homomorphism>;

    auto count_homs(const Structure & source, const Structure & target, const HomConstraints & constraints = {},
            const SolverOptions & options = {}) -> std::uint64_t;

    auto hom_exists(const Structure & source, const Structure & target, const HomConstraints & constraints = {},
            const SolverOptions & options = {}) -> bool;

    auto complete_graph(int k) -> Structure;

    /// Least k admitting a homomorphism into K_k. Graph input only.
    auto chromatic_number(const Structure & graph, const SolverOptions & options = {}) -> int;

    /// Lexicographically least relation encoding over all relabellings that
    /// respect a colour-refinement ordering. Equal iff isomorphic.
    auto canonical_form(const Structure & s) -> std::vector<int>;

    /// Canonical forms up to 9 elements, backtracking (bijective strong hom) above.
    auto are_isomorphic(const Structure & a, const Structure & b) -> bool;

    /// Backtracking route regardless of size.
    auto are_isomorphic_by_search(const Structure & a, const Structure & b) -> bool;
}
