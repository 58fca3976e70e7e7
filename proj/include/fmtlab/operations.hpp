#pragma once

#include <fmtlab/homomorphism.hpp>
#include <fmtlab/structure.hpp>

#include <optional>
#include <span>
#include <vector>

namespace fmtlab
{
    /// The graph on domain(A) joining distinct elements that co-occur in a tuple.
    auto gaifman_graph(const Structure & a) -> Structure;

    /// BFS distances in the Gaifman graph; -1 for unreachable elements.
    auto distances_from(const Structure & a, int source) -> std::vector<int>;

    /// Elements at Gaifman distance at most radius from centre, ascending.
    auto ball(const Structure & a, int centre, int radius) -> std::vector<int>;

    /// Connected components of the Gaifman graph, each ascending, ordered by least element.
    auto components(const Structure & a) -> std::vector<std::vector<int>>;

    struct Induced
    {
        Structure structure;
        /// original id of each element of the substructure
        std::vector<int> original;
    };

    /// A[S]: the subset is re-indexed in ascending order; labels are carried over.
    auto induced_substructure(const Structure & a, std::span<const int> subset) -> Induced;

    /// Structure with the given elements removed.
    auto remove_elements(const Structure & a, std::span<const int> removed) -> Induced;

    enum class SubstructureMode
    {
        weak,
        induced,
        free
    };

    /// Whether the given injection of B into A witnesses B as a substructure of A.
    auto is_substructure(const Structure & b, const Structure & a, SubstructureMode mode,
            const Mapping & inclusion) -> bool;

    /// Searches all injections of B into A for a witness.
    auto is_substructure(const Structure & b, const Structure & a, SubstructureMode mode) -> bool;

    struct Union
    {
        Structure structure;
        Mapping left, right;
    };

    /// A + B; A keeps ids 0..|A|-1 and B is shifted by |A|.
    auto disjoint_union(const Structure & a, const Structure & b) -> Union;

    struct Quotient
    {
        Structure structure;
        Homomorphism projection;
    };

    /// A/P. Classes are numbered by least element; labels of least elements survive.
    /// For graph-mode A the result is a graph and identifying adjacent
    /// vertices throws LoopCreated.
    auto quotient(const Structure & a, const Partition & partition) -> Quotient;
    auto quotient(const Structure & a, std::span<const std::pair<int, int>> identified) -> Quotient;

    struct Amalgam
    {
        Structure structure;
        /// the injective homomorphisms A -> A (+)_S B and B -> A (+)_S B
        Mapping from_left, from_right;
    };

    /// Free amalgam over a shared part: shared_left[i] in A is glued to shared_right[i] in B.
    /// Requires A[S] = B[S] under that identification.
    auto free_amalgam(const Structure & a, const Structure & b,
            std::span<const int> shared_left, std::span<const int> shared_right) -> Amalgam;

    /// Free amalgam of two structures whose shared part has the same ids in both.
    auto free_amalgam(const Structure & a, const Structure & b, std::span<const int> shared) -> Amalgam;

    struct IteratedAmalgam
    {
        Structure structure;
        /// copies[i] maps M into its i-th copy
        std::vector<Mapping> copies;
        /// the full homomorphism folding every copy back onto M
        Mapping fold;
    };

    /// M (+)_S M (+)_S ... (+)_S M with n copies; size n|M| - (n-1)|S|.
    auto iterated_amalgam(const Structure & m, std::span<const int> shared, int copies) -> IteratedAmalgam;
}
