#pragma once

#include <fmtlab/formula.hpp>
#include <fmtlab/structure.hpp>

#include <span>
#include <string>

namespace fmtlab
{
    /// Replaces every dist<= r by a chain of r - 1 existential midpoints linked by
    /// adjacent-or-equal. Adjacency is E(u, v) over the graph vocabulary, and
    /// co-occurrence in some tuple of the vocabulary otherwise.
    auto to_pure_fo(const Formula & f, const Vocabulary & vocabulary) -> Formula;

    /// Capture-avoiding substitution of a free variable; bound variables that
    /// would capture the replacement are renamed.
    auto rename_free(const Formula & f, const std::string & from, const std::string & to) -> Formula;

    /// Bounds every quantifier to the radius-r ball around centre. A quantifier
    /// that rebinds centre has its variable renamed first.
    auto relativize(const Formula & f, const std::string & centre, int radius) -> Formula;

    /// exists x1..xn (pairwise dist > 2r, and each xi satisfies the local
    /// condition relativized to its r-ball). The condition has at most one free variable.
    auto basic_local(int radius, int width, const Formula & condition) -> Formula;

    /// exists x0..x(n-1) of the conjunction of A's tuples as atoms.
    auto canonical_query(const Structure & a) -> Formula;

    /// The structure pG over {E, P1..Pk, Q1..Qk}: edges at the p_i removed,
    /// P_i = {p_i}, Q_i = old neighbourhood of p_i. With k = 0 this is G itself.
    auto pbar_structure(const Structure & g, std::span<const int> p) -> Structure;

    /// The vocabulary {E/2, P1/1, .., Pk/1, Q1/1, .., Qk/1}; {E/2} for k = 0.
    auto pbar_vocabulary(int k) -> Vocabulary;

    /// Rewrites a graph formula so that G |= f iff pG |= interpret_k(f, k).
    /// Each E(x, y) becomes E(x, y) or (Pi(x) and Qi(y)) or (Pi(y) and Qi(x)).
    /// Distance bounds are expanded first since distances in pG differ.
    auto interpret_k(const Formula & f, int k) -> Formula;
}
