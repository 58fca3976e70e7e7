#pragma once

#include <fmtlab/homomorphism.hpp>
#include <fmtlab/operations.hpp>
#include <fmtlab/structure.hpp>

#include <string_view>
#include <vector>

namespace fmtlab
{
    /// Vertices c1..cn in cyclic order.
    auto cycle(int n) -> Structure;
    auto path(int n) -> Structure;
    auto clique(int n) -> Structure;
    auto biclique(int a, int b) -> Structure;

    /// Apex 0, then the cycles in order; vertex j of cycle i is labelled c<i>_<j>.
    auto bouquet(const std::vector<int> & cycle_lengths) -> Structure;
    auto wheel(int n) -> Structure;

    /// W_n with one extra vertex c adjacent to the apex only.
    auto wheel_with_pendant(int n) -> Structure;

    /// v1 = 0, v2 = 1, a_i = 1 + i, b_i = 1 + n + i (1-based i).
    auto gn(int n) -> Structure;
    auto dn(int n) -> Structure;

    /// G_n / (a1, an), G_n / (a1, bn) and G_n / (b1, bn) with their quotient maps.
    auto an_quotient(int n) -> Quotient;
    auto bn_quotient(int n) -> Quotient;
    auto cn_quotient(int n) -> Quotient;
    auto an(int n) -> Structure;
    auto bn(int n) -> Structure;
    auto cn(int n) -> Structure;

    /// Ids of v1, v2, a_i, b_i in G_n and D_n.
    auto gn_v(int j) -> int;
    auto gn_a(int n, int i) -> int;
    auto gn_b(int n, int i) -> int;

    /// Parses cycle:n, clique:n, biclique:a,b, wheel:n, bouquet:n1+n2+..,
    /// gn:n, dn:n, an:n, bn:n, cn:n.
    auto gen(std::string_view spec) -> Structure;

    /// G_n -> D_m wrapping a_i to a_((i-1) mod m)+1 and likewise for b_i.
    auto delta_hom(int n, int m) -> Homomorphism;

    /// Membership in the closure of the odd wheels W_5, W_7, .. under subgraphs
    /// and disjoint unions. A component qualifies iff removing some vertex leaves
    /// a linear forest or a single odd cycle of length at least 5.
    auto in_class_C(const Structure & g) -> bool;

    /// Some component is a vertex adjacent to all the others, which induce a 2-regular graph.
    auto bouquet_oracle(const Structure & g) -> bool;
}
