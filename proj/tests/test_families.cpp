#include <doctest.h>

#include "oracles.hpp"

#include <fmtlab/families.hpp>
#include <fmtlab/hom_solver.hpp>
#include <fmtlab/minors.hpp>
#include <fmtlab/operations.hpp>

#include <random>

using namespace fmtlab;

namespace
{
    auto subgraph_of_odd_wheel(const Structure & component) -> bool
    {
        int k = component.size();
        for (int n = 5 ; n <= std::max(5, k + 1) ; n += 2)
            if (hom_exists(component, wheel(n), HomConstraints{ .injective = true, .partial = {} }))
                return true;
        return false;
    }

    // Membership in the closure of odd wheels, via embeddings of each component.
    auto class_oracle(const Structure & g) -> bool
    {
        for (auto & comp : components(g))
            if (comp.size() > 1 && ! subgraph_of_odd_wheel(induced_substructure(g, comp).structure))
                return false;
        return true;
    }
}

TEST_CASE("family sizes and edge counts")
{
    CHECK(cycle(7).gaifman_edges().size() == 7);
    CHECK(path(4).gaifman_edges().size() == 3);
    CHECK(clique(5).gaifman_edges().size() == 10);
    CHECK(biclique(2, 3).gaifman_edges().size() == 6);
    CHECK(wheel(9).size() == 10);
    CHECK(wheel(9).gaifman_edges().size() == 18);
    CHECK(bouquet({ 5, 7 }).size() == 13);
    CHECK(bouquet({ 5, 7 }).degree(0) == 12);
    CHECK(wheel_with_pendant(5).size() == 7);
    for (int n = 3 ; n <= 9 ; ++n) {
        CHECK(gn(n).size() == 2 * n + 2);
        CHECK(gn(n).gaifman_edges().size() == static_cast<size_t>(3 * n + 3 * (n - 1)));
        CHECK(dn(n).gaifman_edges().size() == static_cast<size_t>(6 * n));
        CHECK(an(n).size() == 2 * n + 1);
    }
}

TEST_CASE("labels follow the naming scheme")
{
    auto g = gn(4);
    CHECK(g.label(gn_v(1)) == "v1");
    CHECK(g.label(gn_a(4, 3)) == "a3");
    CHECK(g.element("b2") == gn_b(4, 2));
    CHECK(g.adjacent(g.element("a2"), g.element("b1")));
    CHECK_FALSE(g.adjacent(g.element("a1"), g.element("b2")));
    CHECK(wheel(5).label(0) == "apex");
    CHECK(bouquet({ 3, 4 }).label(5) == "c2_2");
    CHECK(an(5).label(gn_a(5, 1)) == "a1");
    CHECK_FALSE(an(5).find_label("a5"));
}

TEST_CASE("gen parses family specifications")
{
    CHECK(gen("wheel:9") == wheel(9));
    CHECK(gen("biclique:2,3") == biclique(2, 3));
    CHECK(gen("bouquet:5+7") == bouquet({ 5, 7 }));
    CHECK(gen("dn:6") == dn(6));
    for (auto bad : { "wheel", "wheel:x", "wheel:2", "unknown:3", "biclique:2", "bouquet:5+", "cycle:3x" })
        CHECK_THROWS_AS(gen(bad), std::invalid_argument);
}

TEST_CASE("D_n and its quotients are planar and 4-chromatic, K4-free for large enough n")
{
    auto has_k4 = [](const Structure & g) {
        return hom_exists(clique(4), g, HomConstraints{ .injective = true, .partial = {} });
    };
    for (int n = 3 ; n <= 7 ; ++n) {
        for (auto & g : { gn(n), dn(n), an(n), bn(n), cn(n) }) {
            CHECK(planarity_test(g));
            CHECK(chromatic_number(g) == 4);
        }
        CHECK(has_k4(dn(n)) == (n == 3));
        CHECK(has_k4(bn(n)) == (n == 3));
        CHECK(has_k4(an(n)) == (n <= 4));
        CHECK(has_k4(cn(n)) == (n <= 4));
    }
}

TEST_CASE("delta homomorphisms wrap the rungs")
{
    auto f = delta_hom(8, 4);
    CHECK(f(gn_a(8, 5)) == gn_a(4, 1));
    CHECK(f(gn_b(8, 8)) == gn_b(4, 4));
    CHECK(f.kind().surjective);
    CHECK(delta_hom(6, 6).kind().injective);
    CHECK_THROWS(delta_hom(4, 5));
    CHECK_THROWS(delta_hom(4, 2));
    CHECK(an_quotient(5).projection.kind().full);
}

TEST_CASE("class membership agrees with embeddings into odd wheels")
{
    std::mt19937_64 rng{ 31 };
    for (int round = 0 ; round < 200 ; ++round) {
        auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.25 + 0.1 * static_cast<double>(rng() % 4));
        CHECK(in_class_C(g) == class_oracle(g));
    }
    for (int n : { 5, 7, 9 })
        CHECK(in_class_C(wheel(n)));
    CHECK_FALSE(in_class_C(wheel(4)));
    CHECK_FALSE(in_class_C(clique(4)));
    CHECK_FALSE(in_class_C(wheel_with_pendant(5)));
    CHECK(in_class_C(disjoint_union(wheel(5), cycle(4)).structure));
    CHECK(in_class_C(wheel(6)) == class_oracle(wheel(6)));
}

TEST_CASE("bouquet oracle")
{
    CHECK(bouquet_oracle(wheel(5)));
    CHECK(bouquet_oracle(bouquet({ 3, 4, 5 })));
    CHECK(bouquet_oracle(disjoint_union(wheel(4), path(3)).structure));
    CHECK_FALSE(bouquet_oracle(wheel_with_pendant(5)));
    CHECK_FALSE(bouquet_oracle(cycle(5)));
    CHECK_FALSE(bouquet_oracle(path(2)));
}
