#include <doctest.h>

#include "oracles.hpp"

#include <fmtlab/error.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/hom_solver.hpp>
#include <fmtlab/operations.hpp>
#include <fmtlab/structure_io.hpp>

#include <random>

using namespace fmtlab;

namespace
{
    auto ternary() -> Structure
    {
        Vocabulary v{ { Symbol{ "R", 3 }, Symbol{ "P", 1 } } };
        return StructureBuilder{ v, 4 }.add("R", { 0, 1, 2 }).add("R", { 2, 2, 3 }).add("P", { 1 }).build();
    }
}

TEST_CASE("graph builder symmetrises edges and rejects loops")
{
    auto g = make_graph(3, { { 0, 1 }, { 2, 1 } });
    CHECK(g.is_graph());
    CHECK(g.holds(0, std::vector<int>{ 1, 0 }));
    CHECK(g.tuples(0).size() == 4);
    CHECK(g.degree(1) == 2);
    CHECK_THROWS_AS(StructureBuilder::graph(2).add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(StructureBuilder::graph(2).add_edge(0, 2), std::out_of_range);
}

TEST_CASE("tuples are sorted and deduplicated; arity is enforced")
{
    auto s = ternary();
    CHECK(s.tuples(0) == std::vector<Tuple>{ { 0, 1, 2 }, { 2, 2, 3 } });
    CHECK_FALSE(s.is_graph());
    CHECK_THROWS(StructureBuilder{ s.vocabulary(), 4 }.add("R", { 0, 1 }));
    CHECK_THROWS(StructureBuilder{ s.vocabulary(), 4 }.add("S", { 0 }));
}

TEST_CASE("gaifman graph joins co-occurring elements")
{
    auto g = gaifman_graph(ternary());
    CHECK(g.gaifman_edges() == std::vector<std::pair<int, int>>{ { 0, 1 }, { 0, 2 }, { 1, 2 }, { 2, 3 } });
    CHECK(distances_from(ternary(), 3) == std::vector<int>{ 2, 2, 1, 0 });
    CHECK(ball(ternary(), 3, 1) == std::vector<int>{ 2, 3 });
}

TEST_CASE("components and induced substructures")
{
    auto u = disjoint_union(cycle(3), path(2)).structure;
    CHECK(components(u) == std::vector<std::vector<int>>{ { 0, 1, 2 }, { 3, 4 } });
    std::vector<int> keep{ 0, 2, 4 };
    auto sub = induced_substructure(u, keep);
    CHECK(sub.original == keep);
    CHECK(sub.structure.gaifman_edges() == std::vector<std::pair<int, int>>{ { 0, 1 } });
    CHECK(sub.structure.label(2) == "p2");
    CHECK(is_substructure(sub.structure, u, SubstructureMode::induced, keep));
    CHECK(is_substructure(path(3), cycle(3), SubstructureMode::weak));
    CHECK_FALSE(is_substructure(path(3), cycle(3), SubstructureMode::induced));
    CHECK(is_substructure(cycle(3), u, SubstructureMode::free));
    CHECK_FALSE(is_substructure(path(2), path(3), SubstructureMode::free));
}

TEST_CASE("quotient projection is a full homomorphism")
{
    auto q = quotient(cycle(6), Partition{ 6 });
    CHECK(q.structure.size() == 6);
    std::vector<std::pair<int, int>> pairs{ { 0, 3 } };
    auto c = quotient(cycle(6), pairs);
    CHECK(c.structure.size() == 5);
    CHECK(c.projection.kind().full);
    std::vector<std::pair<int, int>> adjacent{ { 0, 1 } };
    CHECK_THROWS_AS(quotient(cycle(6), adjacent), LoopCreated);
}

TEST_CASE("free amalgam glues along the shared part only")
{
    std::vector<int> shared{ 0 };
    auto a = free_amalgam(cycle(3), cycle(4), shared);
    CHECK(a.structure.size() == 6);
    CHECK(a.structure.gaifman_edges().size() == 7);
    CHECK(is_homomorphism(cycle(4), a.structure, a.from_right));
    CHECK_THROWS_AS(free_amalgam(cycle(4), path(4), std::vector<int>{ 0, 3 }), PreconditionFailed);
    auto it = iterated_amalgam(wheel(5), shared, 3);
    CHECK(it.structure.size() == 3 * 6 - 2);
    CHECK(classify(it.structure, wheel(5), it.fold).full);
    for (auto & copy : it.copies)
        CHECK(classify(wheel(5), it.structure, copy).embedding);
}

TEST_CASE("iterated amalgam size formula and isomorphism on random structures")
{
    std::mt19937_64 rng{ 17 };
    for (int round = 0 ; round < 30 ; ++round) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto m = oracle::random_graph(rng, n, 0.5);
        std::vector<int> s;
        for (int v = 0 ; v < n ; ++v)
            if (rng() % 3 == 0)
                s.push_back(v);
        for (int copies = 1 ; copies <= 3 ; ++copies)
            CHECK(iterated_amalgam(m, s, copies).structure.size() == copies * n - (copies - 1) * static_cast<int>(s.size()));
        CHECK(oracle::isomorphic(iterated_amalgam(m, s, 1).structure, m));
    }
}

TEST_CASE("structure text format round-trips")
{
    for (auto & s : { gn(4), ternary(), wheel(5), Structure{} }) {
        auto text = format_structure(s);
        auto back = parse_structure(text);
        CHECK(back == s);
        CHECK(format_structure(back) == text);
    }
    auto labelled = parse_structure("graph 3\nedge 0 1\n# label 2 hub\n# a comment\n");
    CHECK(labelled.label(2) == "hub");
    CHECK(labelled.element("hub") == 2);
}

TEST_CASE("structure parse errors carry offsets")
{
    try {
        parse_structure("graph 3\nedge 0 x\n");
        FAIL("no error");
    }
    catch (const ParseError & e) {
        CHECK(e.position() > 7);
    }
    CHECK_THROWS_AS(parse_structure("vocab E/2\ndomain 2\ntuple E 0\n"), ParseError);
    CHECK_THROWS_AS(parse_structure("edge 0 1\n"), ParseError);
}
