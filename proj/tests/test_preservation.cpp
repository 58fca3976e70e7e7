#include <doctest.h>

#include "oracles.hpp"

#include <fmtlab/builtins.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/evaluate.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/minors.hpp>
#include <fmtlab/operations.hpp>
#include <fmtlab/preservation.hpp>
#include <fmtlab/suites.hpp>
#include <fmtlab/transform.hpp>

#include <random>

using namespace fmtlab;

namespace
{
    auto any_graph(const Structure &) -> bool
    {
        return true;
    }

    auto without_edge(const Structure & g, int u, int v) -> Structure
    {
        auto b = StructureBuilder::graph(g.size());
        for (auto [x, y] : g.gaifman_edges())
            if (std::pair{ x, y } != std::pair{ std::min(u, v), std::max(u, v) })
                b.add_edge(x, y);
        return b.build();
    }

    // Direct double loop: every proper non-empty subset, evaluated outright.
    auto minimal_by_double_loop(const Formula & phi, const Structure & m, const ClassFilter & in_class) -> bool
    {
        int n = m.size();
        for (std::uint64_t mask = 1 ; mask + 1 < (std::uint64_t{ 1 } << n) ; ++mask) {
            std::vector<int> s;
            for (int v = 0 ; v < n ; ++v)
                if (mask >> v & 1)
                    s.push_back(v);
            auto sub = induced_substructure(m, s).structure;
            if (in_class(sub) && oracle::satisfies(phi, sub))
                return false;
        }
        return true;
    }
}

TEST_CASE("minimal induced models")
{
    auto r = is_minimal_induced_model(phi_bouquet(), wheel(5), in_class_C);
    CHECK(r.minimal);
    CHECK_FALSE(r.partial);
    CHECK(r.subsets == 62);
    CHECK(is_minimal_induced_model(parse_formula("(exists x (exists y (rel E x y)))"), path(2), any_graph).minimal);
    auto bigger = is_minimal_induced_model(parse_formula("(exists x (exists y (rel E x y)))"), path(3), any_graph);
    CHECK_FALSE(bigger.minimal);
    REQUIRE(bigger.smaller_model);
    CHECK(bigger.smaller_model->size() == 2);
    CHECK_THROWS_AS(is_minimal_induced_model(phi_bouquet(), cycle(5), in_class_C), PreconditionFailed);

    MinimalityOptions small;
    small.subset_limit = 4;
    CHECK_THROWS_AS(is_minimal_induced_model(phi_bouquet(), wheel(5), in_class_C, small), BudgetExceeded);

    MinimalityOptions deletion;
    deletion.mode = MinimalityMode::deletion;
    auto partial = is_minimal_induced_model(phi_bouquet(), wheel(7), in_class_C, deletion);
    CHECK(partial.minimal);
    CHECK(partial.partial);
    CHECK(partial.subsets == 8);
}

TEST_CASE("exhaustive minimality agrees with the double-loop oracle")
{
    for (auto & m : { wheel(5), bouquet({ 3, 4 }), wheel_with_pendant(4), disjoint_union(wheel(5), path(2)).structure })
        if (evaluate(phi_bouquet(), m))
            CHECK(is_minimal_induced_model(phi_bouquet(), m, in_class_C).minimal
                    == minimal_by_double_loop(phi_bouquet(), m, in_class_C));
    auto planar = [](const Structure & g) { return is_planar(g); };
    CHECK(is_minimal_induced_model(phi_hat(), dn(4), planar).minimal == minimal_by_double_loop(phi_hat(), dn(4), planar));
}

TEST_CASE("proxy mode spot checks the proxy")
{
    MinimalityOptions proxy;
    proxy.mode = MinimalityMode::proxy;
    proxy.proxy = bouquet_oracle;
    proxy.spot_check_rate = 1.0;
    auto r = is_minimal_induced_model(phi_bouquet(), wheel(7), in_class_C, proxy);
    CHECK(r.minimal);
    CHECK(r.spot_checks == r.subsets);
    CHECK_FALSE(r.proxy_mismatch);

    proxy.proxy = [](const Structure &) { return false; };
    auto lying = is_minimal_induced_model(phi_bouquet(), bouquet({ 3, 3 }), any_graph, proxy);
    CHECK(lying.proxy_mismatch);
    CHECK_FALSE(lying.minimal);
}

TEST_CASE("preservation checking")
{
    auto in_class = check_preservation(phi_bouquet(), { wheel(5), wheel(7), disjoint_union(wheel(5), wheel(7)).structure,
            without_edge(wheel(7), 1, 2) });
    CHECK(in_class.clean());
    CHECK(in_class.models == std::vector<bool>{ true, true, true, false });

    auto out = check_preservation(phi_bouquet(), { wheel(5), wheel_with_pendant(5) });
    CHECK(out.violations == std::vector<std::pair<int, int>>{ { 0, 1 } });
    CHECK(check_preservation(phi_hat(), { dn(4) }).clean());

    auto ext = check_preservation(phi_bouquet(), { wheel(5), wheel_with_pendant(5) }, PreservationMode::extension);
    CHECK(ext.violations.size() == 1);
}

TEST_CASE("violations are monotone in the instance set")
{
    std::mt19937_64 rng{ 90 };
    std::vector<Structure> pool{ wheel(5), wheel_with_pendant(5), cycle(5), bouquet({ 3, 3 }), path(4) };
    std::vector<Structure> prefix;
    size_t last = 0;
    for (auto & s : pool) {
        prefix.push_back(s);
        auto report = check_preservation(phi_bouquet(), prefix);
        CHECK(report.violations.size() >= last);
        last = report.violations.size();
    }
}

TEST_CASE("lemma 2.2 direction: canonical queries of minimal models define the formula")
{
    // minimal models of phi_bouquet in the class, up to the sizes used below
    std::vector<Structure> minimal{ wheel(5), wheel(7) };
    std::vector<Formula> queries;
    for (auto & m : minimal)
        queries.push_back(canonical_query(m));
    auto union_of_queries = fo::disj(queries);

    std::vector<Structure> members;
    for (int n : { 5, 7 }) {
        auto w = wheel(n);
        members.push_back(w);
        for (auto [u, v] : w.gaifman_edges())
            members.push_back(without_edge(w, u, v));
        for (int x = 0 ; x < w.size() ; ++x)
            members.push_back(remove_elements(w, std::vector<int>{ x }).structure);
    }
    members.push_back(disjoint_union(wheel(5), cycle(5)).structure);
    members.push_back(disjoint_union(cycle(7), path(3)).structure);
    for (auto & g : members) {
        REQUIRE(in_class_C(g));
        REQUIRE(g.size() <= 12);
        CHECK(evaluate(union_of_queries, g) == evaluate(phi_bouquet(), g));
    }
}

TEST_CASE("induced D_m extraction")
{
    for (int n : { 4, 5, 6 }) {
        auto r = find_induced_Dm(dn(n));
        REQUIRE(r.found());
        CHECK(r.m == n);
        CHECK(classify(dn(r.m), dn(n), r.embedding).embedding);
        // image edge set equals D_m's up to the bijection
        std::set<std::pair<int, int>> image;
        for (auto [u, v] : dn(r.m).gaifman_edges())
            image.insert(std::minmax(r.embedding[u], r.embedding[v]));
        CHECK(image.size() == dn(n).gaifman_edges().size());
    }
    auto mixed = find_induced_Dm(disjoint_union(dn(4), cycle(7)).structure);
    CHECK(mixed.found());
    CHECK(mixed.m == 4);
    auto none = find_induced_Dm(cycle(9));
    CHECK(none.status == DmStatus::not_a_model);
    CHECK_FALSE(none.precondition_failed());
    auto k4 = find_induced_Dm(clique(4));
    CHECK(k4.status == DmStatus::has_k4);
    CHECK(k4.precondition_failed());
    CHECK(find_induced_Dm(clique(5)).status == DmStatus::has_k4);
    CHECK(to_string(DmStatus::has_k5_minor) == "has-k5-minor");
}

TEST_CASE("homomorphic image audit")
{
    auto entries = hom_image_audit(8, { dn(4), dn(5), dn(8), cycle(5), clique(4) });
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].hom_exists);
    CHECK(entries[0].induced == std::vector<int>{ 4 });
    CHECK_FALSE(entries[1].hom_exists);
    CHECK(entries[2].induced == std::vector<int>{ 8 });
    CHECK_FALSE(entries[3].hom_exists);
    CHECK_FALSE(entries[4].k4_free);
    for (auto & e : entries)
        CHECK(e.consistent());
    CHECK_THROWS(hom_image_audit(3, {}));
}

TEST_CASE("suite registry")
{
    CHECK(suite_names().size() == 11);
    CHECK_THROWS_AS(run_suite("unknown"), std::invalid_argument);
    auto report = run_suite("lemma-5-2-injective", SuiteOptions{ 0, 2 });
    CHECK(report.passed);
    for (auto & line : report.lines)
        CHECK(line.rfind("FAIL", 0) != 0);
    auto again = run_suite("lemma-5-2-injective");
    CHECK(again.lines == report.lines);
}

TEST_CASE("parallel runner keeps task order and propagates errors")
{
    std::vector<std::function<auto () -> std::vector<std::string>>> tasks;
    for (int i = 0 ; i < 9 ; ++i)
        tasks.push_back([i] { return std::vector<std::string>{ std::to_string(i) }; });
    auto results = run_parallel(tasks, 4);
    for (int i = 0 ; i < 9 ; ++i)
        CHECK(results[i] == std::vector<std::string>{ std::to_string(i) });
    tasks.push_back([]() -> std::vector<std::string> { throw std::runtime_error("boom"); });
    CHECK_THROWS_AS(run_parallel(tasks, 3), std::runtime_error);
}
