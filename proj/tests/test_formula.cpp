#include <doctest.h>

#include "oracles.hpp"

#include <fmtlab/builtins.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/evaluate.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/operations.hpp>
#include <fmtlab/transform.hpp>

#include <random>

using namespace fmtlab;

namespace
{
    // Random formulas over {E/2} with free variables drawn from pool.
    class Generator
    {
        public:
            explicit Generator(std::uint64_t seed) : _rng(seed) {}

            auto formula(int depth, std::vector<std::string> vars) -> Formula
            {
                int choice = depth <= 0 ? 5 + pick(3) : pick(8);
                switch (choice) {
                    case 0:
                    case 1: {
                        std::string v = "v" + std::to_string(pick(4));
                        vars.push_back(v);
                        auto body = formula(depth - 1, vars);
                        return choice == 0 ? fo::exists(v, body) : fo::forall(v, body);
                    }
                    case 2: return fo::conj({ formula(depth - 1, vars), formula(depth - 1, vars) });
                    case 3: return fo::disj({ formula(depth - 1, vars), formula(depth - 1, vars) });
                    case 4: return fo::negation(formula(depth - 1, vars));
                    case 5: return fo::edge(any(vars), any(vars));
                    case 6: return fo::eq(any(vars), any(vars));
                    default: return fo::dist_le(pick(4), any(vars), any(vars));
                }
            }

        private:
            std::mt19937_64 _rng;

            auto pick(int n) -> int { return static_cast<int>(_rng() % static_cast<std::uint64_t>(n)); }
            auto any(const std::vector<std::string> & vars) -> std::string { return vars[pick(static_cast<int>(vars.size()))]; }
    };

    auto random_valuation(std::mt19937_64 & rng, const Formula & f, int n) -> Valuation
    {
        Valuation v;
        for (auto & x : free_variables(f))
            v[x] = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        return v;
    }
}

TEST_CASE("parser accepts the grammar and round-trips")
{
    for (auto text : { "true", "false", "(exists x (forall y (or (rel E x y) (= x y))))",
            "(and (not (dist<= 3 x y)) (rel P x))", "(or (rel R x y z))" }) {
        auto f = parse_formula(text);
        CHECK(to_string(f) == text);
        CHECK(parse_formula(to_string(f)) == f);
    }
    for (auto & name : builtin_names()) {
        auto f = *builtin_formula(name);
        CHECK(parse_formula(to_string(f)) == f);
    }
}

TEST_CASE("parser errors report the offset")
{
    auto offset = [](const char * text) -> std::size_t {
        try {
            parse_formula(text);
        }
        catch (const ParseError & e) {
            return e.position();
        }
        return 9999;
    };
    CHECK(offset("(and)") == 1);
    CHECK(offset("(exists 1x true)") == 8);
    CHECK(offset("(rel E x y") == 10);
    CHECK(offset("(dist<= -1 x y)") == 8);
    CHECK(offset("(frob x)") == 1);
    CHECK(offset("true false") == 5);
    CHECK_THROWS_AS(parse_formula("(rel E x)", Vocabulary::graph()), VocabularyMismatch);
}

TEST_CASE("free variables, quantifier rank and existential positivity")
{
    auto f = parse_formula("(and (exists x (rel E x y)) (forall z (dist<= 3 z x)))");
    CHECK(free_variables(f) == std::set<std::string>{ "x", "y" });
    CHECK(all_variables(f) == std::set<std::string>{ "x", "y", "z" });
    CHECK(quantifier_rank(f) == 3);
    CHECK(quantifier_rank(fo::dist_le(1, "x", "y")) == 0);
    CHECK_FALSE(is_existential_positive(f));
    CHECK(is_existential_positive(parse_formula("(exists x (or (rel E x x) (dist<= 2 x x)))")));
    CHECK(quantifier_rank(phi_bouquet()) == 6);
    CHECK(free_variables(psi_bouquet()) == std::set<std::string>{ "x", "z" });
    CHECK(free_variables(chi6()).size() == 6);
    CHECK(free_variables(phi_hat()).empty());
}

TEST_CASE("evaluator agrees with the reference semantics")
{
    std::mt19937_64 rng{ 5 };
    Generator gen{ 9 };
    for (int round = 0 ; round < 300 ; ++round) {
        auto f = gen.formula(4, { "x", "y" });
        int n = 1 + static_cast<int>(rng() % 7);
        auto g = oracle::random_graph(rng, n, 0.4);
        auto v = random_valuation(rng, f, n);
        CHECK_MESSAGE(evaluate(f, g, v) == oracle::satisfies(f, g, { v.begin(), v.end() }), to_string(f));
    }
}

TEST_CASE("evaluator errors")
{
    CHECK_THROWS_AS(evaluate(fo::edge("x", "y"), cycle(3), { { "x", 0 } }), UnboundVariable);
    CHECK_THROWS_AS(evaluate(fo::atom("P", { "x" }), cycle(3), { { "x", 0 } }), VocabularyMismatch);
    CHECK_THROWS_AS(evaluate(fo::edge("x", "x"), cycle(3), { { "x", 7 } }), std::out_of_range);
    CHECK(evaluate(fo::forall("x", fo::falsity()), Structure{}));
}

TEST_CASE("to_pure_fo removes distance bounds and preserves meaning")
{
    std::mt19937_64 rng{ 11 };
    Generator gen{ 12 };
    Vocabulary ternary{ { Symbol{ "R", 3 } } };
    for (int round = 0 ; round < 100 ; ++round) {
        auto f = gen.formula(3, { "x", "y" });
        int n = 1 + static_cast<int>(rng() % 6);
        auto g = oracle::random_graph(rng, n, 0.35);
        auto pure = to_pure_fo(f, g.vocabulary());
        CHECK(to_string(pure).find("dist<=") == std::string::npos);
        auto v = random_valuation(rng, f, n);
        CHECK(evaluate(pure, g, v) == evaluate(f, g, v));

        StructureBuilder b{ ternary, n };
        for (int i = 0 ; i < n ; ++i)
            b.add(0, { static_cast<int>(rng() % n), static_cast<int>(rng() % n), static_cast<int>(rng() % n) });
        auto t = b.build();
        auto d = fo::dist_le(2, "x", "y");
        auto x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n);
        CHECK(evaluate(to_pure_fo(d, ternary), t, { { "x", x }, { "y", y } }) == evaluate(d, t, { { "x", x }, { "y", y } }));
    }
}

TEST_CASE("rename_free avoids capture")
{
    auto f = parse_formula("(exists y (rel E x y))");
    auto g = rename_free(f, "x", "y");
    CHECK(free_variables(g) == std::set<std::string>{ "y" });
    auto path3 = path(3);
    for (int a = 0 ; a < 3 ; ++a)
        CHECK(evaluate(g, path3, { { "y", a } }) == evaluate(f, path3, { { "x", a } }));
}

TEST_CASE("relativization matches evaluation on the ball")
{
    std::mt19937_64 rng{ 21 };
    Generator gen{ 22 };
    for (int round = 0 ; round < 100 ; ++round) {
        auto body = gen.formula(3, { "x" });
        int n = 1 + static_cast<int>(rng() % 8);
        int r = static_cast<int>(rng() % 3);
        auto g = oracle::random_graph(rng, n, 0.3);
        int centre = static_cast<int>(rng() % n);
        auto local = relativize(body, "x", r);
        auto b = ball(g, centre, r);
        auto sub = induced_substructure(g, b);
        int inside = static_cast<int>(std::find(b.begin(), b.end(), centre) - b.begin());
        // distance atoms inside the ball are measured in the ball
        if (to_string(body).find("dist<=") != std::string::npos)
            continue;
        CHECK(evaluate(local, g, { { "x", centre } }) == evaluate(body, sub.structure, { { "x", inside } }));
    }
    auto f = relativize(parse_formula("(exists x (rel E x x))"), "x", 1);
    CHECK(free_variables(f) == std::set<std::string>{ "x" });
}

TEST_CASE("basic local sentences")
{
    auto has_edge_nearby = fo::exists("y", fo::edge("x", "y"));
    auto two = basic_local(1, 2, has_edge_nearby);
    CHECK(free_variables(two).empty());
    CHECK(evaluate(two, disjoint_union(path(2), path(2)).structure));
    CHECK_FALSE(evaluate(two, path(3)));
    CHECK(evaluate(two, path(6)));
    CHECK_THROWS(basic_local(1, 2, fo::edge("x", "y")));
}

TEST_CASE("canonical query holds exactly when a homomorphism exists")
{
    for (std::uint64_t a = 0 ; a < 64 ; a += 5)
        for (std::uint64_t b = 0 ; b < 64 ; b += 3) {
            auto ga = oracle::graph_from_mask(4, a);
            auto gb = oracle::graph_from_mask(4, b);
            CHECK(evaluate(canonical_query(ga), gb) == oracle::hom_exists(ga, gb));
        }
    CHECK(is_existential_positive(canonical_query(cycle(5))));
    CHECK_THROWS(canonical_query(Structure{}));
}

TEST_CASE("interpretation of pG")
{
    auto g = wheel(5);
    std::vector<int> p{ 0, 3 };
    auto pg = pbar_structure(g, p);
    CHECK(pg.vocabulary() == pbar_vocabulary(2));
    CHECK(pg.tuples(1) == std::vector<Tuple>{ { 0 } });
    CHECK(pg.tuples(3).size() == 5);
    CHECK(pbar_structure(g, {}) == g);
    auto f = phi_bouquet();
    auto fk = interpret_k(f, 2);
    CHECK(evaluate(fk, pg) == evaluate(f, g));
    CHECK(quantifier_rank(fk) == quantifier_rank(f));
    CHECK(to_string(interpret_k(fo::edge("x", "y"), 1)) == "(or (rel E x y) (and (rel P1 x) (rel Q1 y)) (and (rel P1 y) (rel Q1 x)))");
    CHECK_THROWS_AS(interpret_k(fo::atom("P", { "x" }), 1), VocabularyMismatch);
}

TEST_CASE("builtin formulas on their defining examples")
{
    CHECK(evaluate(phi_bouquet(), wheel(9)));
    CHECK_FALSE(evaluate(phi_bouquet(), wheel_with_pendant(9)));
    CHECK(evaluate(phi_planar(), dn(5)));
    CHECK_FALSE(evaluate(phi_planar(), cycle(9)));
    CHECK(evaluate(phi_hat(), clique(4)));
    CHECK(evaluate(k4_sentence(), clique(4)));
    CHECK_FALSE(evaluate(k4_sentence(), dn(4)));
    Valuation rung{ { "x1", gn_v(1) }, { "x2", gn_v(2) }, { "y1", gn_a(4, 1) }, { "z1", gn_b(4, 1) },
        { "y2", gn_a(4, 2) }, { "z2", gn_b(4, 2) } };
    CHECK(evaluate(chi6(), dn(4), rung));
    CHECK_FALSE(builtin_formula("nope"));
}
