#include "oracles.hpp"

#include <fmtlab/evaluate.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/operations.hpp>
#include <fmtlab/suites.hpp>
#include <fmtlab/transform.hpp>

#include <iostream>
#include <random>
#include <thread>

using namespace fmtlab;

namespace
{
    struct Outcome
    {
        bool passed = true;
        std::vector<std::string> failures;

        auto require(bool condition, const std::string & what) -> void
        {
            if (! condition) {
                passed = false;
                failures.push_back(what);
            }
        }
    };

    auto suite_outcome(const std::string & name, int jobs) -> Outcome
    {
        Outcome o;
        auto report = run_suite(name, SuiteOptions{ 0, jobs });
        for (auto & line : report.lines)
            if (line.rfind("FAIL ", 0) == 0)
                o.failures.push_back(line);
        o.passed = report.passed;
        return o;
    }

    auto chromatic_cross_check(Outcome & o) -> void
    {
        for (int n : { 5, 7 }) {
            auto w = wheel(n);
            o.require(oracle::chromatic_number(w) == 4, "oracle chi(W_" + std::to_string(n) + ") != 4");
            for (auto [u, v] : w.gaifman_edges()) {
                auto b = StructureBuilder::graph(w.size());
                for (auto e : w.gaifman_edges())
                    if (e != std::pair{ u, v })
                        b.add_edge(e.first, e.second);
                o.require(oracle::chromatic_number(b.build()) == 3, "oracle: W_" + std::to_string(n) + " minus an edge is not 3-chromatic");
            }
        }
    }

    class Sentences
    {
        public:
            explicit Sentences(std::uint64_t seed) : _rng(seed) {}

            auto formula(int depth, std::vector<std::string> vars, bool distances) -> Formula
            {
                int choice = depth <= 0 ? 5 + pick(distances ? 3 : 2) : pick(distances ? 8 : 7);
                switch (choice) {
                    case 0:
                    case 1: {
                        std::string v = "q" + std::to_string(vars.size());
                        vars.push_back(v);
                        auto body = formula(depth - 1, vars, distances);
                        return choice == 0 ? fo::exists(v, body) : fo::forall(v, body);
                    }
                    case 2: return fo::conj({ formula(depth - 1, vars, distances), formula(depth - 1, vars, distances) });
                    case 3: return fo::disj({ formula(depth - 1, vars, distances), formula(depth - 1, vars, distances) });
                    case 4: return fo::negation(formula(depth - 1, vars, distances));
                    case 5: return fo::edge(any(vars), any(vars));
                    case 6: return fo::eq(any(vars), any(vars));
                    default: return fo::dist_le(pick(4), any(vars), any(vars));
                }
            }

            auto pick(int n) -> int { return static_cast<int>(_rng() % static_cast<std::uint64_t>(n)); }
            auto rng() -> std::mt19937_64 & { return _rng; }

        private:
            std::mt19937_64 _rng;

            auto any(const std::vector<std::string> & vars) -> std::string
            {
                return vars[pick(static_cast<int>(vars.size()))];
            }
    };

    auto cross_module_oracles() -> Outcome
    {
        Outcome o;

        // canonical query versus homomorphism existence, all labelled graphs on 1..4 vertices
        std::vector<Structure> graphs;
        for (int n = 1 ; n <= 4 ; ++n)
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << (n * (n - 1) / 2)) ; ++mask)
                graphs.push_back(oracle::graph_from_mask(n, mask));
        int pairs = 0;
        for (auto & a : graphs) {
            Evaluator query{ canonical_query(a), Vocabulary::graph() };
            for (auto & b : graphs) {
                ++pairs;
                o.require(query(b) == oracle::hom_exists(a, b), "canonical query mismatch");
            }
        }
        o.require(pairs == 75 * 75, "expected 5625 graph pairs");

        Sentences gen{ 1212 };
        for (int i = 0 ; i < 100 ; ++i) {
            auto f = gen.formula(3, { "x", "y" }, true);
            int n = 1 + gen.pick(8);
            auto g = oracle::random_graph(gen.rng(), n, 0.3);
            Valuation v{ { "x", gen.pick(n) }, { "y", gen.pick(n) } };
            bool direct = evaluate(f, g, v);
            o.require(direct == evaluate(to_pure_fo(f, g.vocabulary()), g, v), "to_pure_fo mismatch on " + to_string(f));
            o.require(direct == oracle::satisfies(f, g, { v.begin(), v.end() }), "evaluator disagrees with reference on " + to_string(f));
        }

        for (int i = 0 ; i < 100 ; ++i) {
            auto f = gen.formula(3, { "x" }, false);
            int n = 1 + gen.pick(9);
            int r = gen.pick(3);
            auto g = oracle::random_graph(gen.rng(), n, 0.25);
            int centre = gen.pick(n);
            auto b = ball(g, centre, r);
            auto local = induced_substructure(g, b).structure;
            int inside = static_cast<int>(std::find(b.begin(), b.end(), centre) - b.begin());
            o.require(evaluate(relativize(f, "x", r), g, { { "x", centre } }) == evaluate(f, local, { { "x", inside } }),
                    "relativize/ball mismatch on " + to_string(f));
        }
        return o;
    }
}

auto main() -> int
{
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::string> suites = suite_names();
    bool all = true;

    for (size_t i = 0 ; i < suites.size() ; ++i) {
        Outcome o;
        try {
            o = suite_outcome(suites[i], jobs);
            if (i == 0)
                chromatic_cross_check(o);
        }
        catch (const std::exception & e) {
            o.require(false, std::string("error: ") + e.what());
        }
        std::cout << (o.passed ? "PASS " : "FAIL ") << i + 1 << " " << suites[i] << std::endl;
        for (auto & f : o.failures)
            std::cout << "    " << f << '\n';
        all = all && o.passed;
    }

    Outcome o;
    try {
        o = cross_module_oracles();
    }
    catch (const std::exception & e) {
        o.require(false, std::string("error: ") + e.what());
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << "12 cross-module-oracles" << std::endl;
    for (size_t i = 0 ; i < o.failures.size() && i < 10 ; ++i)
        std::cout << "    " << o.failures[i] << '\n';
    all = all && o.passed;

    return all ? 0 : 1;
}
