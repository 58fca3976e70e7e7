#include <fmtlab/suites.hpp>
#include <fmtlab/bottleneck.hpp>
#include <fmtlab/builtins.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/evaluate.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/hom_solver.hpp>
#include <fmtlab/minors.hpp>
#include <fmtlab/operations.hpp>
#include <fmtlab/preservation.hpp>
#include <fmtlab/transform.hpp>

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

using std::string;
using std::vector;

namespace fmtlab
{
    namespace
    {
        using Lines = vector<string>;
        using Task = std::function<auto () -> Lines>;

        auto join(const vector<int> & xs, const char * separator = ",") -> string
        {
            string s;
            for (size_t i = 0 ; i < xs.size() ; ++i)
                s += (i ? separator : "") + std::to_string(xs[i]);
            return s;
        }

        auto edges_of(const Structure & g) -> string
        {
            string s = "n=" + std::to_string(g.size()) + " edges=";
            bool first = true;
            for (auto [u, v] : g.gaifman_edges()) {
                s += (first ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
                first = false;
            }
            return s;
        }

        auto remove_edge(const Structure & g, int u, int v) -> Structure
        {
            auto builder = StructureBuilder::graph(g.size());
            for (auto [a, b] : g.gaifman_edges())
                if (! (a == std::min(u, v) && b == std::max(u, v)))
                    builder.add_edge(a, b);
            return builder.build();
        }

        auto add_edge(const Structure & g, int u, int v) -> Structure
        {
            auto builder = StructureBuilder::graph(g.size());
            for (auto [a, b] : g.gaifman_edges())
                builder.add_edge(a, b);
            builder.add_edge(u, v);
            return builder.build();
        }

        auto glue(const Structure & a, int at_a, const Structure & b, int at_b) -> Structure
        {
            vector<int> left{ at_a }, right{ at_b };
            return free_amalgam(a, b, left, right).structure;
        }

        auto plus(const Structure & a, const Structure & b) -> Structure
        {
            return disjoint_union(a, b).structure;
        }

        auto contains_k4(const Structure & g) -> bool
        {
            return hom_exists(complete_graph(4), g, HomConstraints{ .injective = true, .partial = {} });
        }

        class Suite
        {
            public:
                Suite(string name, const SuiteOptions & options) :
                    _name(std::move(name)),
                    _options(options)
                {
                }

                auto fail(const string & witness) const -> string
                {
                    return "FAIL " + _name + " " + witness;
                }

                auto ok(const string & detail) const -> string
                {
                    return "ok " + _name + " " + detail;
                }

                auto info(const string & detail) const -> string
                {
                    return "info " + _name + " " + detail;
                }

                auto check(bool condition, const string & what) const -> string
                {
                    return condition ? ok(what) : fail(what);
                }

                auto within(int n) const -> bool
                {
                    return _options.size <= 0 || n <= _options.size;
                }

                auto name() const -> const string & { return _name; }

            private:
                string _name;
                SuiteOptions _options;
        };

        auto lemma_3_2(const Suite & suite) -> vector<Task>
        {
            vector<Task> tasks;
            for (int n : { 5, 7, 9, 11, 13 }) {
                if (! suite.within(n))
                    continue;
                tasks.push_back([n, &suite] {
                    Lines lines;
                    auto w = wheel(n);
                    int chi = chromatic_number(w);
                    lines.push_back(suite.check(chi == 4, "chi(W_" + std::to_string(n) + ")=" + std::to_string(chi)));
                    int critical = 0;
                    for (auto [u, v] : w.gaifman_edges()) {
                        int k = chromatic_number(remove_edge(w, u, v));
                        if (k == 3)
                            ++critical;
                        else
                            lines.push_back(suite.fail("chi(W_" + std::to_string(n) + " - " + std::to_string(u) + "-"
                                        + std::to_string(v) + ")=" + std::to_string(k)));
                    }
                    lines.push_back(suite.info("W_" + std::to_string(n) + " edge deletions with chi=3: "
                                + std::to_string(critical) + "/" + std::to_string(w.gaifman_edges().size())));
                    return lines;
                });
            }
            for (int n : { 5, 7 })
                for (int m : { 5, 7 })
                    tasks.push_back([n, m, &suite] {
                        Lines lines;
                        auto homs = enumerate_homs(wheel(n), wheel(m));
                        int full = 0;
                        for (auto & h : homs) {
                            if (h.kind().full)
                                ++full;
                            else
                                lines.push_back(suite.fail("non-full hom W_" + std::to_string(n) + "->W_"
                                            + std::to_string(m) + " map=" + join(h.map())));
                        }
                        lines.push_back(suite.info("homs W_" + std::to_string(n) + "->W_" + std::to_string(m) + ": "
                                    + std::to_string(homs.size()) + ", full: " + std::to_string(full)));
                        return lines;
                    });
            return tasks;
        }

        auto all_graphs(int n, const std::function<void (const Structure &)> & visit) -> void
        {
            vector<std::pair<int, int>> slots;
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    slots.emplace_back(u, v);
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << slots.size()) ; ++mask) {
                vector<std::pair<int, int>> edges;
                for (size_t i = 0 ; i < slots.size() ; ++i)
                    if (mask >> i & 1)
                        edges.push_back(slots[i]);
                visit(make_graph(n, edges));
            }
        }

        auto lemma_3_3(const Suite & suite) -> vector<Task>
        {
            vector<Task> tasks;
            for (int n = 1 ; n <= 6 ; ++n)
                tasks.push_back([n, &suite] {
                    Lines lines;
                    Evaluator phi{ phi_bouquet(), Vocabulary::graph() };
                    int graphs = 0, positives = 0, mismatches = 0;
                    all_graphs(n, [&](const Structure & g) {
                        ++graphs;
                        bool expected = bouquet_oracle(g);
                        positives += expected;
                        if (phi(g) != expected) {
                            ++mismatches;
                            lines.push_back(suite.fail("phi_bouquet disagrees with the bouquet oracle on " + edges_of(g)));
                        }
                    });
                    lines.push_back(suite.info(std::to_string(graphs) + " labelled graphs on " + std::to_string(n)
                                + " vertices, " + std::to_string(positives) + " bouquets, "
                                + std::to_string(mismatches) + " mismatches"));
                    return lines;
                });

            vector<vector<int>> bouquets;
            for (int n = 3 ; n <= 24 ; ++n)
                bouquets.push_back({ n });
            for (auto & b : vector<vector<int>>{ { 3, 3 }, { 3, 4 }, { 4, 5 }, { 5, 7 }, { 3, 3, 3 }, { 5, 5, 5 },
                    { 4, 6, 8 }, { 3, 3, 3, 3, 3 }, { 5, 5, 5, 5 }, { 6, 6, 6, 6 }, { 3, 4, 5, 6, 6 }, { 12, 12 } })
                bouquets.push_back(b);
            for (auto & lengths : bouquets) {
                int size = 1;
                for (int l : lengths)
                    size += l;
                if (! suite.within(size - 1))
                    continue;
                tasks.push_back([lengths, &suite] {
                    Lines lines;
                    string name = "W_" + join(lengths);
                    lines.push_back(suite.check(evaluate(phi_bouquet(), bouquet(lengths)), name + " |= phi_bouquet"));
                    if (lengths.size() == 1)
                        lines.push_back(suite.check(! evaluate(phi_bouquet(), wheel_with_pendant(lengths[0])),
                                    name + "+c |/= phi_bouquet"));
                    return lines;
                });
            }
            return tasks;
        }

        auto thm_3_4_minimal(const Suite & suite) -> vector<Task>
        {
            vector<Task> tasks;
            for (int n : { 5, 7, 9 }) {
                if (! suite.within(n))
                    continue;
                tasks.push_back([n, &suite] {
                    Lines lines;
                    MinimalityOptions options;
                    options.subset_limit = 20;
                    if (n > 5) {
                        options.mode = MinimalityMode::proxy;
                        options.proxy = bouquet_oracle;
                        options.seed = static_cast<std::uint64_t>(n);
                    }
                    auto report = is_minimal_induced_model(phi_bouquet(), wheel(n), in_class_C, options);
                    string name = "W_" + std::to_string(n);
                    if (report.smaller_model)
                        lines.push_back(suite.fail(name + " has a smaller model on {" + join(*report.smaller_model) + "}"));
                    if (report.proxy_mismatch)
                        lines.push_back(suite.fail(name + " proxy disagrees with phi_bouquet on {"
                                    + join(*report.proxy_mismatch) + "}"));
                    lines.push_back(suite.check(report.minimal, name + " minimal induced model ("
                                + (n > 5 ? "proxy, " + std::to_string(report.spot_checks) + " spot checks, " : string("full scan, "))
                                + std::to_string(report.subsets) + " subsets)"));
                    return lines;
                });
            }
            return tasks;
        }

        auto thm_3_4_preservation(const Suite & suite) -> vector<Task>
        {
            vector<std::pair<string, Structure>> base;
            for (int n : { 5, 7, 9 }) {
                if (! suite.within(n))
                    continue;
                auto w = wheel(n);
                string name = "W_" + std::to_string(n);
                base.emplace_back(name, w);
                base.emplace_back(name + "-spoke", remove_edge(w, 0, 1));
                base.emplace_back(name + "-rim", remove_edge(w, 1, 2));
                base.emplace_back(name + "-apex", remove_elements(w, vector<int>{ 0 }).structure);
                base.emplace_back(name + "-c1", remove_elements(w, vector<int>{ 1 }).structure);
            }
            auto pool = base;
            for (size_t i = 0 ; i < base.size() ; ++i)
                for (size_t j = i ; j < base.size() ; ++j)
                    pool.emplace_back(base[i].first + "+" + base[j].first, plus(base[i].second, base[j].second));

            vector<Task> tasks;
            tasks.push_back([pool, &suite] {
                Lines lines;
                vector<Structure> members;
                vector<string> names;
                for (auto & [name, s] : pool) {
                    if (! in_class_C(s)) {
                        lines.push_back(suite.info(name + " is outside the class; dropped"));
                        continue;
                    }
                    members.push_back(s);
                    names.push_back(name);
                }
                auto report = check_preservation(phi_bouquet(), members);
                for (auto [a, b] : report.violations)
                    lines.push_back(suite.fail("violation " + names[a] + " -> " + names[b]));
                for (auto [a, b] : report.skipped)
                    lines.push_back(suite.fail("budget exceeded on " + names[a] + " -> " + names[b]));
                int models = static_cast<int>(std::count(report.models.begin(), report.models.end(), true));
                lines.push_back(suite.info(std::to_string(members.size()) + " class members, " + std::to_string(models)
                            + " models, " + std::to_string(report.violations.size()) + " violations"));
                return lines;
            });
            tasks.push_back([&suite] {
                auto report = check_preservation(phi_bouquet(), { wheel(5), wheel_with_pendant(5) });
                bool found = report.violations == vector<std::pair<int, int>>{ { 0, 1 } };
                return Lines{ suite.check(found, "out-of-class violation W_5 -> W_5+c detected") };
            });
            return tasks;
        }

        class FormulaGenerator
        {
            public:
                explicit FormulaGenerator(std::uint64_t seed) :
                    _rng(seed)
                {
                }

                auto sentence(int depth) -> Formula
                {
                    vector<string> bound;
                    return quantifier(depth, bound);
                }

            private:
                std::mt19937_64 _rng;

                auto pick(int n) -> int
                {
                    return std::uniform_int_distribution<int>{ 0, n - 1 }(_rng);
                }

                auto quantifier(int depth, vector<string> & bound) -> Formula
                {
                    string v = "v" + std::to_string(bound.size());
                    bound.push_back(v);
                    auto body = formula(depth - 1, bound);
                    bound.pop_back();
                    return pick(2) ? fo::exists(v, body) : fo::forall(v, body);
                }

                auto atom(const vector<string> & bound) -> Formula
                {
                    auto & x = bound[pick(static_cast<int>(bound.size()))];
                    auto & y = bound[pick(static_cast<int>(bound.size()))];
                    switch (pick(4)) {
                        case 0:
                        case 1: return fo::edge(x, y);
                        case 2: return fo::eq(x, y);
                        default: return fo::dist_le(1 + pick(3), x, y);
                    }
                }

                auto formula(int depth, vector<string> & bound) -> Formula
                {
                    if (depth <= 0)
                        return atom(bound);
                    switch (pick(6)) {
                        case 0:
                        case 1: return quantifier(depth, bound);
                        case 2: return fo::conj({ formula(depth - 1, bound), formula(depth - 1, bound) });
                        case 3: return fo::disj({ formula(depth - 1, bound), formula(depth - 1, bound) });
                        case 4: return fo::negation(formula(depth - 1, bound));
                        default: return atom(bound);
                    }
                }
        };

        auto random_graph(std::mt19937_64 & rng, int n, double density) -> Structure
        {
            std::bernoulli_distribution coin{ density };
            auto builder = StructureBuilder::graph(n);
            for (int u = 0 ; u < n ; ++u)
                for (int v = u + 1 ; v < n ; ++v)
                    if (coin(rng))
                        builder.add_edge(u, v);
            return builder.build();
        }

        auto def_4_1(const Suite & suite) -> vector<Task>
        {
            return { [&suite] {
                Lines lines;
                std::mt19937_64 rng{ 41 };
                FormulaGenerator formulas{ 4141 };
                int agreements = 0;
                for (int i = 0 ; i < 50 ; ++i) {
                    int n = std::uniform_int_distribution<int>{ 1, 10 }(rng);
                    double density = std::uniform_real_distribution<double>{ 0.15, 0.6 }(rng);
                    auto g = random_graph(rng, n, density);
                    int k = std::uniform_int_distribution<int>{ 0, std::min(3, n) }(rng);
                    vector<int> order(n);
                    for (int v = 0 ; v < n ; ++v)
                        order[v] = v;
                    std::shuffle(order.begin(), order.end(), rng);
                    vector<int> p(order.begin(), order.begin() + k);
                    auto phi = formulas.sentence(3);
                    auto phi_k = interpret_k(phi, k);

                    string where = "instance " + std::to_string(i) + " " + edges_of(g) + " p=" + join(p) + " phi=" + to_string(phi);
                    if (evaluate(phi, g) != evaluate(phi_k, pbar_structure(g, p)))
                        lines.push_back(suite.fail("G |= phi differs from pG |= phi^k on " + where));
                    else
                        ++agreements;
                    if (quantifier_rank(phi_k) != quantifier_rank(phi))
                        lines.push_back(suite.fail("quantifier rank " + std::to_string(quantifier_rank(phi)) + " became "
                                    + std::to_string(quantifier_rank(phi_k)) + " on " + where));
                }
                lines.push_back(suite.info(std::to_string(agreements) + "/50 instances agree"));
                return lines;
            } };
        }

        auto random_structure(std::mt19937_64 & rng, const Vocabulary & vocabulary, int n) -> Structure
        {
            StructureBuilder builder{ vocabulary, n };
            for (size_t r = 0 ; r < vocabulary.size() ; ++r) {
                int arity = vocabulary[r].arity;
                int count = std::uniform_int_distribution<int>{ 0, 2 * n }(rng);
                for (int i = 0 ; i < count && n > 0 ; ++i) {
                    Tuple t(arity);
                    for (auto & x : t)
                        x = std::uniform_int_distribution<int>{ 0, n - 1 }(rng);
                    builder.add(r, t);
                }
            }
            return builder.build();
        }

        auto amalgam_properties(const Suite & suite) -> vector<Task>
        {
            return { [&suite] {
                Lines lines;
                Vocabulary vocabulary{ { Symbol{ "E", 2 }, Symbol{ "R", 3 }, Symbol{ "P", 1 } } };
                std::mt19937_64 rng{ 6 };
                int passed = 0;
                for (int i = 0 ; i < 100 ; ++i) {
                    int n = std::uniform_int_distribution<int>{ 1, 8 }(rng);
                    auto m = random_structure(rng, vocabulary, n);
                    auto b = random_structure(rng, vocabulary, std::uniform_int_distribution<int>{ 1, 8 }(rng));
                    vector<int> s;
                    std::bernoulli_distribution coin{ 0.3 };
                    for (int v = 0 ; v < n ; ++v)
                        if (coin(rng))
                            s.push_back(v);
                    string where = "instance " + std::to_string(i) + " |M|=" + std::to_string(n) + " S={" + join(s) + "}";
                    size_t before = lines.size();

                    if (! are_isomorphic(iterated_amalgam(m, s, 1).structure, m))
                        lines.push_back(suite.fail("one-copy amalgam not isomorphic to M on " + where));
                    auto twice = iterated_amalgam(m, s, 2);
                    if (! classify(twice.structure, m, twice.fold).full)
                        lines.push_back(suite.fail("fold of M (+)_S M onto M is not full on " + where));
                    if (! are_isomorphic(free_amalgam(m, b, vector<int>{}).structure, disjoint_union(m, b).structure))
                        lines.push_back(suite.fail("amalgam over the empty set differs from the disjoint union on " + where));
                    for (int copies = 1 ; copies <= 4 ; ++copies) {
                        int size = iterated_amalgam(m, s, copies).structure.size();
                        int expected = copies * n - (copies - 1) * static_cast<int>(s.size());
                        if (size != expected)
                            lines.push_back(suite.fail("size " + std::to_string(size) + " != " + std::to_string(expected)
                                        + " for n=" + std::to_string(copies) + " on " + where));
                    }
                    passed += lines.size() == before;
                }
                lines.push_back(suite.info(std::to_string(passed) + "/100 instances satisfy every property"));
                return lines;
            } };
        }

        auto fan(int k) -> Structure
        {
            auto builder = StructureBuilder::graph(k + 1);
            for (int i = 1 ; i <= k ; ++i) {
                builder.add_edge(0, i);
                if (i < k)
                    builder.add_edge(i, i + 1);
            }
            return builder.build();
        }

        // Cycles hung off one another at single vertices, then paths.
        auto cycle_tree(const vector<int> & cycles, const vector<int> & attach_at) -> Structure
        {
            auto g = cycle(cycles[0]);
            for (size_t i = 1 ; i < cycles.size() ; ++i)
                g = glue(g, attach_at[i - 1] % g.size(), cycle(cycles[i]), 0);
            return g;
        }

        auto outerplanar_pool() -> vector<std::pair<string, Structure>>
        {
            vector<std::pair<string, Structure>> pool;
            for (int k = 2 ; k <= 8 ; ++k)
                pool.emplace_back("fan_" + std::to_string(k), fan(k));
            for (int n = 3 ; n <= 9 ; ++n)
                pool.emplace_back("C_" + std::to_string(n), cycle(n));
            pool.emplace_back("tree{3,3}", cycle_tree({ 3, 3 }, { 0 }));
            pool.emplace_back("tree{4,3,3}", cycle_tree({ 4, 3, 3 }, { 0, 2 }));
            pool.emplace_back("tree{5,4}", cycle_tree({ 5, 4 }, { 2 }));
            pool.emplace_back("tree{3,3,3,3}", cycle_tree({ 3, 3, 3, 3 }, { 0, 4, 6 }));
            pool.emplace_back("tree{6,5}", cycle_tree({ 6, 5 }, { 3 }));
            pool.emplace_back("tree{4,4,4}+path", glue(cycle_tree({ 4, 4, 4 }, { 1, 5 }), 9, path(2), 0));
            return pool;
        }

        auto thm_4_4(const Suite & suite) -> vector<Task>
        {
            vector<Task> tasks;
            for (auto & [name, g] : outerplanar_pool())
                tasks.push_back([name, g, &suite] {
                    Lines lines;
                    if (! is_outerplanar(g)) {
                        lines.push_back(suite.fail(name + " is not outerplanar"));
                        return lines;
                    }
                    int clean = 0;
                    for (int s = 0 ; s < g.size() ; ++s) {
                        auto big = iterated_amalgam(g, vector<int>{ s }, 3).structure;
                        bool k4 = has_minor(big, pattern_k4());
                        bool k23 = has_minor(big, pattern_k23());
                        if (k4 || k23)
                            lines.push_back(suite.fail(name + " (+)_{" + std::to_string(s) + "}^3 has a "
                                        + (k4 ? "K4" : "K2,3") + " minor"));
                        else
                            ++clean;
                    }
                    lines.push_back(suite.info(name + ": " + std::to_string(clean) + "/" + std::to_string(g.size())
                                + " single-vertex triple amalgams outerplanar"));
                    return lines;
                });
            tasks.push_back([&suite] {
                auto w = bouquet({ 5, 5, 5, 5, 5 });
                auto found = find_bottleneck(w, 2, 4);
                if (! found)
                    return Lines{ suite.fail("no bottleneck for W_5,5,5,5,5 with r=2 m=4") };
                bool good = found->removed.size() == 1 && found->independent.size() >= 4
                    && is_r_independent(w, found->independent, 2, found->removed);
                return Lines{ suite.check(good, "bottleneck on W_5,5,5,5,5: S={" + join(found->removed) + "} A={"
                            + join(found->independent) + "}") };
            });
            return tasks;
        }

        auto lemma_5_2(const Suite & suite) -> vector<Task>
        {
            vector<std::pair<string, Structure>> targets{ { "G_3", gn(3) }, { "D_4", dn(4) }, { "D_5", dn(5) },
                { "B_4", bn(4) }, { "A_5", an(5) }, { "C_5", cn(5) } };
            vector<Task> tasks;
            for (auto & [name, h] : targets)
                tasks.push_back([name, h, &suite] {
                    Lines lines;
                    if (contains_k4(h)) {
                        lines.push_back(suite.fail(name + " contains K4"));
                        return lines;
                    }
                    auto homs = enumerate_homs(gn(3), h);
                    int injective = 0;
                    for (auto & f : homs) {
                        if (f.kind().injective)
                            ++injective;
                        else
                            lines.push_back(suite.fail("non-injective G_3 -> " + name + " map=" + join(f.map())));
                    }
                    lines.push_back(suite.info(name + " is K4-free; " + std::to_string(homs.size()) + " homs from G_3, "
                                + std::to_string(injective) + " injective"));
                    return lines;
                });
            return tasks;
        }

        auto prop_5_4(const Suite & suite) -> vector<Task>
        {
            vector<Task> tasks;
            tasks.push_back([&suite] {
                return Lines{ suite.check(hom_exists(dn(8), dn(4)), "hom D_8 -> D_4 exists") };
            });
            vector<std::pair<int, int>> pairs;
            for (int n = 4 ; n <= 7 ; ++n)
                for (int m = 4 ; m <= 7 ; ++m)
                    if (n != m)
                        pairs.emplace_back(n, m);
            for (auto p : { std::pair{ 8, 5 }, std::pair{ 8, 6 }, std::pair{ 8, 7 }, std::pair{ 9, 4 }, std::pair{ 9, 5 } })
                pairs.push_back(p);
            for (auto [n, m] : pairs)
                tasks.push_back([n, m, &suite] {
                    SearchStats stats;
                    bool found = false;
                    stats = for_each_hom(dn(n), dn(m), {}, SolverOptions{}, [&](const Mapping &) {
                        found = true;
                        return false;
                    });
                    return Lines{ suite.check(! found, "no hom D_" + std::to_string(n) + " -> D_" + std::to_string(m)
                                + " (" + std::to_string(stats.nodes) + " nodes)") };
                });
            for (int n : { 4, 5 })
                tasks.push_back([n, &suite] {
                    Lines lines;
                    auto d = dn(n);
                    int tried = 0, minors = 0;
                    for (int u = 0 ; u < d.size() ; ++u)
                        for (int v = u + 1 ; v < d.size() ; ++v) {
                            if (d.adjacent(u, v))
                                continue;
                            ++tried;
                            if (has_minor(add_edge(d, u, v), pattern_k5()))
                                ++minors;
                            else
                                lines.push_back(suite.fail("D_" + std::to_string(n) + " + " + d.label(u) + "-" + d.label(v)
                                            + " has no K5 minor"));
                        }
                    lines.push_back(suite.info("D_" + std::to_string(n) + ": " + std::to_string(minors) + "/"
                                + std::to_string(tried) + " one-edge extensions have a K5 minor"));
                    return lines;
                });
            tasks.push_back([&suite] {
                Lines lines;
                vector<Structure> candidates{ dn(4), dn(5), dn(6), dn(7), dn(8) };
                auto entries = hom_image_audit(8, candidates);
                for (size_t i = 0 ; i < entries.size() ; ++i) {
                    auto & e = entries[i];
                    string name = "D_" + std::to_string(4 + i);
                    if (e.skipped)
                        lines.push_back(suite.fail("audit of " + name + " ran out of budget"));
                    else if (! e.consistent())
                        lines.push_back(suite.fail("hom D_8 -> " + name + " without an induced D_m, m | 8"));
                    else
                        lines.push_back(suite.info("audit D_8 -> " + name + ": hom " + (e.hom_exists ? "yes" : "no")
                                    + ", induced D_m for m in {" + join(e.induced) + "}"));
                }
                return lines;
            });
            return tasks;
        }

        auto lemma_5_6(const Suite & suite) -> vector<Task>
        {
            struct Case
            {
                string name;
                Structure h;
                // expected m, 0 for none
                int m;
                bool flagged;
            };
            auto d4 = dn(4);
            vector<Case> cases;
            for (int n : { 4, 5, 6 })
                if (suite.within(n))
                    cases.push_back({ "D_" + std::to_string(n), dn(n), n, false });
            cases.push_back({ "D_4+C_7", plus(d4, cycle(7)), 4, false });
            cases.push_back({ "D_4(+)C_5 at v1", glue(d4, gn_v(1), cycle(5), 0), 4, false });
            cases.push_back({ "D_4(+)P_3 at a1", glue(d4, gn_a(4, 1), path(3), 0), 4, false });
            cases.push_back({ "D_4(+)C_6 at b2", glue(d4, gn_b(4, 2), cycle(6), 0), 4, false });
            cases.push_back({ "C_9", cycle(9), 0, false });
            cases.push_back({ "K_4", clique(4), 0, true });
            cases.push_back({ "D_4+K_4", plus(d4, clique(4)), 0, true });
            cases.push_back({ "D_4(+)K_4 at v1", glue(d4, gn_v(1), clique(4), 0), 0, true });

            vector<Task> tasks;
            for (auto & c : cases)
                tasks.push_back([c, &suite] {
                    auto r = find_induced_Dm(c.h);
                    string got = to_string(r.status) + (r.found() ? " m=" + std::to_string(r.m) : string{});
                    if (c.m > 0) {
                        bool good = r.found() && r.m == c.m;
                        if (good) {
                            auto d = dn(r.m);
                            good = is_homomorphism(d, c.h, r.embedding) && classify(d, c.h, r.embedding).embedding;
                        }
                        return Lines{ suite.check(good, c.name + ": expected m=" + std::to_string(c.m) + ", got " + got) };
                    }
                    bool good = ! r.found() && r.precondition_failed() == c.flagged;
                    return Lines{ suite.check(good, c.name + ": expected none" + (c.flagged ? " (flagged)" : "") + ", got " + got) };
                });

            for (int n = 3 ; n <= 6 ; ++n) {
                if (! suite.within(n))
                    continue;
                auto d = dn(n);
                for (auto & [name, h] : vector<std::pair<string, Structure>>{ { "D_" + std::to_string(n), d },
                        { "D_" + std::to_string(n) + "+C_7", plus(d, cycle(7)) },
                        { "D_" + std::to_string(n) + "(+)C_5", glue(d, gn_v(2), cycle(5), 0) } })
                    tasks.push_back([name, h, &suite] {
                        if (has_minor(h, pattern_k5()))
                            return Lines{ suite.info(name + " has a K5 minor; not applicable") };
                        return Lines{ suite.check(evaluate(phi_planar(), h), name + " |= phi_planar") };
                    });
            }
            return tasks;
        }

        auto thm_5_8(const Suite & suite) -> vector<Task>
        {
            vector<Task> tasks;
            auto planar = [](const Structure & g) { return is_planar(g); };
            vector<std::pair<string, Structure>> full{ { "K_4", clique(4) }, { "D_4", dn(4) } };
            for (auto & [name, g] : full)
                tasks.push_back([name, g, planar, &suite] {
                    auto report = is_minimal_induced_model(phi_hat(), g, planar);
                    string detail = name + " minimal induced model of phi_hat among planar graphs (full scan, "
                        + std::to_string(report.subsets) + " subsets)";
                    if (report.smaller_model)
                        detail += " smaller model on {" + join(*report.smaller_model) + "}";
                    return Lines{ suite.check(report.minimal, detail) };
                });
            for (int n : { 5, 6 })
                tasks.push_back([n, planar, &suite] {
                    MinimalityOptions options;
                    options.mode = MinimalityMode::deletion;
                    auto report = is_minimal_induced_model(phi_hat(), dn(n), planar, options);
                    return Lines{ suite.check(report.minimal, "D_" + std::to_string(n)
                                + " survives every vertex deletion (partial evidence)") };
                });
            tasks.push_back([&suite] {
                Lines lines;
                vector<std::pair<string, Structure>> witnesses{ { "K_4", clique(4) }, { "D_4", dn(4) }, { "D_5", dn(5) },
                    { "D_6", dn(6) }, { "D_7", dn(7) } };
                for (auto & [a, ga] : witnesses)
                    for (auto & [b, gb] : witnesses) {
                        if (a == b)
                            continue;
                        try {
                            if (hom_exists(ga, gb))
                                lines.push_back(suite.fail("hom " + a + " -> " + b + " exists"));
                        }
                        catch (const BudgetExceeded &) {
                            lines.push_back(suite.fail("budget exceeded on " + a + " -> " + b));
                        }
                    }
                if (lines.empty())
                    lines.push_back(suite.ok("K_4, D_4..D_7 pairwise hom-incomparable"));
                return lines;
            });
            return tasks;
        }

        using Builder = vector<Task> (*)(const Suite &);

        auto registry() -> const vector<std::pair<string, Builder>> &
        {
            static const vector<std::pair<string, Builder>> suites{
                { "lemma-3-2", lemma_3_2 },
                { "lemma-3-3-exhaustive", lemma_3_3 },
                { "thm-3-4-minimal-models", thm_3_4_minimal },
                { "thm-3-4-preservation", thm_3_4_preservation },
                { "def-4-1-interpretation", def_4_1 },
                { "amalgam-properties", amalgam_properties },
                { "thm-4-4-outerplanar-closure", thm_4_4 },
                { "lemma-5-2-injective", lemma_5_2 },
                { "prop-5-4-audit", prop_5_4 },
                { "lemma-5-6-chain", lemma_5_6 },
                { "thm-5-8-witnesses", thm_5_8 },
            };
            return suites;
        }
    }

    auto suite_names() -> vector<string>
    {
        vector<string> names;
        for (auto & [name, _] : registry())
            names.push_back(name);
        return names;
    }

    auto run_parallel(const vector<std::function<auto () -> vector<string>>> & tasks, int jobs) -> vector<vector<string>>
    {
        vector<vector<string>> results(tasks.size());
        vector<std::exception_ptr> errors(tasks.size());
        std::atomic<size_t> next{ 0 };
        auto worker = [&] {
            for (size_t i ; (i = next++) < tasks.size() ; ) {
                try {
                    results[i] = tasks[i]();
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        int threads = std::max(1, std::min(jobs, static_cast<int>(tasks.size())));
        vector<std::thread> pool;
        for (int t = 1 ; t < threads ; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);
        return results;
    }

    auto run_suite(std::string_view name, const SuiteOptions & options) -> SuiteReport
    {
        auto & suites = registry();
        auto found = std::find_if(suites.begin(), suites.end(), [&](auto & s) { return s.first == name; });
        if (found == suites.end())
            throw std::invalid_argument("unknown suite '" + string(name) + "'");

        Suite suite{ found->first, options };
        auto tasks = found->second(suite);
        // a task that throws becomes a failure line rather than aborting the suite
        vector<Task> guarded;
        for (auto & task : tasks)
            guarded.push_back([task, &suite]() -> Lines {
                try {
                    return task();
                }
                catch (const std::exception & e) {
                    return { suite.fail(string("error: ") + e.what()) };
                }
            });

        SuiteReport report{ suite.name(), true, {} };
        for (auto & lines : run_parallel(guarded, options.jobs))
            for (auto & line : lines) {
                if (line.rfind("FAIL ", 0) == 0)
                    report.passed = false;
                report.lines.push_back(line);
            }
        return report;
    }
}
