#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

using fmtlab::FormulaKind;
using std::vector;

namespace oracle
{
    auto all_maps(int from, int to) -> vector<vector<int>>
    {
        vector<vector<int>> maps;
        if (to == 0)
            return from == 0 ? vector<vector<int>>{ {} } : maps;
        vector<int> map(from, 0);
        while (true) {
            maps.push_back(map);
            int i = from - 1;
            while (i >= 0 && map[i] == to - 1)
                map[i--] = 0;
            if (i < 0)
                return maps;
            ++map[i];
        }
    }

    auto preserves(const Structure & a, const Structure & b, const vector<int> & map) -> bool
    {
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r)
            for (auto & t : a.tuples(r)) {
                vector<int> image;
                for (int x : t)
                    image.push_back(map[x]);
                if (! b.holds(r, image))
                    return false;
            }
        return true;
    }

    auto count_homs(const Structure & a, const Structure & b) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for (auto & map : all_maps(a.size(), b.size()))
            count += preserves(a, b, map);
        return count;
    }

    auto hom_exists(const Structure & a, const Structure & b) -> bool
    {
        return count_homs(a, b) > 0;
    }

    auto injective_hom_exists(const Structure & a, const Structure & b) -> bool
    {
        for (auto & map : all_maps(a.size(), b.size())) {
            auto sorted = map;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && preserves(a, b, map))
                return true;
        }
        return false;
    }

    auto chromatic_number(const Structure & g) -> int
    {
        for (int k = 0 ; ; ++k)
            for (auto & colouring : all_maps(g.size(), k)) {
                bool proper = true;
                for (auto [u, v] : g.gaifman_edges())
                    proper = proper && colouring[u] != colouring[v];
                if (proper)
                    return k;
            }
    }

    auto isomorphic(const Structure & a, const Structure & b) -> bool
    {
        if (a.size() != b.size() || a.vocabulary() != b.vocabulary() || a.tuple_count() != b.tuple_count())
            return false;
        vector<int> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (preserves(a, b, perm))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    namespace
    {
        auto connected(const Structure & g, const vector<int> & set) -> bool
        {
            vector<int> seen{ set[0] }, stack{ set[0] };
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : set)
                    if (g.adjacent(v, w) && std::find(seen.begin(), seen.end(), w) == seen.end()) {
                        seen.push_back(w);
                        stack.push_back(w);
                    }
            }
            return seen.size() == set.size();
        }
    }

    auto has_minor(const Structure & g, const Structure & h) -> bool
    {
        int n = g.size(), k = h.size();
        // label k means "deleted"
        for (auto & assign : all_maps(n, k + 1)) {
            vector<vector<int>> sets(k);
            for (int v = 0 ; v < n ; ++v)
                if (assign[v] < k)
                    sets[assign[v]].push_back(v);
            bool ok = true;
            for (int i = 0 ; i < k && ok ; ++i) {
                if (sets[i].empty()) {
                    ok = false;
                    break;
                }
                ok = connected(g, sets[i]);
            }
            for (auto [x, y] : h.gaifman_edges()) {
                if (! ok)
                    break;
                bool joined = false;
                for (int u : sets[x])
                    for (int v : sets[y])
                        joined = joined || g.adjacent(u, v);
                ok = joined;
            }
            if (ok)
                return true;
        }
        return false;
    }

    auto distances(const Structure & a) -> vector<vector<int>>
    {
        int n = a.size();
        const int inf = 1 << 20;
        vector<vector<int>> d(n, vector<int>(n, inf));
        for (int v = 0 ; v < n ; ++v)
            d[v][v] = 0;
        for (auto [u, v] : a.gaifman_edges())
            d[u][v] = d[v][u] = 1;
        for (int k = 0 ; k < n ; ++k)
            for (int i = 0 ; i < n ; ++i)
                for (int j = 0 ; j < n ; ++j)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        for (auto & row : d)
            for (auto & x : row)
                if (x == inf)
                    x = -1;
        return d;
    }

    namespace
    {
        auto satisfies_with(const Formula & f, const Structure & a, std::map<std::string, int> & valuation,
                const vector<vector<int>> & d) -> bool
        {
            switch (f.kind()) {
                case FormulaKind::truth:
                    return true;
                case FormulaKind::falsity:
                    return false;
                case FormulaKind::negation:
                    return ! satisfies_with(f.body(), a, valuation, d);
                case FormulaKind::conjunction:
                    for (auto & c : f.children())
                        if (! satisfies_with(c, a, valuation, d))
                            return false;
                    return true;
                case FormulaKind::disjunction:
                    for (auto & c : f.children())
                        if (satisfies_with(c, a, valuation, d))
                            return true;
                    return false;
                case FormulaKind::equal:
                    return valuation.at(f.arguments()[0]) == valuation.at(f.arguments()[1]);
                case FormulaKind::dist_le: {
                    int e = d[valuation.at(f.arguments()[0])][valuation.at(f.arguments()[1])];
                    return e != -1 && e <= f.radius();
                }
                case FormulaKind::atom: {
                    auto r = a.vocabulary().index_of(f.symbol());
                    vector<int> t;
                    for (auto & x : f.arguments())
                        t.push_back(valuation.at(x));
                    return a.holds(r.value(), t);
                }
                case FormulaKind::exists:
                case FormulaKind::forall: {
                    auto saved = valuation.find(f.variable()) == valuation.end()
                        ? std::optional<int>{} : std::optional<int>{ valuation[f.variable()] };
                    bool want = f.kind() == FormulaKind::exists;
                    bool result = ! want;
                    for (int x = 0 ; x < a.size() ; ++x) {
                        valuation[f.variable()] = x;
                        if (satisfies_with(f.body(), a, valuation, d) == want) {
                            result = want;
                            break;
                        }
                    }
                    if (saved)
                        valuation[f.variable()] = *saved;
                    else
                        valuation.erase(f.variable());
                    return result;
                }
            }
            throw std::logic_error("unknown formula kind");
        }
    }

    auto satisfies(const Formula & f, const Structure & a, std::map<std::string, int> valuation) -> bool
    {
        auto d = distances(a);
        return satisfies_with(f, a, valuation, d);
    }

    auto random_graph(std::mt19937_64 & rng, int n, double density) -> Structure
    {
        std::bernoulli_distribution coin{ density };
        auto builder = fmtlab::StructureBuilder::graph(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    builder.add_edge(u, v);
        return builder.build();
    }

    auto graph_from_mask(int n, std::uint64_t mask) -> Structure
    {
        auto builder = fmtlab::StructureBuilder::graph(n);
        int bit = 0;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v, ++bit)
                if (mask >> bit & 1)
                    builder.add_edge(u, v);
        return builder.build();
    }
}
