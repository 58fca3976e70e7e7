#include <fmtlab/minors.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/families.hpp>
#include <fmtlab/hom_solver.hpp>
#include <fmtlab/operations.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

using std::uint64_t;
using std::vector;

namespace fmtlab
{
    namespace
    {
        struct Graph
        {
            int n = 0;
            vector<vector<char>> adj;

            explicit Graph(int size = 0) :
                n(size),
                adj(size, vector<char>(size, 0))
            {
            }

            auto add_edge(int u, int v) -> void
            {
                if (u != v)
                    adj[u][v] = adj[v][u] = 1;
            }

            auto degree(int v) const -> int
            {
                int d = 0;
                for (int w = 0 ; w < n ; ++w)
                    d += adj[v][w];
                return d;
            }

            auto edge_count() const -> int
            {
                int m = 0;
                for (int v = 0 ; v < n ; ++v)
                    m += degree(v);
                return m / 2;
            }
        };

        auto as_graph(const Structure & s) -> Graph
        {
            Graph g(s.size());
            for (auto [u, v] : s.gaifman_edges())
                g.add_edge(u, v);
            return g;
        }

        auto induced(const Graph & g, const vector<int> & keep) -> Graph
        {
            Graph r(static_cast<int>(keep.size()));
            for (size_t i = 0 ; i < keep.size() ; ++i)
                for (size_t j = 0 ; j < keep.size() ; ++j)
                    r.adj[i][j] = g.adj[keep[i]][keep[j]];
            return r;
        }

        // Components of g with the removed vertices deleted.
        auto components_without(const Graph & g, const vector<char> & removed) -> vector<vector<int>>
        {
            vector<char> seen(removed);
            vector<vector<int>> result;
            for (int s = 0 ; s < g.n ; ++s) {
                if (seen[s])
                    continue;
                vector<int> comp{ s };
                seen[s] = 1;
                for (size_t i = 0 ; i < comp.size() ; ++i)
                    for (int w = 0 ; w < g.n ; ++w)
                        if (g.adj[comp[i]][w] && ! seen[w]) {
                            seen[w] = 1;
                            comp.push_back(w);
                        }
                std::sort(comp.begin(), comp.end());
                result.push_back(std::move(comp));
            }
            return result;
        }

        auto component_count(const Graph & g) -> int
        {
            return static_cast<int>(components_without(g, vector<char>(g.n, 0)).size());
        }

        // Disconnected after deleting every vertex of some k-subset? (k = 1 or 2)
        auto find_separator(const Graph & g, int k) -> vector<int>
        {
            vector<char> removed(g.n, 0);
            for (int u = 0 ; u < g.n ; ++u) {
                removed[u] = 1;
                if (k == 1) {
                    if (components_without(g, removed).size() > 1)
                        return { u };
                }
                else {
                    for (int v = u + 1 ; v < g.n ; ++v) {
                        removed[v] = 1;
                        bool split = components_without(g, removed).size() > 1;
                        removed[v] = 0;
                        if (split)
                            return { u, v };
                    }
                }
                removed[u] = 0;
            }
            return {};
        }

        auto is_connected(const Graph & g) -> bool
        {
            return g.n <= 1 || component_count(g) == 1;
        }

        auto is_k_connected(const Graph & g, int k) -> bool
        {
            if (g.n <= k || ! is_connected(g))
                return false;
            for (int j = 1 ; j < k ; ++j)
                if (! find_separator(g, j).empty())
                    return false;
            return true;
        }

        auto boost_planar(const Graph & g) -> bool
        {
            using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
            BoostGraph bg(g.n);
            for (int u = 0 ; u < g.n ; ++u)
                for (int v = u + 1 ; v < g.n ; ++v)
                    if (g.adj[u][v])
                        boost::add_edge(u, v, bg);
            return boost::boyer_myrvold_planarity_test(bg);
        }

        auto with_apex(const Graph & g) -> Graph
        {
            Graph r(g.n + 1);
            for (int u = 0 ; u < g.n ; ++u) {
                for (int v = 0 ; v < g.n ; ++v)
                    r.adj[u][v] = g.adj[u][v];
                r.add_edge(u, g.n);
            }
            return r;
        }

        struct Pattern
        {
            Graph graph;
            Structure structure;
            int edges = 0;
            int min_degree = 0;
            bool connected = false;
            bool biconnected = false;
            bool triconnected = false;
            bool complete = false;
            bool planar = false;
            bool apex_planar = false;
            vector<int> degrees_ascending;

            explicit Pattern(const Structure & h) :
                graph(as_graph(h)),
                structure(h.is_graph() ? h : gaifman_graph(h))
            {
                edges = graph.edge_count();
                for (int v = 0 ; v < graph.n ; ++v)
                    degrees_ascending.push_back(graph.degree(v));
                std::sort(degrees_ascending.begin(), degrees_ascending.end());
                min_degree = graph.n ? degrees_ascending.front() : 0;
                connected = graph.n > 0 && is_connected(graph);
                biconnected = is_k_connected(graph, 2);
                triconnected = is_k_connected(graph, 3);
                complete = edges == graph.n * (graph.n - 1) / 2;
                planar = boost_planar(graph);
                apex_planar = boost_planar(with_apex(graph));
            }
        };

        // Branch-set search on a graph of at most 64 vertices. Parts are
        // enumerated as unlabelled connected sets, each grown from the least
        // undecided vertex, so H's automorphisms never produce duplicate work.
        class BranchSearch
        {
            public:
                BranchSearch(const Graph & g, const Pattern & h, uint64_t & nodes, uint64_t budget) :
                    _h(h),
                    _n(g.n),
                    _k(h.graph.n),
                    _nodes(nodes),
                    _budget(budget),
                    _cover(h.connected && is_connected(g))
                {
                    if (g.n > 64)
                        throw BudgetExceeded("branch-set search limited to 64 vertices after reductions");
                    _adj.assign(_n, 0);
                    for (int u = 0 ; u < _n ; ++u)
                        for (int v = 0 ; v < _n ; ++v)
                            if (g.adj[u][v])
                                _adj[u] |= uint64_t{ 1 } << v;
                }

                auto run() -> bool
                {
                    if (_k == 0)
                        return true;
                    uint64_t all = _n == 64 ? ~uint64_t{ 0 } : (uint64_t{ 1 } << _n) - 1;
                    return search(all);
                }

            private:
                const Pattern & _h;
                int _n, _k;
                uint64_t & _nodes;
                uint64_t _budget;
                bool _cover;
                vector<uint64_t> _adj;
                vector<uint64_t> _parts;

                auto tick() -> void
                {
                    if (++_nodes > _budget)
                        throw BudgetExceeded("minor search exceeded " + std::to_string(_budget) + " nodes");
                }

                auto neighbourhood(uint64_t set) const -> uint64_t
                {
                    uint64_t result = 0;
                    for (uint64_t s = set ; s ; s &= s - 1)
                        result |= _adj[std::countr_zero(s)];
                    return result & ~set;
                }

                auto connected(uint64_t set) const -> bool
                {
                    if (! set)
                        return false;
                    uint64_t reached = set & -set, frontier = reached;
                    while (frontier) {
                        uint64_t next = neighbourhood(frontier) & set & ~reached;
                        reached |= next;
                        frontier = next;
                    }
                    return reached == set;
                }

                auto count_components(uint64_t set) const -> int
                {
                    int count = 0;
                    while (set) {
                        uint64_t reached = set & -set, frontier = reached;
                        while (frontier) {
                            uint64_t next = neighbourhood(frontier) & set & ~reached;
                            reached |= next;
                            frontier = next;
                        }
                        set &= ~reached;
                        ++count;
                    }
                    return count;
                }

                // Upper bounds on each part's final degree must dominate the
                // smallest pattern degrees.
                auto degrees_feasible(uint64_t rest, int remaining) const -> bool
                {
                    vector<int> bounds;
                    for (size_t i = 0 ; i < _parts.size() ; ++i) {
                        uint64_t around = neighbourhood(_parts[i]);
                        int known = 0;
                        for (size_t j = 0 ; j < _parts.size() ; ++j)
                            if (j != i && (around & _parts[j]))
                                ++known;
                        bounds.push_back(known + std::min(remaining, std::popcount(around & rest)));
                    }
                    std::sort(bounds.begin(), bounds.end());
                    for (size_t i = 0 ; i < bounds.size() ; ++i)
                        if (bounds[i] < _h.degrees_ascending[i])
                            return false;
                    return true;
                }

                auto complete_check() -> bool
                {
                    Graph q(_k);
                    for (int i = 0 ; i < _k ; ++i) {
                        uint64_t around = neighbourhood(_parts[i]);
                        for (int j = 0 ; j < _k ; ++j)
                            if (i != j && (around & _parts[j]))
                                q.add_edge(i, j);
                    }
                    if (q.edge_count() < _h.edges)
                        return false;
                    auto builder = StructureBuilder::graph(_k);
                    for (int i = 0 ; i < _k ; ++i)
                        for (int j = i + 1 ; j < _k ; ++j)
                            if (q.adj[i][j])
                                builder.add_edge(i, j);
                    HomConstraints injective;
                    injective.injective = true;
                    return hom_exists(_h.structure, builder.build(), injective);
                }

                auto search(uint64_t undecided) -> bool
                {
                    tick();
                    int placed = static_cast<int>(_parts.size());
                    if (placed == _k)
                        return (! _cover || ! undecided) && complete_check();
                    if (! undecided)
                        return false;

                    int remaining = _k - placed;
                    if (std::popcount(undecided) < remaining)
                        return false;

                    if (_cover && remaining == 1) {
                        if (! connected(undecided))
                            return false;
                        _parts.push_back(undecided);
                        bool found = degrees_feasible(0, 0) && complete_check();
                        _parts.pop_back();
                        return found;
                    }

                    uint64_t pivot = undecided & -undecided;
                    if (! _cover && search(undecided & ~pivot))
                        return true;

                    return grow(pivot, neighbourhood(pivot) & undecided, 0, undecided);
                }

                // Enumerates each connected set containing the pivot once, by
                // excluding candidates already tried at this level.
                auto grow(uint64_t part, uint64_t extension, uint64_t excluded, uint64_t undecided) -> bool
                {
                    tick();
                    uint64_t rest = undecided & ~part;
                    int remaining = _k - static_cast<int>(_parts.size()) - 1;
                    if (std::popcount(rest) < remaining)
                        return false;

                    if (! _cover || count_components(rest) <= remaining) {
                        _parts.push_back(part);
                        bool ok = degrees_feasible(rest, remaining) && search(rest);
                        _parts.pop_back();
                        if (ok)
                            return true;
                    }

                    while (extension) {
                        uint64_t u = extension & -extension;
                        extension &= ~u;
                        uint64_t fresh = _adj[std::countr_zero(u)] & undecided & ~part & ~excluded & ~extension & ~u;
                        if (grow(part | u, extension | fresh, excluded, undecided))
                            return true;
                        excluded |= u;
                    }
                    return false;
                }
        };

        class MinorDecider
        {
            public:
                MinorDecider(const Pattern & h, const MinorOptions & options) :
                    _h(h),
                    _options(options)
                {
                }

                auto decide(const Graph & g) -> bool
                {
                    if (g.n < _h.graph.n || g.edge_count() < _h.edges)
                        return false;
                    if (_h.edges == 0)
                        return true;

                    if (_options.reductions) {
                        if (_h.connected) {
                            auto comps = components_without(g, vector<char>(g.n, 0));
                            if (comps.size() > 1) {
                                for (auto & c : comps)
                                    if (decide(induced(g, c)))
                                        return true;
                                return false;
                            }
                        }

                        if (_h.min_degree >= 2 && _h.connected) {
                            for (int v = 0 ; v < g.n ; ++v)
                                if (g.degree(v) <= 1) {
                                    vector<int> keep;
                                    for (int w = 0 ; w < g.n ; ++w)
                                        if (w != v)
                                            keep.push_back(w);
                                    return decide(induced(g, keep));
                                }
                        }

                        if (_h.min_degree >= 3 && _h.connected) {
                            for (int v = 0 ; v < g.n ; ++v)
                                if (g.degree(v) == 2) {
                                    int x = -1;
                                    for (int w = 0 ; w < g.n && x == -1 ; ++w)
                                        if (g.adj[v][w])
                                            x = w;
                                    // contract v into x
                                    Graph c = g;
                                    for (int w = 0 ; w < g.n ; ++w)
                                        if (g.adj[v][w])
                                            c.add_edge(x, w);
                                    vector<int> keep;
                                    for (int w = 0 ; w < g.n ; ++w)
                                        if (w != v)
                                            keep.push_back(w);
                                    return decide(induced(c, keep));
                                }
                        }

                        if (_h.biconnected) {
                            auto cut = find_separator(g, 1);
                            if (! cut.empty() && split(g, cut, false))
                                return true;
                            if (! cut.empty())
                                return false;
                        }

                        if (_h.triconnected) {
                            auto sep = find_separator(g, 2);
                            if (! sep.empty())
                                return split(g, sep, true);
                        }
                    }

                    if (_options.planarity_refutation) {
                        if (! _h.planar && boost_planar(g))
                            return false;
                        if (! _h.apex_planar && boost_planar(with_apex(g)))
                            return false;
                    }

                    BranchSearch search{ g, _h, _nodes, _options.node_budget };
                    return search.run();
                }

            private:
                const Pattern & _h;
                const MinorOptions & _options;
                uint64_t _nodes = 0;

                // Pieces are each component of G - S together with S; with a
                // virtual edge across a 2-separator.
                auto split(const Graph & g, const vector<int> & separator, bool virtual_edge) -> bool
                {
                    vector<char> removed(g.n, 0);
                    for (int s : separator)
                        removed[s] = 1;
                    for (auto & comp : components_without(g, removed)) {
                        auto keep = comp;
                        keep.insert(keep.end(), separator.begin(), separator.end());
                        std::sort(keep.begin(), keep.end());
                        auto piece = induced(g, keep);
                        if (virtual_edge) {
                            auto a = std::lower_bound(keep.begin(), keep.end(), separator[0]) - keep.begin();
                            auto b = std::lower_bound(keep.begin(), keep.end(), separator[1]) - keep.begin();
                            piece.add_edge(static_cast<int>(a), static_cast<int>(b));
                        }
                        if (decide(piece))
                            return true;
                    }
                    return false;
                }
        };
    }

    auto pattern_k4() -> Structure
    {
        return clique(4);
    }

    auto pattern_k5() -> Structure
    {
        return clique(5);
    }

    auto pattern_k33() -> Structure
    {
        return biclique(3, 3);
    }

    auto pattern_k23() -> Structure
    {
        return biclique(2, 3);
    }

    auto pattern_by_name(std::string_view name) -> std::optional<Structure>
    {
        if (name == "k4")
            return pattern_k4();
        if (name == "k5")
            return pattern_k5();
        if (name == "k33")
            return pattern_k33();
        if (name == "k23")
            return pattern_k23();
        return std::nullopt;
    }

    auto has_minor(const Structure & g, const Structure & h, const MinorOptions & options) -> bool
    {
        Pattern pattern{ h };
        MinorDecider decider{ pattern, options };
        return decider.decide(as_graph(g));
    }

    auto is_planar(const Structure & g, const MinorOptions & options) -> bool
    {
        return ! has_minor(g, pattern_k5(), options) && ! has_minor(g, pattern_k33(), options);
    }

    auto is_outerplanar(const Structure & g, const MinorOptions & options) -> bool
    {
        return ! has_minor(g, pattern_k4(), options) && ! has_minor(g, pattern_k23(), options);
    }

    auto planarity_test(const Structure & g) -> bool
    {
        return boost_planar(as_graph(g));
    }
}
