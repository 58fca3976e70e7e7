#include <fmtlab/tree_decomposition.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using std::string;
using std::vector;

namespace fmtlab
{
    auto TreeDecomposition::width() const -> int
    {
        int largest = 0;
        for (auto & bag : bags)
            largest = std::max(largest, static_cast<int>(bag.size()));
        return largest - 1;
    }

    namespace
    {
        auto check_is_tree(const TreeDecomposition & t) -> void
        {
            int n = static_cast<int>(t.bags.size());
            if (n == 0) {
                if (! t.edges.empty())
                    throw std::invalid_argument("tree edges without bags");
                return;
            }
            if (static_cast<int>(t.edges.size()) != n - 1)
                throw std::invalid_argument("decomposition is not a tree: wrong edge count");
            Partition joined(n);
            for (auto [u, v] : t.edges) {
                if (u < 0 || v < 0 || u >= n || v >= n)
                    throw std::invalid_argument("tree edge refers to a missing bag");
                if (joined.same(u, v))
                    throw std::invalid_argument("decomposition is not a tree: cycle");
                joined.unite(u, v);
            }
        }
    }

    auto explain_tree_decomposition(const Structure & g, const TreeDecomposition & t) -> string
    {
        check_is_tree(t);
        int n = g.size();
        int bags = static_cast<int>(t.bags.size());
        vector<vector<int>> holding(n);
        for (int b = 0 ; b < bags ; ++b)
            for (int v : t.bags[b]) {
                if (v < 0 || v >= n)
                    throw std::invalid_argument("bag holds an element outside the domain");
                if (holding[v].empty() || holding[v].back() != b)
                    holding[v].push_back(b);
            }

        for (int v = 0 ; v < n ; ++v)
            if (holding[v].empty())
                return "element " + std::to_string(v) + " is in no bag";

        for (auto [u, v] : g.gaifman_edges()) {
            vector<int> both;
            std::set_intersection(holding[u].begin(), holding[u].end(), holding[v].begin(), holding[v].end(),
                    std::back_inserter(both));
            if (both.empty())
                return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
        }

        for (int v = 0 ; v < n ; ++v) {
            vector<char> in(bags, 0);
            for (int b : holding[v])
                in[b] = 1;
            Partition joined(bags);
            int merges = 0;
            for (auto [a, b] : t.edges)
                if (in[a] && in[b]) {
                    joined.unite(a, b);
                    ++merges;
                }
            if (merges != static_cast<int>(holding[v].size()) - 1)
                return "bags holding element " + std::to_string(v) + " are not connected";
        }
        return {};
    }

    auto validate_tree_decomposition(const Structure & g, const TreeDecomposition & t) -> bool
    {
        return explain_tree_decomposition(g, t).empty();
    }

    auto wheel_decomposition(int n) -> TreeDecomposition
    {
        if (n < 3)
            throw std::invalid_argument("wheel needs n >= 3");
        TreeDecomposition t;
        for (int i = 2 ; i < n ; ++i) {
            t.bags.push_back({ 0, 1, i, i + 1 });
            if (i > 2)
                t.edges.emplace_back(i - 3, i - 2);
        }
        return t;
    }

    auto trivial_decomposition(const Structure & g) -> TreeDecomposition
    {
        vector<int> all(g.size());
        std::iota(all.begin(), all.end(), 0);
        return TreeDecomposition{ { all }, {} };
    }
}
