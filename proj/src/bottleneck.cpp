#include <fmtlab/bottleneck.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/operations.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

using std::uint64_t;
using std::vector;

namespace fmtlab
{
    namespace
    {
        // Pairs at distance <= r in g - removed, over the surviving elements.
        struct Conflicts
        {
            vector<int> original;
            vector<vector<char>> close;
        };

        auto conflicts(const Structure & g, int r, std::span<const int> removed) -> Conflicts
        {
            auto rest = remove_elements(gaifman_graph(g), removed);
            int n = rest.structure.size();
            Conflicts c{ rest.original, vector<vector<char>>(n, vector<char>(n, 0)) };
            for (int v = 0 ; v < n ; ++v) {
                auto d = distances_from(rest.structure, v);
                for (int w = 0 ; w < n ; ++w)
                    c.close[v][w] = w != v && d[w] != -1 && d[w] <= r;
            }
            return c;
        }

        auto greedy(const Conflicts & c) -> vector<int>
        {
            int n = static_cast<int>(c.original.size());
            vector<char> alive(n, 1);
            vector<int> chosen;
            while (true) {
                int best = -1, best_degree = 0;
                for (int v = 0 ; v < n ; ++v) {
                    if (! alive[v])
                        continue;
                    int degree = 0;
                    for (int w = 0 ; w < n ; ++w)
                        degree += alive[w] && c.close[v][w];
                    if (best == -1 || degree < best_degree) {
                        best = v;
                        best_degree = degree;
                    }
                }
                if (best == -1)
                    return chosen;
                chosen.push_back(best);
                alive[best] = 0;
                for (int w = 0 ; w < n ; ++w)
                    if (c.close[best][w])
                        alive[w] = 0;
            }
        }

        class ExactSearch
        {
            public:
                ExactSearch(const Conflicts & c, int target, uint64_t budget) :
                    _target(target),
                    _budget(budget)
                {
                    int n = static_cast<int>(c.original.size());
                    _close.assign(n, 0);
                    for (int v = 0 ; v < n ; ++v)
                        for (int w = 0 ; w < n ; ++w)
                            if (c.close[v][w])
                                _close[v] |= uint64_t{ 1 } << w;
                }

                auto run(uint64_t candidates, vector<int> seed) -> vector<int>
                {
                    _best = seed;
                    vector<int> current;
                    search(candidates, current);
                    return _best;
                }

            private:
                vector<uint64_t> _close;
                int _target;
                uint64_t _budget, _nodes = 0;
                vector<int> _best;

                auto done() const -> bool
                {
                    return static_cast<int>(_best.size()) >= _target;
                }

                auto search(uint64_t candidates, vector<int> & current) -> void
                {
                    if (++_nodes > _budget)
                        throw BudgetExceeded("r-independent set search exceeded its node budget");
                    if (current.size() > _best.size())
                        _best = current;
                    if (done() || candidates == 0)
                        return;
                    if (static_cast<int>(current.size()) + std::popcount(candidates) <= static_cast<int>(_best.size()))
                        return;

                    // branch on a vertex of fewest conflicts: take it, or drop it
                    int pick = -1, fewest = 65;
                    for (uint64_t rest = candidates ; rest ; rest &= rest - 1) {
                        int v = std::countr_zero(rest);
                        int k = std::popcount(_close[v] & candidates);
                        if (k < fewest) {
                            fewest = k;
                            pick = v;
                        }
                    }
                    current.push_back(pick);
                    search(candidates & ~_close[pick] & ~(uint64_t{ 1 } << pick), current);
                    current.pop_back();
                    if (done() || fewest == 0)
                        return;
                    search(candidates & ~(uint64_t{ 1 } << pick), current);
                }
        };

        auto next_combination(vector<int> & s, int n) -> bool
        {
            int k = static_cast<int>(s.size());
            for (int i = k - 1 ; i >= 0 ; --i)
                if (s[i] < n - k + i) {
                    ++s[i];
                    for (int j = i + 1 ; j < k ; ++j)
                        s[j] = s[j - 1] + 1;
                    return true;
                }
            return false;
        }
    }

    auto is_r_independent(const Structure & g, std::span<const int> elements, int r,
            std::span<const int> removed) -> bool
    {
        vector<char> gone(g.size(), 0);
        for (int s : removed)
            gone.at(s) = 1;
        auto rest = remove_elements(gaifman_graph(g), removed);
        vector<int> index(g.size(), -1);
        for (int i = 0 ; i < rest.structure.size() ; ++i)
            index[rest.original[i]] = i;
        for (size_t i = 0 ; i < elements.size() ; ++i) {
            if (gone.at(elements[i]))
                return false;
            auto d = distances_from(rest.structure, index[elements[i]]);
            for (size_t j = 0 ; j < elements.size() ; ++j) {
                if (i == j)
                    continue;
                int e = d[index.at(elements[j])];
                if (e != -1 && e <= r)
                    return false;
            }
        }
        return true;
    }

    auto r_independent_set(const Structure & g, int r, std::span<const int> removed, int target,
            const BottleneckOptions & options) -> vector<int>
    {
        auto c = conflicts(g, r, removed);
        auto local = greedy(c);
        int n = static_cast<int>(c.original.size());
        if (static_cast<int>(local.size()) < target && n <= std::min(options.exact_limit, 64)) {
            uint64_t all = n == 64 ? ~uint64_t{ 0 } : (uint64_t{ 1 } << n) - 1;
            local = ExactSearch{ c, target, options.node_budget }.run(all, local);
        }
        vector<int> result;
        for (int v : local)
            result.push_back(c.original[v]);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto find_bottleneck(const Structure & g, int r, int m, const BottleneckOptions & options)
        -> std::optional<Bottleneck>
    {
        if (r < 1 || m < 1)
            throw std::invalid_argument("bottleneck search needs r >= 1 and m >= 1");
        int n = g.size();
        for (int size = 0 ; size <= std::min(options.cap, n) ; ++size) {
            vector<int> s(size);
            for (int i = 0 ; i < size ; ++i)
                s[i] = i;
            do {
                auto a = r_independent_set(g, r, s, m, options);
                if (static_cast<int>(a.size()) >= m) {
                    bool complete = true;
                    for (int x : a)
                        for (int y : s)
                            complete = complete && g.adjacent(x, y);
                    return Bottleneck{ std::move(a), std::move(s), complete };
                }
            } while (next_combination(s, n));
        }
        return std::nullopt;
    }
}
