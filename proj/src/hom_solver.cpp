#include <fmtlab/hom_solver.hpp>
#include <fmtlab/error.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace fmtlab
{
    namespace
    {
        using Word = uint64_t;

        struct Arc
        {
            int other;
            int relation;
            // constraint is R(x, other) when true, R(other, x) otherwise
            bool outgoing;
        };

        struct SourceTuple
        {
            int relation;
            const Tuple * tuple;
            vector<int> vars;
            // binary tuples over two distinct variables are handled by arcs
            bool general;
            int assigned = 0;
        };

        class Search
        {
            public:
                Search(const Structure & source, const Structure & target, const HomConstraints & constraints,
                        const SolverOptions & options, const std::function<auto (const Mapping &) -> bool> & visit) :
                    _a(source),
                    _b(target),
                    _c(constraints),
                    _o(options),
                    _visit(visit),
                    _n(source.size()),
                    _m(target.size()),
                    _words((static_cast<size_t>(target.size()) + 63) / 64)
                {
                }

                auto run() -> SearchStats
                {
                    if (! (_a.vocabulary() == _b.vocabulary()))
                        throw VocabularyMismatch("homomorphism search between structures over different vocabularies");
                    check_partial();

                    if (_n == 0) {
                        if (leaf_ok()) {
                            ++_stats.solutions;
                            _visit(Mapping{});
                        }
                        return _stats;
                    }
                    if (_m == 0)
                        return _stats;
                    if (_c.injective && _n > _m)
                        return _stats;
                    if (_c.full) {
                        if (_n < _m)
                            return _stats;
                        for (size_t r = 0 ; r < _a.vocabulary().size() ; ++r)
                            if (_a.tuples(r).size() < _b.tuples(r).size())
                                return _stats;
                    }

                    prepare();
                    if (! initial_filter())
                        return _stats;
                    _saved.assign(static_cast<size_t>(_n) + 1, vector<Word>(_dom.size()));
                    search(0);
                    return _stats;
                }

            private:
                const Structure & _a;
                const Structure & _b;
                const HomConstraints & _c;
                const SolverOptions & _o;
                const std::function<auto (const Mapping &) -> bool> & _visit;
                int _n, _m;
                size_t _words;

                SearchStats _stats;
                bool _stopped = false;

                vector<Word> _dom;
                vector<vector<Word>> _saved;
                Mapping _assignment;
                int _unassigned = 0;

                // per relation, flattened [b * words + w]
                vector<vector<Word>> _succ, _pred;
                vector<vector<Word>> _diag;
                vector<vector<Arc>> _arcs, _anti_arcs;
                vector<SourceTuple> _stuples;
                vector<vector<int>> _var_stuples;
                vector<int> _constraint_degree;
                bool _needs_strong_leaf_check = false;

                // surjectivity and fullness bookkeeping
                vector<int> _hits;
                int _hits_distinct = 0;
                vector<std::map<Tuple, int>> _target_index;
                vector<vector<int>> _cover_count;
                vector<int> _covered_distinct, _pending;

                auto dom(int x) -> Word *
                {
                    return _dom.data() + static_cast<size_t>(x) * _words;
                }

                auto count(const Word * d) const -> int
                {
                    int c = 0;
                    for (size_t w = 0 ; w < _words ; ++w)
                        c += std::popcount(d[w]);
                    return c;
                }

                auto empty(const Word * d) const -> bool
                {
                    for (size_t w = 0 ; w < _words ; ++w)
                        if (d[w])
                            return false;
                    return true;
                }

                static auto test(const Word * d, int b) -> bool
                {
                    return d[b / 64] & (Word{ 1 } << (b % 64));
                }

                static auto set(Word * d, int b) -> void
                {
                    d[b / 64] |= Word{ 1 } << (b % 64);
                }

                auto check_partial() -> void
                {
                    std::map<int, int> seen;
                    for (auto [s, t] : _c.partial) {
                        if (s < 0 || s >= _n || t < 0 || t >= _m)
                            throw std::invalid_argument("partial map entry outside the domains");
                        auto [it, fresh] = seen.emplace(s, t);
                        if (! fresh && it->second != t)
                            throw std::invalid_argument("partial map assigns element " + std::to_string(s) + " twice");
                    }
                }

                auto prepare() -> void
                {
                    size_t rels = _a.vocabulary().size();
                    _succ.assign(rels, {});
                    _pred.assign(rels, {});
                    _diag.assign(rels, vector<Word>(_words, 0));
                    _arcs.assign(_n, {});
                    _anti_arcs.assign(_n, {});
                    _var_stuples.assign(_n, {});
                    _constraint_degree.assign(_n, 0);
                    _assignment.assign(_n, -1);
                    _unassigned = _n;
                    _hits.assign(_m, 0);

                    for (size_t r = 0 ; r < rels ; ++r) {
                        int arity = _a.vocabulary()[r].arity;
                        for (auto & bt : _b.tuples(r)) {
                            if (std::all_of(bt.begin(), bt.end(), [&] (int v) { return v == bt[0]; }))
                                set(_diag[r].data(), bt[0]);
                        }
                        if (arity == 2) {
                            _succ[r].assign(static_cast<size_t>(_m) * _words, 0);
                            _pred[r].assign(static_cast<size_t>(_m) * _words, 0);
                            for (auto & bt : _b.tuples(r)) {
                                set(_succ[r].data() + static_cast<size_t>(bt[0]) * _words, bt[1]);
                                set(_pred[r].data() + static_cast<size_t>(bt[1]) * _words, bt[0]);
                            }
                        }
                        if (arity >= 3 && _c.strong)
                            _needs_strong_leaf_check = true;
                    }

                    for (size_t r = 0 ; r < rels ; ++r) {
                        for (auto & t : _a.tuples(r)) {
                            SourceTuple st;
                            st.relation = static_cast<int>(r);
                            st.tuple = &t;
                            for (int v : t)
                                if (std::find(st.vars.begin(), st.vars.end(), v) == st.vars.end())
                                    st.vars.push_back(v);
                            st.general = ! (t.size() == 2 && st.vars.size() == 2) && st.vars.size() > 1;
                            int id = static_cast<int>(_stuples.size());
                            for (int v : st.vars) {
                                _var_stuples[v].push_back(id);
                                ++_constraint_degree[v];
                            }
                            if (t.size() == 2 && t[0] != t[1]) {
                                _arcs[t[0]].push_back(Arc{ t[1], static_cast<int>(r), true });
                                _arcs[t[1]].push_back(Arc{ t[0], static_cast<int>(r), false });
                            }
                            _stuples.push_back(std::move(st));
                        }
                    }

                    if (_c.strong) {
                        for (size_t r = 0 ; r < rels ; ++r) {
                            if (_a.vocabulary()[r].arity != 2)
                                continue;
                            for (int x = 0 ; x < _n ; ++x)
                                for (int y = 0 ; y < _n ; ++y)
                                    if (x != y && ! _a.holds(r, Tuple{ x, y })) {
                                        _anti_arcs[x].push_back(Arc{ y, static_cast<int>(r), true });
                                        _anti_arcs[y].push_back(Arc{ x, static_cast<int>(r), false });
                                    }
                        }
                    }

                    _target_index.assign(rels, {});
                    _cover_count.assign(rels, {});
                    _covered_distinct.assign(rels, 0);
                    _pending.assign(rels, 0);
                    if (_c.full) {
                        for (size_t r = 0 ; r < rels ; ++r) {
                            int i = 0;
                            for (auto & bt : _b.tuples(r))
                                _target_index[r].emplace(bt, i++);
                            _cover_count[r].assign(_b.tuples(r).size(), 0);
                            _pending[r] = static_cast<int>(_a.tuples(r).size());
                        }
                    }
                }

                auto initial_filter() -> bool
                {
                    _dom.assign(static_cast<size_t>(_n) * _words, 0);
                    for (int x = 0 ; x < _n ; ++x)
                        for (int b = 0 ; b < _m ; ++b)
                            set(dom(x), b);

                    size_t rels = _a.vocabulary().size();
                    for (size_t r = 0 ; r < rels ; ++r) {
                        for (auto & st : _stuples)
                            if (st.relation == static_cast<int>(r) && st.vars.size() == 1)
                                for (size_t w = 0 ; w < _words ; ++w)
                                    dom(st.vars[0])[w] &= _diag[r][w];

                        if (_c.strong && _a.vocabulary()[r].arity <= 2) {
                            for (int x = 0 ; x < _n ; ++x) {
                                Tuple diag(_a.vocabulary()[r].arity, x);
                                if (! _a.holds(r, diag))
                                    for (size_t w = 0 ; w < _words ; ++w)
                                        dom(x)[w] &= ~_diag[r][w];
                            }
                        }
                    }

                    for (auto [s, t] : _c.partial) {
                        bool ok = test(dom(s), t);
                        std::fill(dom(s), dom(s) + _words, 0);
                        if (ok)
                            set(dom(s), t);
                    }

                    for (int x = 0 ; x < _n ; ++x)
                        if (empty(dom(x)))
                            return false;

                    vector<int> queue(_n);
                    std::iota(queue.begin(), queue.end(), 0);
                    return arc_consistency(queue);
                }

                auto support(const Arc & arc, int b) const -> const Word *
                {
                    auto & table = arc.outgoing ? _succ[arc.relation] : _pred[arc.relation];
                    return table.data() + static_cast<size_t>(b) * _words;
                }

                auto arc_consistency(vector<int> & queue) -> bool
                {
                    vector<char> queued(_n, 0);
                    for (int x : queue)
                        queued[x] = 1;
                    vector<Word> reach(_words);
                    while (! queue.empty()) {
                        int y = queue.back();
                        queue.pop_back();
                        queued[y] = 0;
                        for (auto & arc : _arcs[y]) {
                            std::fill(reach.begin(), reach.end(), 0);
                            const Word * dy = dom(y);
                            for (size_t w = 0 ; w < _words ; ++w) {
                                Word bits = dy[w];
                                while (bits) {
                                    int b = static_cast<int>(w * 64) + std::countr_zero(bits);
                                    bits &= bits - 1;
                                    const Word * s = support(arc, b);
                                    for (size_t k = 0 ; k < _words ; ++k)
                                        reach[k] |= s[k];
                                }
                            }
                            Word * dz = dom(arc.other);
                            bool changed = false;
                            for (size_t w = 0 ; w < _words ; ++w) {
                                Word nw = dz[w] & reach[w];
                                if (nw != dz[w]) {
                                    dz[w] = nw;
                                    changed = true;
                                }
                            }
                            if (changed) {
                                if (empty(dz))
                                    return false;
                                if (! queued[arc.other]) {
                                    queued[arc.other] = 1;
                                    queue.push_back(arc.other);
                                }
                            }
                        }
                    }
                    return true;
                }

                auto assign_counters(int x, int b) -> bool
                {
                    bool ok = true;
                    _assignment[x] = b;
                    --_unassigned;
                    if (_hits[b]++ == 0)
                        ++_hits_distinct;
                    for (int id : _var_stuples[x]) {
                        auto & st = _stuples[id];
                        if (++st.assigned == static_cast<int>(st.vars.size())) {
                            Tuple image(st.tuple->size());
                            for (size_t i = 0 ; i < image.size() ; ++i)
                                image[i] = _assignment[(*st.tuple)[i]];
                            if (st.general && ! _b.holds(st.relation, image))
                                ok = false;
                            if (_c.full) {
                                --_pending[st.relation];
                                auto it = _target_index[st.relation].find(image);
                                if (it != _target_index[st.relation].end())
                                    if (_cover_count[st.relation][it->second]++ == 0)
                                        ++_covered_distinct[st.relation];
                            }
                        }
                    }
                    return ok;
                }

                auto unassign_counters(int x, int b) -> void
                {
                    for (int id : _var_stuples[x]) {
                        auto & st = _stuples[id];
                        if (st.assigned-- == static_cast<int>(st.vars.size()) && _c.full) {
                            Tuple image(st.tuple->size());
                            for (size_t i = 0 ; i < image.size() ; ++i)
                                image[i] = _assignment[(*st.tuple)[i]];
                            ++_pending[st.relation];
                            auto it = _target_index[st.relation].find(image);
                            if (it != _target_index[st.relation].end())
                                if (--_cover_count[st.relation][it->second] == 0)
                                    --_covered_distinct[st.relation];
                        }
                    }
                    if (--_hits[b] == 0)
                        --_hits_distinct;
                    _assignment[x] = -1;
                    ++_unassigned;
                }

                // Filters the single unassigned variable of a general tuple.
                auto forward_check(const SourceTuple & st) -> bool
                {
                    int free_var = -1;
                    for (int v : st.vars)
                        if (_assignment[v] == -1)
                            free_var = v;
                    vector<Word> allowed(_words, 0);
                    auto & t = *st.tuple;
                    for (auto & bt : _b.tuples(st.relation)) {
                        int candidate = -1;
                        bool match = true;
                        for (size_t i = 0 ; i < t.size() && match ; ++i) {
                            if (t[i] == free_var) {
                                if (candidate == -1)
                                    candidate = bt[i];
                                else if (candidate != bt[i])
                                    match = false;
                            }
                            else if (_assignment[t[i]] != bt[i])
                                match = false;
                        }
                        if (match)
                            set(allowed.data(), candidate);
                    }
                    Word * d = dom(free_var);
                    for (size_t w = 0 ; w < _words ; ++w)
                        d[w] &= allowed[w];
                    return ! empty(d);
                }

                auto propagate(int x, int b) -> bool
                {
                    Word * dx = dom(x);
                    std::fill(dx, dx + _words, 0);
                    set(dx, b);

                    vector<int> queue;
                    auto restrict = [&] (int y, const Word * mask, bool negate) -> bool {
                        Word * dy = dom(y);
                        bool changed = false;
                        for (size_t w = 0 ; w < _words ; ++w) {
                            Word nw = dy[w] & (negate ? ~mask[w] : mask[w]);
                            if (nw != dy[w]) {
                                dy[w] = nw;
                                changed = true;
                            }
                        }
                        if (changed) {
                            if (empty(dy))
                                return false;
                            queue.push_back(y);
                        }
                        return true;
                    };

                    for (auto & arc : _arcs[x])
                        if (! restrict(arc.other, support(arc, b), false))
                            return false;
                    for (auto & arc : _anti_arcs[x])
                        if (! restrict(arc.other, support(arc, b), true))
                            return false;

                    if (_c.injective) {
                        vector<Word> single(_words, 0);
                        set(single.data(), b);
                        for (int y = 0 ; y < _n ; ++y)
                            if (y != x && ! restrict(y, single.data(), true))
                                return false;
                    }

                    for (int id : _var_stuples[x]) {
                        auto & st = _stuples[id];
                        if (st.general && st.assigned == static_cast<int>(st.vars.size()) - 1)
                            if (! forward_check(st))
                                return false;
                    }

                    queue.push_back(x);
                    if (! arc_consistency(queue))
                        return false;

                    return counting_bounds();
                }

                auto counting_bounds() -> bool
                {
                    if (! _c.injective && ! _c.full)
                        return true;

                    vector<Word> reachable(_words, 0);
                    for (int y = 0 ; y < _n ; ++y)
                        if (_assignment[y] == -1)
                            for (size_t w = 0 ; w < _words ; ++w)
                                reachable[w] |= dom(y)[w];

                    if (_c.injective && count(reachable.data()) < _unassigned)
                        return false;

                    if (_c.full) {
                        if (_m - _hits_distinct > _unassigned)
                            return false;
                        for (int b = 0 ; b < _m ; ++b)
                            if (_hits[b] == 0 && ! test(reachable.data(), b))
                                return false;
                        for (size_t r = 0 ; r < _cover_count.size() ; ++r)
                            if (static_cast<int>(_cover_count[r].size()) - _covered_distinct[r] > _pending[r])
                                return false;
                    }
                    return true;
                }

                auto leaf_ok() -> bool
                {
                    if (_c.full) {
                        if (_hits_distinct != _m)
                            return false;
                        for (size_t r = 0 ; r < _cover_count.size() ; ++r)
                            if (_covered_distinct[r] != static_cast<int>(_cover_count[r].size()))
                                return false;
                    }
                    if (_needs_strong_leaf_check || (_n == 0 && (_c.strong || _c.full)))
                        return classify(_a, _b, _assignment).strong || ! _c.strong;
                    return true;
                }

                auto choose_variable() -> int
                {
                    int best = -1, best_size = 0;
                    for (int x = 0 ; x < _n ; ++x) {
                        if (_assignment[x] != -1)
                            continue;
                        int size = count(dom(x));
                        if (best == -1 || size < best_size
                                || (size == best_size && _constraint_degree[x] > _constraint_degree[best])) {
                            best = x;
                            best_size = size;
                        }
                    }
                    return best;
                }

                auto search(int depth) -> void
                {
                    if (_unassigned == 0) {
                        if (leaf_ok()) {
                            ++_stats.solutions;
                            if (! _visit(_assignment))
                                _stopped = true;
                        }
                        return;
                    }

                    int x = choose_variable();
                    auto & saved = _saved[depth];
                    saved = _dom;

                    vector<int> values;
                    for (size_t w = 0 ; w < _words ; ++w) {
                        Word bits = saved[static_cast<size_t>(x) * _words + w];
                        while (bits) {
                            values.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
                            bits &= bits - 1;
                        }
                    }

                    bool tried_unused = false;
                    for (int b : values) {
                        if (_o.interchangeable_targets && _hits[b] == 0) {
                            if (tried_unused)
                                continue;
                            tried_unused = true;
                        }

                        if (++_stats.nodes > _o.node_budget)
                            throw BudgetExceeded("homomorphism search exceeded " + std::to_string(_o.node_budget) + " nodes");

                        _dom = saved;
                        bool ok = assign_counters(x, b);
                        if (ok)
                            ok = propagate(x, b);
                        if (ok)
                            search(depth + 1);
                        unassign_counters(x, b);
                        if (_stopped)
                            break;
                    }
                    _dom = saved;
                }
        };
    }

    auto for_each_hom(const Structure & source, const Structure & target, const HomConstraints & constraints,
            const SolverOptions & options, const std::function<auto (const Mapping &) -> bool> & visit) -> SearchStats
    {
        Search search{ source, target, constraints, options, visit };
        return search.run();
    }

    auto find_hom(const Structure & source, const Structure & target, const HomConstraints & constraints,
            const SolverOptions & options) -> std::optional<Homomorphism>
    {
        std::optional<Mapping> found;
        for_each_hom(source, target, constraints, options, [&] (const Mapping & m) {
                found = m;
                return false;
                });
        if (! found)
            return std::nullopt;
        return Homomorphism{ source, target, std::move(*found) };
    }

    auto enumerate_homs(const Structure & source, const Structure & target, const HomConstraints & constraints,
            const SolverOptions & options) -> vector<Homomorphism>
    {
        vector<Mapping> maps;
        for_each_hom(source, target, constraints, options, [&] (const Mapping & m) {
                maps.push_back(m);
                return true;
                });
        std::sort(maps.begin(), maps.end());
        vector<Homomorphism> result;
        result.reserve(maps.size());
        for (auto & m : maps)
            result.emplace_back(source, target, std::move(m));
        return result;
    }

    auto count_homs(const Structure & source, const Structure & target, const HomConstraints & constraints,
            const SolverOptions & options) -> uint64_t
    {
        return for_each_hom(source, target, constraints, options, [] (const Mapping &) { return true; }).solutions;
    }

    auto hom_exists(const Structure & source, const Structure & target, const HomConstraints & constraints,
            const SolverOptions & options) -> bool
    {
        bool found = false;
        for_each_hom(source, target, constraints, options, [&] (const Mapping &) {
                found = true;
                return false;
                });
        return found;
    }

    auto complete_graph(int k) -> Structure
    {
        auto builder = StructureBuilder::graph(k);
        for (int i = 0 ; i < k ; ++i)
            for (int j = i + 1 ; j < k ; ++j)
                builder.add_edge(i, j);
        return builder.build();
    }

    auto chromatic_number(const Structure & graph, const SolverOptions & options) -> int
    {
        if (! graph.is_graph())
            throw std::invalid_argument("chromatic number needs a graph");
        if (graph.size() == 0)
            return 0;
        if (graph.tuple_count() == 0)
            return 1;

        auto opts = options;
        opts.interchangeable_targets = true;
        for (int k = 2 ; ; ++k)
            if (hom_exists(graph, complete_graph(k), {}, opts))
                return k;
    }

    namespace
    {
        // Isomorphism-invariant colouring by iterated refinement over tuple incidences.
        auto refined_colours(const Structure & s) -> vector<int>
        {
            int n = s.size();
            vector<int> colour(n, 0);
            int classes = n > 0 ? 1 : 0;
            while (true) {
                vector<vector<int>> signature(n);
                for (int v = 0 ; v < n ; ++v)
                    signature[v].push_back(colour[v]);
                vector<vector<vector<int>>> incidences(n);
                for (size_t r = 0 ; r < s.vocabulary().size() ; ++r)
                    for (auto & t : s.tuples(r))
                        for (size_t i = 0 ; i < t.size() ; ++i) {
                            vector<int> entry{ static_cast<int>(r), static_cast<int>(i) };
                            for (int x : t)
                                entry.push_back(colour[x]);
                            incidences[t[i]].push_back(std::move(entry));
                        }
                for (int v = 0 ; v < n ; ++v) {
                    std::sort(incidences[v].begin(), incidences[v].end());
                    for (auto & e : incidences[v]) {
                        signature[v].push_back(-1);
                        signature[v].insert(signature[v].end(), e.begin(), e.end());
                    }
                }
                auto sorted = signature;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                vector<int> next(n);
                for (int v = 0 ; v < n ; ++v)
                    next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), signature[v]) - sorted.begin());
                int next_classes = static_cast<int>(sorted.size());
                colour = std::move(next);
                if (next_classes == classes)
                    break;
                classes = next_classes;
            }
            return colour;
        }

        auto encode(const Structure & s, const vector<int> & position) -> vector<int>
        {
            vector<int> code{ s.size() };
            for (size_t r = 0 ; r < s.vocabulary().size() ; ++r) {
                vector<Tuple> mapped;
                mapped.reserve(s.tuples(r).size());
                for (auto & t : s.tuples(r)) {
                    Tuple m(t.size());
                    for (size_t i = 0 ; i < t.size() ; ++i)
                        m[i] = position[t[i]];
                    mapped.push_back(std::move(m));
                }
                std::sort(mapped.begin(), mapped.end());
                code.push_back(-1);
                code.push_back(static_cast<int>(mapped.size()));
                for (auto & t : mapped)
                    code.insert(code.end(), t.begin(), t.end());
            }
            return code;
        }
    }

    auto canonical_form(const Structure & s) -> vector<int>
    {
        int n = s.size();
        auto colour = refined_colours(s);

        // cells of equal colour, ordered by colour; positions inside a cell are permuted
        vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return colour[a] < colour[b]; });
        vector<std::pair<int, int>> cells;
        for (int i = 0 ; i < n ; ) {
            int j = i;
            while (j < n && colour[order[j]] == colour[order[i]])
                ++j;
            cells.emplace_back(i, j);
            i = j;
        }

        vector<int> best;
        vector<int> position(n);
        auto arrangement = order;
        auto recurse = [&] (auto & self, size_t cell) -> void {
            if (cell == cells.size()) {
                for (int i = 0 ; i < n ; ++i)
                    position[arrangement[i]] = i;
                auto code = encode(s, position);
                if (best.empty() || code < best)
                    best = std::move(code);
                return;
            }
            auto [lo, hi] = cells[cell];
            std::sort(arrangement.begin() + lo, arrangement.begin() + hi);
            do {
                self(self, cell + 1);
            } while (std::next_permutation(arrangement.begin() + lo, arrangement.begin() + hi));
        };
        recurse(recurse, 0);

        // colour classes are part of the form so equal codes imply equal refinements
        vector<int> histogram;
        for (auto [lo, hi] : cells)
            histogram.push_back(hi - lo);
        best.push_back(-2);
        best.insert(best.end(), histogram.begin(), histogram.end());
        return best;
    }

    auto are_isomorphic_by_search(const Structure & a, const Structure & b) -> bool
    {
        if (! (a.vocabulary() == b.vocabulary()) || a.size() != b.size())
            return false;
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r)
            if (a.tuples(r).size() != b.tuples(r).size())
                return false;
        return hom_exists(a, b, HomConstraints::embedding());
    }

    auto are_isomorphic(const Structure & a, const Structure & b) -> bool
    {
        if (! (a.vocabulary() == b.vocabulary()) || a.size() != b.size())
            return false;
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r)
            if (a.tuples(r).size() != b.tuples(r).size())
                return false;
        if (a.size() <= 9)
            return canonical_form(a) == canonical_form(b);
        return are_isomorphic_by_search(a, b);
    }
}
