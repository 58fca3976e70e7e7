#include <fmtlab/operations.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/hom_solver.hpp>

#include <algorithm>
#include <deque>
#include <map>

using std::size_t;
using std::vector;

namespace fmtlab
{
    namespace
    {
        auto builder_like(const Structure & a, int size) -> StructureBuilder
        {
            if (a.is_graph())
                return StructureBuilder::graph(size);
            return StructureBuilder{ a.vocabulary(), size };
        }

        auto check_element(const Structure & a, int v) -> void
        {
            if (v < 0 || v >= a.size())
                throw std::out_of_range("element " + std::to_string(v) + " outside domain of size " + std::to_string(a.size()));
        }

        auto sorted_unique(const Structure & a, std::span<const int> elements) -> vector<int>
        {
            vector<int> result(elements.begin(), elements.end());
            for (int v : result)
                check_element(a, v);
            std::sort(result.begin(), result.end());
            result.erase(std::unique(result.begin(), result.end()), result.end());
            return result;
        }
    }

    auto gaifman_graph(const Structure & a) -> Structure
    {
        auto builder = StructureBuilder::graph(a.size());
        for (auto [u, v] : a.gaifman_edges())
            builder.add_edge(u, v);
        if (a.has_labels())
            for (int v = 0 ; v < a.size() ; ++v)
                builder.set_label(v, a.label(v));
        return builder.build();
    }

    auto distances_from(const Structure & a, int source) -> vector<int>
    {
        check_element(a, source);
        vector<int> dist(a.size(), -1);
        std::deque<int> queue{ source };
        dist[source] = 0;
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : a.neighbours(u))
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    auto ball(const Structure & a, int centre, int radius) -> vector<int>
    {
        if (radius < 0)
            throw std::invalid_argument("negative ball radius");
        auto dist = distances_from(a, centre);
        vector<int> result;
        for (int v = 0 ; v < a.size() ; ++v)
            if (dist[v] != -1 && dist[v] <= radius)
                result.push_back(v);
        return result;
    }

    auto components(const Structure & a) -> vector<vector<int>>
    {
        vector<int> seen(a.size(), 0);
        vector<vector<int>> result;
        for (int s = 0 ; s < a.size() ; ++s) {
            if (seen[s])
                continue;
            vector<int> comp{ s };
            seen[s] = 1;
            for (size_t i = 0 ; i < comp.size() ; ++i)
                for (int w : a.neighbours(comp[i]))
                    if (! seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            result.push_back(std::move(comp));
        }
        return result;
    }

    auto induced_substructure(const Structure & a, std::span<const int> subset) -> Induced
    {
        auto kept = sorted_unique(a, subset);
        vector<int> position(a.size(), -1);
        for (size_t i = 0 ; i < kept.size() ; ++i)
            position[kept[i]] = static_cast<int>(i);

        auto builder = builder_like(a, static_cast<int>(kept.size()));
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r)
            for (auto & t : a.tuples(r)) {
                Tuple mapped(t.size());
                bool inside = true;
                for (size_t i = 0 ; i < t.size() && inside ; ++i) {
                    mapped[i] = position[t[i]];
                    inside = mapped[i] != -1;
                }
                if (inside)
                    builder.add(r, std::move(mapped));
            }
        if (a.has_labels())
            for (size_t i = 0 ; i < kept.size() ; ++i)
                builder.set_label(static_cast<int>(i), a.label(kept[i]));
        return Induced{ builder.build(), std::move(kept) };
    }

    auto remove_elements(const Structure & a, std::span<const int> removed) -> Induced
    {
        auto gone = sorted_unique(a, removed);
        vector<int> kept;
        for (int v = 0 ; v < a.size() ; ++v)
            if (! std::binary_search(gone.begin(), gone.end(), v))
                kept.push_back(v);
        return induced_substructure(a, kept);
    }

    auto is_substructure(const Structure & b, const Structure & a, SubstructureMode mode,
            const Mapping & inclusion) -> bool
    {
        if (! (a.vocabulary() == b.vocabulary()))
            throw VocabularyMismatch("substructure test across vocabularies");
        if (inclusion.size() != static_cast<size_t>(b.size()))
            return false;
        vector<int> preimage(a.size(), -1);
        for (size_t i = 0 ; i < inclusion.size() ; ++i) {
            int x = inclusion[i];
            if (x < 0 || x >= a.size() || preimage[x] != -1)
                return false;
            preimage[x] = static_cast<int>(i);
        }
        if (! is_homomorphism(b, a, inclusion))
            return false;
        if (mode == SubstructureMode::weak)
            return true;

        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r)
            for (auto & t : a.tuples(r)) {
                int inside = 0;
                Tuple back(t.size());
                for (size_t i = 0 ; i < t.size() ; ++i) {
                    back[i] = preimage[t[i]];
                    if (back[i] != -1)
                        ++inside;
                }
                if (inside == static_cast<int>(t.size())) {
                    if (! b.holds(r, back))
                        return false;
                }
                else if (inside > 0 && mode == SubstructureMode::free)
                    return false;
            }
        return true;
    }

    auto is_substructure(const Structure & b, const Structure & a, SubstructureMode mode) -> bool
    {
        if (! (a.vocabulary() == b.vocabulary()))
            throw VocabularyMismatch("substructure test across vocabularies");
        HomConstraints constraints;
        constraints.injective = true;
        constraints.strong = mode != SubstructureMode::weak;
        bool found = false;
        for_each_hom(b, a, constraints, {}, [&] (const Mapping & m) {
                found = is_substructure(b, a, mode, m);
                return ! found;
                });
        return found;
    }

    auto disjoint_union(const Structure & a, const Structure & b) -> Union
    {
        if (! (a.vocabulary() == b.vocabulary()))
            throw VocabularyMismatch("disjoint union of structures over different vocabularies");
        int n = a.size() + b.size();
        auto builder = a.is_graph() && b.is_graph() ? StructureBuilder::graph(n) : StructureBuilder{ a.vocabulary(), n };
        Mapping left(a.size()), right(b.size());
        for (int v = 0 ; v < a.size() ; ++v)
            left[v] = v;
        for (int v = 0 ; v < b.size() ; ++v)
            right[v] = a.size() + v;
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r) {
            for (auto & t : a.tuples(r))
                builder.add(r, t);
            for (auto & t : b.tuples(r)) {
                Tuple shifted(t.size());
                for (size_t i = 0 ; i < t.size() ; ++i)
                    shifted[i] = right[t[i]];
                builder.add(r, std::move(shifted));
            }
        }
        if (a.has_labels() || b.has_labels()) {
            for (int v = 0 ; v < a.size() ; ++v)
                builder.set_label(v, a.label(v));
            for (int v = 0 ; v < b.size() ; ++v)
                builder.set_label(right[v], b.label(v));
        }
        return Union{ builder.build(), std::move(left), std::move(right) };
    }

    auto quotient(const Structure & a, const Partition & partition) -> Quotient
    {
        if (partition.size() != a.size())
            throw std::invalid_argument("partition size does not match domain size");
        auto index = partition.class_index();
        int classes = partition.class_count();

        auto builder = builder_like(a, classes);
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r)
            for (auto & t : a.tuples(r)) {
                Tuple mapped(t.size());
                for (size_t i = 0 ; i < t.size() ; ++i)
                    mapped[i] = index[t[i]];
                if (a.is_graph() && mapped[0] == mapped[1])
                    throw LoopCreated("quotient identifies adjacent vertices " + std::to_string(t[0]) + " and " + std::to_string(t[1]));
                builder.add(r, std::move(mapped));
            }
        if (a.has_labels()) {
            vector<char> named(classes, 0);
            for (int v = 0 ; v < a.size() ; ++v)
                if (! named[index[v]]) {
                    named[index[v]] = 1;
                    builder.set_label(index[v], a.label(v));
                }
        }
        auto q = builder.build();
        return Quotient{ q, Homomorphism{ a, q, std::move(index) } };
    }

    auto quotient(const Structure & a, std::span<const std::pair<int, int>> identified) -> Quotient
    {
        Partition partition(a.size());
        for (auto [u, v] : identified) {
            check_element(a, u);
            check_element(a, v);
            partition.unite(u, v);
        }
        return quotient(a, partition);
    }

    auto free_amalgam(const Structure & a, const Structure & b,
            std::span<const int> shared_left, std::span<const int> shared_right) -> Amalgam
    {
        if (! (a.vocabulary() == b.vocabulary()))
            throw VocabularyMismatch("free amalgam of structures over different vocabularies");
        if (shared_left.size() != shared_right.size())
            throw std::invalid_argument("shared parts have different sizes");
        if (sorted_unique(a, shared_left).size() != shared_left.size()
                || sorted_unique(b, shared_right).size() != shared_right.size())
            throw std::invalid_argument("shared part lists an element twice");

        // A[S] and B[S] must agree under the identification
        auto in_a = induced_substructure(a, shared_left);
        auto in_b = induced_substructure(b, shared_right);
        Mapping a_to_b(in_a.original.size());
        for (size_t i = 0 ; i < shared_left.size() ; ++i) {
            auto pa = std::lower_bound(in_a.original.begin(), in_a.original.end(), shared_left[i]) - in_a.original.begin();
            auto pb = std::lower_bound(in_b.original.begin(), in_b.original.end(), shared_right[i]) - in_b.original.begin();
            a_to_b[pa] = static_cast<int>(pb);
        }
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r) {
            if (in_a.structure.tuples(r).size() != in_b.structure.tuples(r).size())
                throw PreconditionFailed("shared substructures differ");
            for (auto & t : in_a.structure.tuples(r)) {
                Tuple mapped(t.size());
                for (size_t i = 0 ; i < t.size() ; ++i)
                    mapped[i] = a_to_b[t[i]];
                if (! in_b.structure.holds(r, mapped))
                    throw PreconditionFailed("shared substructures differ");
            }
        }

        Mapping from_left(a.size()), from_right(b.size(), -1);
        for (int v = 0 ; v < a.size() ; ++v)
            from_left[v] = v;
        for (size_t i = 0 ; i < shared_right.size() ; ++i)
            from_right[shared_right[i]] = shared_left[i];
        int next = a.size();
        for (int v = 0 ; v < b.size() ; ++v)
            if (from_right[v] == -1)
                from_right[v] = next++;

        auto builder = a.is_graph() && b.is_graph() ? StructureBuilder::graph(next) : StructureBuilder{ a.vocabulary(), next };
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r) {
            for (auto & t : a.tuples(r))
                builder.add(r, t);
            for (auto & t : b.tuples(r)) {
                Tuple mapped(t.size());
                for (size_t i = 0 ; i < t.size() ; ++i)
                    mapped[i] = from_right[t[i]];
                builder.add(r, std::move(mapped));
            }
        }
        if (a.has_labels() || b.has_labels()) {
            for (int v = 0 ; v < b.size() ; ++v)
                if (from_right[v] >= a.size())
                    builder.set_label(from_right[v], b.label(v));
            for (int v = 0 ; v < a.size() ; ++v)
                builder.set_label(v, a.label(v));
        }
        return Amalgam{ builder.build(), std::move(from_left), std::move(from_right) };
    }

    auto free_amalgam(const Structure & a, const Structure & b, std::span<const int> shared) -> Amalgam
    {
        return free_amalgam(a, b, shared, shared);
    }

    auto iterated_amalgam(const Structure & m, std::span<const int> shared, int copies) -> IteratedAmalgam
    {
        if (copies < 1)
            throw std::invalid_argument("iterated amalgam needs at least one copy");
        auto s = sorted_unique(m, shared);

        Structure current = m;
        Mapping identity(m.size());
        for (int v = 0 ; v < m.size() ; ++v)
            identity[v] = v;
        vector<Mapping> maps{ identity };
        Mapping fold = identity;

        for (int i = 1 ; i < copies ; ++i) {
            auto amalgam = free_amalgam(current, m, s, s);
            current = amalgam.structure;
            fold.resize(current.size());
            for (int v = 0 ; v < m.size() ; ++v)
                fold[amalgam.from_right[v]] = v;
            maps.push_back(std::move(amalgam.from_right));
        }
        return IteratedAmalgam{ current, std::move(maps), std::move(fold) };
    }
}
