#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fmtlab
{
    using Tuple = std::vector<int>;

    /// Total map between two domains, indexed by source element.
    using Mapping = std::vector<int>;

    struct Symbol
    {
        std::string name;
        int arity = 0;

        friend auto operator== (const Symbol &, const Symbol &) -> bool = default;
    };

    /// Ordered list of relation symbols. Names are unique, arities positive.
    class Vocabulary
    {
        public:
            Vocabulary() = default;
            explicit Vocabulary(std::vector<Symbol> symbols);

            /// The vocabulary {E/2}.
            static auto graph() -> Vocabulary;

            auto size() const -> std::size_t { return _symbols.size(); }
            auto symbols() const -> const std::vector<Symbol> & { return _symbols; }
            auto operator[] (std::size_t i) const -> const Symbol & { return _symbols.at(i); }
            auto index_of(std::string_view name) const -> std::optional<std::size_t>;
            auto is_graph() const -> bool;
            auto to_string() const -> std::string;

            friend auto operator== (const Vocabulary &, const Vocabulary &) -> bool = default;

        private:
            std::vector<Symbol> _symbols;
    };

    namespace detail
    {
        struct StructureData;
    }

    /// A finite relational structure over a vocabulary, with domain 0..n-1.
    ///
    /// Immutable once built (see StructureBuilder); copies share their data, so
    /// passing structures around by value is cheap. A structure in graph mode
    /// has vocabulary {E/2} with E irreflexive and symmetric.
    ///
    /// Elements may carry an optional text label (v1, a3, apex, ...), which is
    /// metadata only and plays no part in any semantic operation.
    class Structure
    {
        public:
            Structure();

            auto vocabulary() const -> const Vocabulary &;
            auto size() const -> int;
            auto is_graph() const -> bool;

            /// Sorted, duplicate-free tuples of one relation.
            auto tuples(std::size_t symbol) const -> const std::vector<Tuple> &;
            auto tuple_count() const -> std::size_t;
            auto holds(std::size_t symbol, std::span<const int> tuple) const -> bool;

            /// Gaifman adjacency: distinct elements co-occurring in some tuple.
            auto adjacent(int u, int v) const -> bool;
            auto neighbours(int v) const -> const std::vector<int> &;
            auto degree(int v) const -> int;

            /// Unordered Gaifman edges (u < v), sorted.
            auto gaifman_edges() const -> std::vector<std::pair<int, int>>;

            auto label(int v) const -> const std::string &;
            auto has_labels() const -> bool;
            auto find_label(std::string_view name) const -> std::optional<int>;
            /// Throws std::out_of_range when no element carries this label.
            auto element(std::string_view name) const -> int;

            /// Same structure with new element labels (size must match or be empty).
            auto with_labels(std::vector<std::string> labels) const -> Structure;

            friend auto operator== (const Structure &, const Structure &) -> bool;

        private:
            friend class StructureBuilder;
            explicit Structure(std::shared_ptr<const detail::StructureData> data);

            std::shared_ptr<const detail::StructureData> _data;
    };

    /// Accumulates tuples, then freezes them into a Structure.
    class StructureBuilder
    {
        public:
            StructureBuilder(Vocabulary vocabulary, int size);

            /// A graph-mode builder: vocabulary {E/2}, edges auto-symmetrised, loops rejected.
            static auto graph(int size) -> StructureBuilder;

            auto add(std::size_t symbol, Tuple tuple) -> StructureBuilder &;
            auto add(std::string_view symbol, Tuple tuple) -> StructureBuilder &;
            auto add_edge(int u, int v) -> StructureBuilder &;
            auto set_label(int v, std::string name) -> StructureBuilder &;

            auto size() const -> int { return _size; }
            auto is_graph() const -> bool { return _graph_mode; }
            auto build() const -> Structure;

        private:
            Vocabulary _vocabulary;
            int _size;
            bool _graph_mode = false;
            std::vector<std::vector<Tuple>> _relations;
            std::vector<std::string> _labels;
    };

    /// Convenience: a graph-mode structure from an edge list.
    auto make_graph(int size, std::span<const std::pair<int, int>> edges) -> Structure;
    auto make_graph(int size, std::initializer_list<std::pair<int, int>> edges) -> Structure;

    /// Equivalence relation on 0..n-1 closed by union-find.
    class Partition
    {
        public:
            explicit Partition(int size);

            auto size() const -> int { return static_cast<int>(_parent.size()); }
            auto unite(int a, int b) -> void;
            auto find(int a) const -> int;
            auto same(int a, int b) const -> bool { return find(a) == find(b); }

            /// Class index of each element; classes are numbered by their least element.
            auto class_index() const -> std::vector<int>;
            auto class_count() const -> int;

        private:
            mutable std::vector<int> _parent;
    };
}
