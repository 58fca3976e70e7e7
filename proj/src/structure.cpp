#include <fmtlab/structure.hpp>
#include <fmtlab/error.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace fmtlab
{
    Vocabulary::Vocabulary(vector<Symbol> symbols) :
        _symbols(std::move(symbols))
    {
        std::set<string> seen;
        for (auto & s : _symbols) {
            if (s.name.empty())
                throw std::invalid_argument("relation symbol with empty name");
            if (s.arity < 1)
                throw std::invalid_argument("relation symbol " + s.name + " has arity < 1");
            if (! seen.insert(s.name).second)
                throw std::invalid_argument("duplicate relation symbol " + s.name);
        }
    }

    auto Vocabulary::graph() -> Vocabulary
    {
        return Vocabulary{ { Symbol{ "E", 2 } } };
    }

    auto Vocabulary::index_of(string_view name) const -> std::optional<size_t>
    {
        for (size_t i = 0 ; i < _symbols.size() ; ++i)
            if (_symbols[i].name == name)
                return i;
        return std::nullopt;
    }

    auto Vocabulary::is_graph() const -> bool
    {
        return _symbols.size() == 1 && _symbols[0].name == "E" && _symbols[0].arity == 2;
    }

    auto Vocabulary::to_string() const -> string
    {
        std::ostringstream out;
        bool first = true;
        for (auto & s : _symbols) {
            if (! first)
                out << ' ';
            first = false;
            out << s.name << '/' << s.arity;
        }
        return out.str();
    }

    namespace detail
    {
        // Membership index for one relation: a dense bit table when the full
        // n^arity grid is small, binary search over the sorted tuples otherwise.
        struct RelationIndex
        {
            bool dense = false;
            vector<std::uint64_t> bits;

            auto slot(int n, std::span<const int> t) const -> size_t
            {
                size_t s = 0;
                for (int x : t)
                    s = s * static_cast<size_t>(n) + static_cast<size_t>(x);
                return s;
            }
        };

        struct StructureData
        {
            Vocabulary vocabulary;
            int size = 0;
            bool graph_mode = false;
            vector<vector<Tuple>> relations;
            vector<RelationIndex> index;
            vector<vector<int>> neighbours;
            vector<vector<std::uint64_t>> adjacency;
            vector<string> labels;
            size_t tuple_count = 0;
        };

        namespace
        {
            constexpr size_t dense_limit = size_t{ 1 } << 22;

            auto build_data(Vocabulary vocabulary, int size, bool graph_mode,
                    vector<vector<Tuple>> relations, vector<string> labels) -> std::shared_ptr<const StructureData>
            {
                auto data = std::make_shared<StructureData>();
                data->vocabulary = std::move(vocabulary);
                data->size = size;
                data->graph_mode = graph_mode;
                data->labels = std::move(labels);
                data->relations = std::move(relations);
                data->relations.resize(data->vocabulary.size());
                data->index.resize(data->vocabulary.size());
                data->neighbours.assign(size, {});
                size_t words = (static_cast<size_t>(size) + 63) / 64;
                data->adjacency.assign(size, vector<std::uint64_t>(words, 0));

                for (size_t r = 0 ; r < data->relations.size() ; ++r) {
                    auto & rel = data->relations[r];
                    std::sort(rel.begin(), rel.end());
                    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
                    data->tuple_count += rel.size();

                    int arity = data->vocabulary[r].arity;
                    size_t grid = 1;
                    bool small = true;
                    for (int i = 0 ; i < arity ; ++i) {
                        grid *= static_cast<size_t>(std::max(size, 1));
                        if (grid > dense_limit) {
                            small = false;
                            break;
                        }
                    }
                    auto & idx = data->index[r];
                    if (small) {
                        idx.dense = true;
                        idx.bits.assign((grid + 63) / 64, 0);
                        for (auto & t : rel) {
                            auto s = idx.slot(size, t);
                            idx.bits[s / 64] |= std::uint64_t{ 1 } << (s % 64);
                        }
                    }

                    for (auto & t : rel)
                        for (size_t i = 0 ; i < t.size() ; ++i)
                            for (size_t j = 0 ; j < t.size() ; ++j)
                                if (t[i] != t[j])
                                    data->adjacency[t[i]][t[j] / 64] |= std::uint64_t{ 1 } << (t[j] % 64);
                }

                for (int v = 0 ; v < size ; ++v)
                    for (int w = 0 ; w < size ; ++w)
                        if (data->adjacency[v][w / 64] & (std::uint64_t{ 1 } << (w % 64)))
                            data->neighbours[v].push_back(w);

                return data;
            }
        }
    }

    Structure::Structure() :
        _data(detail::build_data(Vocabulary{}, 0, false, {}, {}))
    {
    }

    Structure::Structure(std::shared_ptr<const detail::StructureData> data) :
        _data(std::move(data))
    {
    }

    auto Structure::vocabulary() const -> const Vocabulary &
    {
        return _data->vocabulary;
    }

    auto Structure::size() const -> int
    {
        return _data->size;
    }

    auto Structure::is_graph() const -> bool
    {
        return _data->graph_mode;
    }

    auto Structure::tuples(size_t symbol) const -> const vector<Tuple> &
    {
        return _data->relations.at(symbol);
    }

    auto Structure::tuple_count() const -> size_t
    {
        return _data->tuple_count;
    }

    auto Structure::holds(size_t symbol, std::span<const int> tuple) const -> bool
    {
        auto & idx = _data->index.at(symbol);
        if (tuple.size() != static_cast<size_t>(_data->vocabulary[symbol].arity))
            return false;
        for (int x : tuple)
            if (x < 0 || x >= _data->size)
                return false;
        if (idx.dense) {
            auto s = idx.slot(_data->size, tuple);
            return idx.bits[s / 64] & (std::uint64_t{ 1 } << (s % 64));
        }
        auto & rel = _data->relations[symbol];
        Tuple key(tuple.begin(), tuple.end());
        return std::binary_search(rel.begin(), rel.end(), key);
    }

    auto Structure::adjacent(int u, int v) const -> bool
    {
        return _data->adjacency.at(u).at(v / 64) & (std::uint64_t{ 1 } << (v % 64));
    }

    auto Structure::neighbours(int v) const -> const vector<int> &
    {
        return _data->neighbours.at(v);
    }

    auto Structure::degree(int v) const -> int
    {
        return static_cast<int>(_data->neighbours.at(v).size());
    }

    auto Structure::gaifman_edges() const -> vector<std::pair<int, int>>
    {
        vector<std::pair<int, int>> result;
        for (int v = 0 ; v < size() ; ++v)
            for (int w : _data->neighbours[v])
                if (v < w)
                    result.emplace_back(v, w);
        return result;
    }

    auto Structure::label(int v) const -> const string &
    {
        static const string empty;
        if (_data->labels.empty())
            return empty;
        return _data->labels.at(v);
    }

    auto Structure::has_labels() const -> bool
    {
        return ! _data->labels.empty();
    }

    auto Structure::find_label(string_view name) const -> std::optional<int>
    {
        for (size_t i = 0 ; i < _data->labels.size() ; ++i)
            if (_data->labels[i] == name)
                return static_cast<int>(i);
        return std::nullopt;
    }

    auto Structure::element(string_view name) const -> int
    {
        auto v = find_label(name);
        if (! v)
            throw std::out_of_range("no element labelled " + string(name));
        return *v;
    }

    auto Structure::with_labels(vector<string> labels) const -> Structure
    {
        if (! labels.empty() && labels.size() != static_cast<size_t>(size()))
            throw std::invalid_argument("label count does not match domain size");
        auto data = std::make_shared<detail::StructureData>(*_data);
        data->labels = std::move(labels);
        return Structure{ std::move(data) };
    }

    auto operator== (const Structure & a, const Structure & b) -> bool
    {
        return a._data == b._data || (a._data->size == b._data->size
                && a._data->graph_mode == b._data->graph_mode
                && a._data->vocabulary == b._data->vocabulary
                && a._data->relations == b._data->relations);
    }

    StructureBuilder::StructureBuilder(Vocabulary vocabulary, int size) :
        _vocabulary(std::move(vocabulary)),
        _size(size),
        _relations(_vocabulary.size())
    {
        if (size < 0)
            throw std::invalid_argument("negative domain size");
    }

    auto StructureBuilder::graph(int size) -> StructureBuilder
    {
        StructureBuilder result{ Vocabulary::graph(), size };
        result._graph_mode = true;
        return result;
    }

    auto StructureBuilder::add(size_t symbol, Tuple tuple) -> StructureBuilder &
    {
        if (symbol >= _vocabulary.size())
            throw std::out_of_range("relation symbol index out of range");
        if (tuple.size() != static_cast<size_t>(_vocabulary[symbol].arity))
            throw std::invalid_argument("tuple for " + _vocabulary[symbol].name + " has wrong arity");
        for (int x : tuple)
            if (x < 0 || x >= _size)
                throw std::out_of_range("tuple element " + std::to_string(x) + " outside domain");

        if (_graph_mode) {
            if (tuple[0] == tuple[1])
                throw std::invalid_argument("graph edge would be a loop at " + std::to_string(tuple[0]));
            _relations[symbol].push_back(Tuple{ tuple[1], tuple[0] });
        }
        _relations[symbol].push_back(std::move(tuple));
        return *this;
    }

    auto StructureBuilder::add(string_view symbol, Tuple tuple) -> StructureBuilder &
    {
        auto idx = _vocabulary.index_of(symbol);
        if (! idx)
            throw std::invalid_argument("unknown relation symbol " + string(symbol));
        return add(*idx, std::move(tuple));
    }

    auto StructureBuilder::add_edge(int u, int v) -> StructureBuilder &
    {
        if (! _graph_mode)
            throw std::logic_error("add_edge on a builder not in graph mode");
        return add(size_t{ 0 }, Tuple{ u, v });
    }

    auto StructureBuilder::set_label(int v, string name) -> StructureBuilder &
    {
        if (v < 0 || v >= _size)
            throw std::out_of_range("label for element outside domain");
        if (_labels.empty())
            _labels.assign(_size, string{});
        _labels[v] = std::move(name);
        return *this;
    }

    auto StructureBuilder::build() const -> Structure
    {
        return Structure{ detail::build_data(_vocabulary, _size, _graph_mode, _relations, _labels) };
    }

    auto make_graph(int size, std::span<const std::pair<int, int>> edges) -> Structure
    {
        auto builder = StructureBuilder::graph(size);
        for (auto [u, v] : edges)
            builder.add_edge(u, v);
        return builder.build();
    }

    auto make_graph(int size, std::initializer_list<std::pair<int, int>> edges) -> Structure
    {
        return make_graph(size, std::span<const std::pair<int, int>>{ edges.begin(), edges.size() });
    }

    Partition::Partition(int size) :
        _parent(size)
    {
        std::iota(_parent.begin(), _parent.end(), 0);
    }

    auto Partition::find(int a) const -> int
    {
        int root = _parent.at(a);
        while (root != _parent[root])
            root = _parent[root];
        while (_parent[a] != root) {
            int next = _parent[a];
            _parent[a] = root;
            a = next;
        }
        return root;
    }

    auto Partition::unite(int a, int b) -> void
    {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            return;
        // keep the least element as root so roots are canonical
        if (ra < rb)
            _parent[rb] = ra;
        else
            _parent[ra] = rb;
    }

    auto Partition::class_index() const -> vector<int>
    {
        vector<int> root_to_class(_parent.size(), -1), result(_parent.size());
        int next = 0;
        for (size_t a = 0 ; a < _parent.size() ; ++a) {
            int r = find(static_cast<int>(a));
            if (root_to_class[r] == -1)
                root_to_class[r] = next++;
            result[a] = root_to_class[r];
        }
        return result;
    }

    auto Partition::class_count() const -> int
    {
        int count = 0;
        for (size_t a = 0 ; a < _parent.size() ; ++a)
            if (find(static_cast<int>(a)) == static_cast<int>(a))
                ++count;
        return count;
    }
}
