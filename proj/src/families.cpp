#include <fmtlab/families.hpp>
#include <fmtlab/operations.hpp>

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

using std::string;
using std::string_view;
using std::vector;

namespace fmtlab
{
    namespace
    {
        auto require(bool condition, const string & message) -> void
        {
            if (! condition)
                throw std::invalid_argument(message);
        }

        auto parse_int(string_view text, string_view spec) -> int
        {
            int value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
                throw std::invalid_argument("bad parameter '" + string(text) + "' in " + string(spec));
            return value;
        }

        auto split(string_view text, char separator) -> vector<string_view>
        {
            vector<string_view> parts;
            size_t start = 0;
            while (true) {
                auto at = text.find(separator, start);
                parts.push_back(text.substr(start, at == string_view::npos ? string_view::npos : at - start));
                if (at == string_view::npos)
                    return parts;
                start = at + 1;
            }
        }

        auto build_gn(int n, bool closed) -> Structure
        {
            auto builder = StructureBuilder::graph(2 * n + 2);
            builder.set_label(0, "v1").set_label(1, "v2");
            for (int i = 1 ; i <= n ; ++i) {
                builder.set_label(gn_a(n, i), "a" + std::to_string(i));
                builder.set_label(gn_b(n, i), "b" + std::to_string(i));
                builder.add_edge(gn_v(1), gn_a(n, i));
                builder.add_edge(gn_v(2), gn_b(n, i));
                builder.add_edge(gn_a(n, i), gn_b(n, i));
                if (i < n) {
                    builder.add_edge(gn_a(n, i), gn_a(n, i + 1));
                    builder.add_edge(gn_b(n, i), gn_b(n, i + 1));
                    builder.add_edge(gn_a(n, i + 1), gn_b(n, i));
                }
            }
            if (closed) {
                builder.add_edge(gn_a(n, 1), gn_a(n, n));
                builder.add_edge(gn_b(n, 1), gn_b(n, n));
                builder.add_edge(gn_a(n, 1), gn_b(n, n));
            }
            return builder.build();
        }

        auto gn_quotient(int n, int u, int v) -> Quotient
        {
            require(n >= 3, "quotients of G_n need n >= 3");
            std::pair<int, int> pair{ u, v };
            return quotient(gn(n), std::span{ &pair, 1 });
        }

        // Every vertex has degree at most 2 and there is no cycle.
        auto is_linear_forest(const Structure & g) -> bool
        {
            for (int v = 0 ; v < g.size() ; ++v)
                if (g.degree(v) > 2)
                    return false;
            return static_cast<int>(g.gaifman_edges().size()) + static_cast<int>(components(g).size()) == g.size();
        }

        auto is_odd_cycle_of_length_at_least_5(const Structure & g) -> bool
        {
            if (g.size() < 5 || g.size() % 2 == 0)
                return false;
            for (int v = 0 ; v < g.size() ; ++v)
                if (g.degree(v) != 2)
                    return false;
            return components(g).size() == 1;
        }
    }

    auto cycle(int n) -> Structure
    {
        require(n >= 3, "cycle needs n >= 3");
        auto builder = StructureBuilder::graph(n);
        for (int i = 0 ; i < n ; ++i) {
            builder.add_edge(i, (i + 1) % n);
            builder.set_label(i, "c" + std::to_string(i + 1));
        }
        return builder.build();
    }

    auto path(int n) -> Structure
    {
        require(n >= 1, "path needs n >= 1");
        auto builder = StructureBuilder::graph(n);
        for (int i = 0 ; i < n ; ++i) {
            if (i + 1 < n)
                builder.add_edge(i, i + 1);
            builder.set_label(i, "p" + std::to_string(i + 1));
        }
        return builder.build();
    }

    auto clique(int n) -> Structure
    {
        require(n >= 1, "clique needs n >= 1");
        auto builder = StructureBuilder::graph(n);
        for (int i = 0 ; i < n ; ++i) {
            builder.set_label(i, "k" + std::to_string(i + 1));
            for (int j = i + 1 ; j < n ; ++j)
                builder.add_edge(i, j);
        }
        return builder.build();
    }

    auto biclique(int a, int b) -> Structure
    {
        require(a >= 1 && b >= 1, "biclique needs both sides non-empty");
        auto builder = StructureBuilder::graph(a + b);
        for (int i = 0 ; i < a ; ++i) {
            builder.set_label(i, "l" + std::to_string(i + 1));
            for (int j = 0 ; j < b ; ++j)
                builder.add_edge(i, a + j);
        }
        for (int j = 0 ; j < b ; ++j)
            builder.set_label(a + j, "r" + std::to_string(j + 1));
        return builder.build();
    }

    auto bouquet(const vector<int> & cycle_lengths) -> Structure
    {
        require(! cycle_lengths.empty(), "bouquet needs at least one cycle");
        int total = 1;
        for (int len : cycle_lengths) {
            require(len >= 3, "bouquet cycles need length >= 3");
            total += len;
        }
        auto builder = StructureBuilder::graph(total);
        builder.set_label(0, "apex");
        int next = 1;
        for (size_t c = 0 ; c < cycle_lengths.size() ; ++c) {
            int len = cycle_lengths[c];
            for (int j = 0 ; j < len ; ++j) {
                builder.set_label(next + j, "c" + std::to_string(c + 1) + "_" + std::to_string(j + 1));
                builder.add_edge(0, next + j);
                builder.add_edge(next + j, next + (j + 1) % len);
            }
            next += len;
        }
        return builder.build();
    }

    auto wheel(int n) -> Structure
    {
        require(n >= 3, "wheel needs n >= 3");
        return bouquet({ n });
    }

    auto wheel_with_pendant(int n) -> Structure
    {
        auto w = wheel(n);
        auto builder = StructureBuilder::graph(w.size() + 1);
        for (auto [u, v] : w.gaifman_edges())
            builder.add_edge(u, v);
        for (int v = 0 ; v < w.size() ; ++v)
            builder.set_label(v, w.label(v));
        builder.set_label(w.size(), "c");
        builder.add_edge(0, w.size());
        return builder.build();
    }

    auto gn_v(int j) -> int
    {
        require(j == 1 || j == 2, "v index must be 1 or 2");
        return j - 1;
    }

    auto gn_a(int n, int i) -> int
    {
        require(i >= 1 && i <= n, "a index out of range");
        return 1 + i;
    }

    auto gn_b(int n, int i) -> int
    {
        require(i >= 1 && i <= n, "b index out of range");
        return 1 + n + i;
    }

    auto gn(int n) -> Structure
    {
        require(n >= 1, "G_n needs n >= 1");
        return build_gn(n, false);
    }

    auto dn(int n) -> Structure
    {
        require(n >= 3, "D_n needs n >= 3");
        return build_gn(n, true);
    }

    auto an_quotient(int n) -> Quotient
    {
        require(n >= 3, "A_n needs n >= 3");
        return gn_quotient(n, gn_a(n, 1), gn_a(n, n));
    }

    auto bn_quotient(int n) -> Quotient
    {
        require(n >= 3, "B_n needs n >= 3");
        return gn_quotient(n, gn_a(n, 1), gn_b(n, n));
    }

    auto cn_quotient(int n) -> Quotient
    {
        require(n >= 3, "C_n needs n >= 3");
        return gn_quotient(n, gn_b(n, 1), gn_b(n, n));
    }

    auto an(int n) -> Structure
    {
        return an_quotient(n).structure;
    }

    auto bn(int n) -> Structure
    {
        return bn_quotient(n).structure;
    }

    auto cn(int n) -> Structure
    {
        return cn_quotient(n).structure;
    }

    auto gen(string_view spec) -> Structure
    {
        auto colon = spec.find(':');
        if (colon == string_view::npos)
            throw std::invalid_argument("expected family:params, got '" + string(spec) + "'");
        auto family = spec.substr(0, colon);
        auto params = spec.substr(colon + 1);

        if (family == "biclique") {
            auto parts = split(params, ',');
            require(parts.size() == 2, "biclique takes a,b");
            return biclique(parse_int(parts[0], spec), parse_int(parts[1], spec));
        }
        if (family == "bouquet") {
            vector<int> lengths;
            for (auto part : split(params, '+'))
                lengths.push_back(parse_int(part, spec));
            return bouquet(lengths);
        }

        int n = parse_int(params, spec);
        if (family == "cycle")
            return cycle(n);
        if (family == "path")
            return path(n);
        if (family == "clique")
            return clique(n);
        if (family == "wheel")
            return wheel(n);
        if (family == "gn")
            return gn(n);
        if (family == "dn")
            return dn(n);
        if (family == "an")
            return an(n);
        if (family == "bn")
            return bn(n);
        if (family == "cn")
            return cn(n);
        throw std::invalid_argument("unknown family '" + string(family) + "'");
    }

    auto delta_hom(int n, int m) -> Homomorphism
    {
        require(3 <= m && m <= n, "delta_{n,m} needs 3 <= m <= n");
        Mapping map(2 * n + 2);
        map[gn_v(1)] = gn_v(1);
        map[gn_v(2)] = gn_v(2);
        for (int i = 1 ; i <= n ; ++i) {
            int wrapped = (i - 1) % m + 1;
            map[gn_a(n, i)] = gn_a(m, wrapped);
            map[gn_b(n, i)] = gn_b(m, wrapped);
        }
        return Homomorphism{ gn(n), dn(m), std::move(map) };
    }

    auto in_class_C(const Structure & g) -> bool
    {
        if (! g.is_graph())
            throw std::invalid_argument("class membership is defined for graphs");
        for (auto & comp : components(g)) {
            if (comp.size() == 1)
                continue;
            auto c = induced_substructure(g, comp).structure;
            bool fits = false;
            for (int x = 0 ; x < c.size() && ! fits ; ++x) {
                auto rest = remove_elements(c, std::vector<int>{ x }).structure;
                fits = is_linear_forest(rest) || is_odd_cycle_of_length_at_least_5(rest);
            }
            if (! fits)
                return false;
        }
        return true;
    }

    auto bouquet_oracle(const Structure & g) -> bool
    {
        if (! g.is_graph())
            throw std::invalid_argument("bouquet oracle is defined for graphs");
        for (auto & comp : components(g)) {
            if (comp.size() < 2)
                continue;
            int size = static_cast<int>(comp.size());
            for (int x : comp) {
                if (g.degree(x) != size - 1)
                    continue;
                bool regular = true;
                for (int v : comp)
                    if (v != x && g.degree(v) != 3)
                        regular = false;
                if (regular)
                    return true;
            }
        }
        return false;
    }
}
