#include <fmtlab/transform.hpp>
#include <fmtlab/error.hpp>

#include <algorithm>

using std::set;
using std::size_t;
using std::string;
using std::vector;

namespace fmtlab
{
    namespace
    {
        auto rebuild(const Formula & f, vector<Formula> children) -> Formula
        {
            return make_formula(f.kind(), f.is_quantifier() ? f.variable() : f.kind() == FormulaKind::atom ? f.symbol() : string{},
                    f.arguments(), f.radius(), std::move(children));
        }

        class Expander
        {
            public:
                Expander(const Vocabulary & vocabulary, set<string> used) :
                    _vocabulary(vocabulary),
                    _used(std::move(used))
                {
                }

                auto expand(const Formula & f) -> Formula
                {
                    if (f.kind() == FormulaKind::dist_le)
                        return distance(f.radius(), f.arguments()[0], f.arguments()[1]);
                    if (f.children().empty())
                        return f;
                    vector<Formula> children;
                    for (auto & c : f.children())
                        children.push_back(expand(c));
                    return rebuild(f, std::move(children));
                }

            private:
                const Vocabulary & _vocabulary;
                set<string> _used;

                auto adjacent(const string & u, const string & v) -> Formula
                {
                    if (_vocabulary.is_graph())
                        return fo::edge(u, v);
                    vector<Formula> options;
                    for (auto & s : _vocabulary.symbols()) {
                        for (int i = 0 ; i < s.arity ; ++i)
                            for (int j = 0 ; j < s.arity ; ++j) {
                                if (i == j)
                                    continue;
                                vector<string> args(s.arity), others;
                                for (int p = 0 ; p < s.arity ; ++p) {
                                    if (p == i)
                                        args[p] = u;
                                    else if (p == j)
                                        args[p] = v;
                                    else {
                                        args[p] = fresh_variable(_used, "w");
                                        others.push_back(args[p]);
                                    }
                                }
                                options.push_back(fo::exists(others, fo::atom(s.name, std::move(args))));
                            }
                    }
                    return fo::disj(std::move(options));
                }

                auto adjacent_or_equal(const string & u, const string & v) -> Formula
                {
                    return fo::disj({ fo::eq(u, v), adjacent(u, v) });
                }

                auto distance(int r, const string & x, const string & y) -> Formula
                {
                    if (r == 0)
                        return fo::eq(x, y);
                    if (r == 1)
                        return adjacent_or_equal(x, y);
                    vector<string> mids;
                    for (int i = 1 ; i < r ; ++i)
                        mids.push_back(fresh_variable(_used, "m"));
                    vector<Formula> links;
                    links.push_back(adjacent_or_equal(x, mids.front()));
                    for (size_t i = 0 ; i + 1 < mids.size() ; ++i)
                        links.push_back(adjacent_or_equal(mids[i], mids[i + 1]));
                    links.push_back(adjacent_or_equal(mids.back(), y));
                    return fo::exists(mids, fo::conj(std::move(links)));
                }
        };

        auto substitute(const Formula & f, const string & from, const string & to, set<string> & used) -> Formula
        {
            if (f.is_quantifier()) {
                if (f.variable() == from)
                    return f;
                if (f.variable() == to && free_variables(f.body()).contains(from)) {
                    auto renamed = fresh_variable(used, to);
                    auto body = substitute(f.body(), to, renamed, used);
                    return make_formula(f.kind(), renamed, {}, 0, { substitute(body, from, to, used) });
                }
                return make_formula(f.kind(), f.variable(), {}, 0, { substitute(f.body(), from, to, used) });
            }
            if (! f.arguments().empty()) {
                auto args = f.arguments();
                std::replace(args.begin(), args.end(), from, to);
                return make_formula(f.kind(), f.kind() == FormulaKind::atom ? f.symbol() : string{}, std::move(args), f.radius(), {});
            }
            if (f.children().empty())
                return f;
            vector<Formula> children;
            for (auto & c : f.children())
                children.push_back(substitute(c, from, to, used));
            return rebuild(f, std::move(children));
        }

        auto relativize_with(const Formula & f, const string & centre, int radius, set<string> & used) -> Formula
        {
            if (f.is_quantifier()) {
                string v = f.variable();
                Formula body = f.body();
                if (v == centre) {
                    auto renamed = fresh_variable(used, v);
                    body = substitute(body, v, renamed, used);
                    v = renamed;
                }
                body = relativize_with(body, centre, radius, used);
                auto guard = fo::dist_le(radius, centre, v);
                if (f.kind() == FormulaKind::exists)
                    return fo::exists(v, fo::conj({ guard, body }));
                return fo::forall(v, fo::implies(guard, body));
            }
            if (f.children().empty())
                return f;
            vector<Formula> children;
            for (auto & c : f.children())
                children.push_back(relativize_with(c, centre, radius, used));
            return rebuild(f, std::move(children));
        }

        auto interpret(const Formula & f, int k) -> Formula
        {
            if (f.kind() == FormulaKind::atom) {
                auto & x = f.arguments()[0];
                auto & y = f.arguments()[1];
                vector<Formula> parts{ f };
                for (int i = 1 ; i <= k ; ++i)
                    parts.push_back(fo::conj({ fo::atom("P" + std::to_string(i), { x }), fo::atom("Q" + std::to_string(i), { y }) }));
                for (int i = 1 ; i <= k ; ++i)
                    parts.push_back(fo::conj({ fo::atom("P" + std::to_string(i), { y }), fo::atom("Q" + std::to_string(i), { x }) }));
                return fo::disj(std::move(parts));
            }
            if (f.children().empty())
                return f;
            vector<Formula> children;
            for (auto & c : f.children())
                children.push_back(interpret(c, k));
            return rebuild(f, std::move(children));
        }
    }

    auto to_pure_fo(const Formula & f, const Vocabulary & vocabulary) -> Formula
    {
        Expander expander{ vocabulary, all_variables(f) };
        return expander.expand(f);
    }

    auto rename_free(const Formula & f, const string & from, const string & to) -> Formula
    {
        if (from == to)
            return f;
        auto used = all_variables(f);
        used.insert(to);
        return substitute(f, from, to, used);
    }

    auto relativize(const Formula & f, const string & centre, int radius) -> Formula
    {
        if (radius < 0)
            throw std::invalid_argument("negative relativization radius");
        auto used = all_variables(f);
        used.insert(centre);
        return relativize_with(f, centre, radius, used);
    }

    auto basic_local(int radius, int width, const Formula & condition) -> Formula
    {
        if (radius < 0 || width < 1)
            throw std::invalid_argument("basic local sentence needs radius >= 0 and width >= 1");
        auto free = free_variables(condition);
        if (free.size() > 1)
            throw std::invalid_argument("local condition has more than one free variable");
        string x = free.empty() ? string("x") : *free.begin();

        auto used = all_variables(condition);
        used.insert(x);
        vector<string> xs;
        for (int i = 0 ; i < width ; ++i)
            xs.push_back(fresh_variable(used, "x"));

        vector<Formula> parts;
        for (int i = 0 ; i < width ; ++i)
            for (int j = i + 1 ; j < width ; ++j)
                parts.push_back(fo::negation(fo::dist_le(2 * radius, xs[i], xs[j])));
        for (auto & xi : xs)
            parts.push_back(relativize(rename_free(condition, x, xi), xi, radius));
        return fo::exists(xs, fo::conj(std::move(parts)));
    }

    auto canonical_query(const Structure & a) -> Formula
    {
        if (a.size() == 0)
            throw std::invalid_argument("canonical query of the empty structure");
        vector<string> vars;
        for (int v = 0 ; v < a.size() ; ++v)
            vars.push_back("x" + std::to_string(v));
        vector<Formula> atoms;
        for (size_t r = 0 ; r < a.vocabulary().size() ; ++r)
            for (auto & t : a.tuples(r)) {
                vector<string> args;
                for (int x : t)
                    args.push_back(vars[x]);
                atoms.push_back(fo::atom(a.vocabulary()[r].name, std::move(args)));
            }
        return fo::exists(vars, fo::conj(std::move(atoms)));
    }

    auto pbar_vocabulary(int k) -> Vocabulary
    {
        vector<Symbol> symbols{ Symbol{ "E", 2 } };
        for (int i = 1 ; i <= k ; ++i)
            symbols.push_back(Symbol{ "P" + std::to_string(i), 1 });
        for (int i = 1 ; i <= k ; ++i)
            symbols.push_back(Symbol{ "Q" + std::to_string(i), 1 });
        return Vocabulary{ std::move(symbols) };
    }

    auto pbar_structure(const Structure & g, std::span<const int> p) -> Structure
    {
        if (! g.is_graph())
            throw std::invalid_argument("pbar_structure needs a graph");
        vector<char> marked(g.size(), 0);
        for (int x : p) {
            if (x < 0 || x >= g.size())
                throw std::out_of_range("distinguished element outside the domain");
            if (marked[x])
                throw std::invalid_argument("distinguished elements must be distinct");
            marked[x] = 1;
        }
        if (p.empty())
            return g;

        int k = static_cast<int>(p.size());
        StructureBuilder builder{ pbar_vocabulary(k), g.size() };
        for (auto & t : g.tuples(0))
            if (! marked[t[0]] && ! marked[t[1]])
                builder.add(0, t);
        for (int i = 0 ; i < k ; ++i) {
            builder.add(1 + i, { p[i] });
            for (int w : g.neighbours(p[i]))
                builder.add(1 + k + i, { w });
        }
        if (g.has_labels())
            for (int v = 0 ; v < g.size() ; ++v)
                builder.set_label(v, g.label(v));
        return builder.build();
    }

    auto interpret_k(const Formula & f, int k) -> Formula
    {
        if (k < 0)
            throw std::invalid_argument("negative k");
        check_vocabulary(f, Vocabulary::graph());
        return interpret(to_pure_fo(f, Vocabulary::graph()), k);
    }
}
