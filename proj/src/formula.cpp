#include <fmtlab/formula.hpp>
#include <fmtlab/error.hpp>

#include <algorithm>

using std::string;
using std::vector;

namespace fmtlab
{
    struct Formula::Node
    {
        FormulaKind kind;
        string name;
        vector<string> arguments;
        int radius = 0;
        vector<Formula> children;
    };

    Formula::Formula() :
        Formula(truth_node())
    {
    }

    Formula::Formula(std::shared_ptr<const Node> node) :
        _node(std::move(node))
    {
    }

    auto Formula::truth_node() -> std::shared_ptr<const Node>
    {
        static const auto node = std::make_shared<const Node>(Node{ FormulaKind::truth, {}, {}, 0, {} });
        return node;
    }

    auto Formula::kind() const -> FormulaKind
    {
        return _node->kind;
    }

    auto Formula::variable() const -> const string &
    {
        if (! is_quantifier())
            throw std::logic_error("variable() on a formula that is not a quantifier");
        return _node->name;
    }

    auto Formula::symbol() const -> const string &
    {
        if (_node->kind != FormulaKind::atom)
            throw std::logic_error("symbol() on a formula that is not an atom");
        return _node->name;
    }

    auto Formula::arguments() const -> const vector<string> &
    {
        return _node->arguments;
    }

    auto Formula::radius() const -> int
    {
        return _node->radius;
    }

    auto Formula::children() const -> const vector<Formula> &
    {
        return _node->children;
    }

    auto Formula::body() const -> const Formula &
    {
        return _node->children.at(0);
    }

    auto Formula::is_quantifier() const -> bool
    {
        return _node->kind == FormulaKind::exists || _node->kind == FormulaKind::forall;
    }

    auto operator== (const Formula & a, const Formula & b) -> bool
    {
        if (a._node == b._node)
            return true;
        return a._node->kind == b._node->kind && a._node->name == b._node->name
            && a._node->arguments == b._node->arguments && a._node->radius == b._node->radius
            && a._node->children == b._node->children;
    }

    auto make_formula(FormulaKind kind, string name, vector<string> arguments, int radius,
            vector<Formula> children) -> Formula
    {
        return Formula{ std::make_shared<const Formula::Node>(Formula::Node{
                kind, std::move(name), std::move(arguments), radius, std::move(children) }) };
    }

    namespace fo
    {
        auto exists(string variable, Formula body) -> Formula
        {
            return make_formula(FormulaKind::exists, std::move(variable), {}, 0, { std::move(body) });
        }

        auto exists(const vector<string> & variables, Formula body) -> Formula
        {
            for (auto v = variables.rbegin() ; v != variables.rend() ; ++v)
                body = exists(*v, std::move(body));
            return body;
        }

        auto exists(std::initializer_list<string> variables, Formula body) -> Formula
        {
            return exists(vector<string>(variables), std::move(body));
        }

        auto forall(string variable, Formula body) -> Formula
        {
            return make_formula(FormulaKind::forall, std::move(variable), {}, 0, { std::move(body) });
        }

        auto forall(const vector<string> & variables, Formula body) -> Formula
        {
            for (auto v = variables.rbegin() ; v != variables.rend() ; ++v)
                body = forall(*v, std::move(body));
            return body;
        }

        auto forall(std::initializer_list<string> variables, Formula body) -> Formula
        {
            return forall(vector<string>(variables), std::move(body));
        }

        auto conj(vector<Formula> parts) -> Formula
        {
            if (parts.empty())
                return truth();
            if (parts.size() == 1)
                return parts[0];
            return make_formula(FormulaKind::conjunction, {}, {}, 0, std::move(parts));
        }

        auto disj(vector<Formula> parts) -> Formula
        {
            if (parts.empty())
                return falsity();
            if (parts.size() == 1)
                return parts[0];
            return make_formula(FormulaKind::disjunction, {}, {}, 0, std::move(parts));
        }

        auto negation(Formula body) -> Formula
        {
            return make_formula(FormulaKind::negation, {}, {}, 0, { std::move(body) });
        }

        auto implies(Formula premise, Formula conclusion) -> Formula
        {
            return disj({ negation(std::move(premise)), std::move(conclusion) });
        }

        auto atom(string symbol, vector<string> arguments) -> Formula
        {
            if (arguments.empty())
                throw std::invalid_argument("atom without arguments");
            return make_formula(FormulaKind::atom, std::move(symbol), std::move(arguments), 0, {});
        }

        auto edge(string x, string y) -> Formula
        {
            return atom("E", { std::move(x), std::move(y) });
        }

        auto eq(string x, string y) -> Formula
        {
            return make_formula(FormulaKind::equal, {}, { std::move(x), std::move(y) }, 0, {});
        }

        auto neq(string x, string y) -> Formula
        {
            return negation(eq(std::move(x), std::move(y)));
        }

        auto dist_le(int radius, string x, string y) -> Formula
        {
            if (radius < 0)
                throw std::invalid_argument("negative distance bound");
            return make_formula(FormulaKind::dist_le, {}, { std::move(x), std::move(y) }, radius, {});
        }

        auto truth() -> Formula
        {
            return Formula{};
        }

        auto falsity() -> Formula
        {
            return make_formula(FormulaKind::falsity, {}, {}, 0, {});
        }
    }

    namespace
    {
        auto print(const Formula & f, string & out) -> void
        {
            switch (f.kind()) {
                case FormulaKind::exists:
                case FormulaKind::forall:
                    out += f.kind() == FormulaKind::exists ? "(exists " : "(forall ";
                    out += f.variable();
                    out += ' ';
                    print(f.body(), out);
                    out += ')';
                    break;
                case FormulaKind::conjunction:
                case FormulaKind::disjunction:
                    out += f.kind() == FormulaKind::conjunction ? "(and" : "(or";
                    for (auto & c : f.children()) {
                        out += ' ';
                        print(c, out);
                    }
                    out += ')';
                    break;
                case FormulaKind::negation:
                    out += "(not ";
                    print(f.body(), out);
                    out += ')';
                    break;
                case FormulaKind::atom:
                    out += "(rel ";
                    out += f.symbol();
                    for (auto & v : f.arguments()) {
                        out += ' ';
                        out += v;
                    }
                    out += ')';
                    break;
                case FormulaKind::equal:
                    out += "(= " + f.arguments()[0] + " " + f.arguments()[1] + ")";
                    break;
                case FormulaKind::dist_le:
                    out += "(dist<= " + std::to_string(f.radius()) + " " + f.arguments()[0] + " " + f.arguments()[1] + ")";
                    break;
                case FormulaKind::truth:
                    out += "true";
                    break;
                case FormulaKind::falsity:
                    out += "false";
                    break;
            }
        }

        auto collect_free(const Formula & f, std::multiset<string> & bound, std::set<string> & result) -> void
        {
            switch (f.kind()) {
                case FormulaKind::exists:
                case FormulaKind::forall: {
                    auto it = bound.insert(f.variable());
                    collect_free(f.body(), bound, result);
                    bound.erase(it);
                    break;
                }
                case FormulaKind::atom:
                case FormulaKind::equal:
                case FormulaKind::dist_le:
                    for (auto & v : f.arguments())
                        if (! bound.contains(v))
                            result.insert(v);
                    break;
                default:
                    for (auto & c : f.children())
                        collect_free(c, bound, result);
            }
        }

        auto collect_all(const Formula & f, std::set<string> & result) -> void
        {
            if (f.is_quantifier())
                result.insert(f.variable());
            for (auto & v : f.arguments())
                result.insert(v);
            for (auto & c : f.children())
                collect_all(c, result);
        }
    }

    auto to_string(const Formula & f) -> string
    {
        string out;
        print(f, out);
        return out;
    }

    auto check_vocabulary(const Formula & f, const Vocabulary & vocabulary) -> void
    {
        if (f.kind() == FormulaKind::atom) {
            auto index = vocabulary.index_of(f.symbol());
            if (! index)
                throw VocabularyMismatch("unknown relation symbol " + f.symbol());
            if (static_cast<int>(f.arguments().size()) != vocabulary[*index].arity)
                throw VocabularyMismatch("relation " + f.symbol() + " used with " + std::to_string(f.arguments().size())
                        + " arguments, declared arity " + std::to_string(vocabulary[*index].arity));
        }
        for (auto & c : f.children())
            check_vocabulary(c, vocabulary);
    }

    auto free_variables(const Formula & f) -> std::set<string>
    {
        std::multiset<string> bound;
        std::set<string> result;
        collect_free(f, bound, result);
        return result;
    }

    auto all_variables(const Formula & f) -> std::set<string>
    {
        std::set<string> result;
        collect_all(f, result);
        return result;
    }

    auto quantifier_rank(const Formula & f) -> int
    {
        switch (f.kind()) {
            case FormulaKind::exists:
            case FormulaKind::forall:
                return 1 + quantifier_rank(f.body());
            case FormulaKind::dist_le:
                return std::max(0, f.radius() - 1);
            default: {
                int rank = 0;
                for (auto & c : f.children())
                    rank = std::max(rank, quantifier_rank(c));
                return rank;
            }
        }
    }

    auto is_existential_positive(const Formula & f) -> bool
    {
        switch (f.kind()) {
            case FormulaKind::forall:
            case FormulaKind::negation:
                return false;
            default:
                return std::all_of(f.children().begin(), f.children().end(), is_existential_positive);
        }
    }

    auto fresh_variable(std::set<string> & used, const string & base) -> string
    {
        if (! used.contains(base)) {
            used.insert(base);
            return base;
        }
        for (int i = 1 ; ; ++i) {
            auto name = base + std::to_string(i);
            if (! used.contains(name)) {
                used.insert(name);
                return name;
            }
        }
    }
}
