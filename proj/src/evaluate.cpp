#include <fmtlab/evaluate.hpp>
#include <fmtlab/error.hpp>
#include <fmtlab/operations.hpp>

#include <cstdint>
#include <set>

using std::size_t;
using std::string;
using std::vector;

namespace fmtlab
{
    namespace
    {
        struct Op
        {
            FormulaKind kind;
            int variable = -1;
            vector<int> arguments;
            size_t symbol = 0;
            int radius = 0;
            vector<int> children;
            vector<int> free_slots;
        };

        constexpr size_t memo_limit = 1u << 16;
    }

    struct Evaluator::Program
    {
        Vocabulary vocabulary;
        vector<Op> ops;
        vector<string> slot_names;
        std::map<string, int> slot_of;
        vector<int> free_slots;
        int root = 0;

        auto slot(const string & name) -> int
        {
            auto [it, fresh] = slot_of.emplace(name, static_cast<int>(slot_names.size()));
            if (fresh)
                slot_names.push_back(name);
            return it->second;
        }

        auto compile(const Formula & f) -> int
        {
            Op op;
            op.kind = f.kind();
            op.radius = f.radius();
            if (f.is_quantifier())
                op.variable = slot(f.variable());
            for (auto & v : f.arguments())
                op.arguments.push_back(slot(v));
            if (f.kind() == FormulaKind::atom)
                op.symbol = *vocabulary.index_of(f.symbol());
            for (auto & c : f.children())
                op.children.push_back(compile(c));
            if (f.is_quantifier())
                for (auto & v : free_variables(f))
                    op.free_slots.push_back(slot(v));
            ops.push_back(std::move(op));
            return static_cast<int>(ops.size()) - 1;
        }
    };

    namespace
    {
        class Run
        {
            public:
                Run(const vector<Op> & ops, const Structure & a, vector<int> env) :
                    _ops(ops),
                    _a(a),
                    _n(a.size()),
                    _env(std::move(env)),
                    _distances(a.size()),
                    _memo(ops.size()),
                    _scratch(ops.size())
                {
                }

                auto eval(int index) -> bool
                {
                    const Op & op = _ops[index];
                    switch (op.kind) {
                        case FormulaKind::truth: return true;
                        case FormulaKind::falsity: return false;
                        case FormulaKind::negation: return ! eval(op.children[0]);
                        case FormulaKind::conjunction:
                            for (int c : op.children)
                                if (! eval(c))
                                    return false;
                            return true;
                        case FormulaKind::disjunction:
                            for (int c : op.children)
                                if (eval(c))
                                    return true;
                            return false;
                        case FormulaKind::equal:
                            return _env[op.arguments[0]] == _env[op.arguments[1]];
                        case FormulaKind::atom: {
                            auto & t = _scratch[index];
                            t.resize(op.arguments.size());
                            for (size_t i = 0 ; i < t.size() ; ++i)
                                t[i] = _env[op.arguments[i]];
                            return _a.holds(op.symbol, t);
                        }
                        case FormulaKind::dist_le: {
                            int x = _env[op.arguments[0]], y = _env[op.arguments[1]];
                            if (x == y)
                                return true;
                            auto & row = _distances[x];
                            if (row.empty())
                                row = distances_from(_a, x);
                            return row[y] != -1 && row[y] <= op.radius;
                        }
                        case FormulaKind::exists:
                        case FormulaKind::forall:
                            return quantifier(index, op);
                    }
                    return false;
                }

            private:
                const vector<Op> & _ops;
                const Structure & _a;
                int _n;
                vector<int> _env;
                vector<vector<int>> _distances;
                vector<vector<std::int8_t>> _memo;
                vector<vector<int>> _scratch;

                auto quantifier(int index, const Op & op) -> bool
                {
                    size_t key = 0, cells = 1;
                    bool memoise = op.free_slots.size() <= 3;
                    if (memoise) {
                        for (int s : op.free_slots) {
                            key = key * _n + _env[s];
                            cells *= _n;
                        }
                        memoise = cells <= memo_limit;
                    }
                    if (memoise) {
                        auto & table = _memo[index];
                        if (table.empty())
                            table.assign(cells, -1);
                        if (table[key] != -1)
                            return table[key];
                    }

                    bool want = op.kind == FormulaKind::exists;
                    bool result = ! want;
                    int saved = _env[op.variable];
                    for (int a = 0 ; a < _n ; ++a) {
                        _env[op.variable] = a;
                        if (eval(op.children[0]) == want) {
                            result = want;
                            break;
                        }
                    }
                    _env[op.variable] = saved;

                    if (memoise)
                        _memo[index][key] = result;
                    return result;
                }
        };
    }

    Evaluator::Evaluator(const Formula & f, const Vocabulary & vocabulary) :
        _program(std::make_unique<Program>())
    {
        check_vocabulary(f, vocabulary);
        _program->vocabulary = vocabulary;
        _program->root = _program->compile(f);
        for (auto & v : free_variables(f))
            _program->free_slots.push_back(_program->slot(v));
    }

    Evaluator::~Evaluator() = default;
    Evaluator::Evaluator(Evaluator &&) noexcept = default;
    auto Evaluator::operator= (Evaluator &&) noexcept -> Evaluator & = default;

    auto Evaluator::operator() (const Structure & a, const Valuation & valuation) const -> bool
    {
        if (! (a.vocabulary() == _program->vocabulary))
            throw VocabularyMismatch("structure vocabulary differs from the compiled formula's");
        vector<int> env(_program->slot_names.size(), 0);
        for (int s : _program->free_slots) {
            auto it = valuation.find(_program->slot_names[s]);
            if (it == valuation.end())
                throw UnboundVariable("free variable " + _program->slot_names[s] + " has no value");
            if (it->second < 0 || it->second >= a.size())
                throw std::out_of_range("variable " + it->first + " assigned an element outside the domain");
            env[s] = it->second;
        }
        Run run{ _program->ops, a, std::move(env) };
        return run.eval(_program->root);
    }

    auto evaluate(const Formula & f, const Structure & a, const Valuation & valuation) -> bool
    {
        Evaluator e{ f, a.vocabulary() };
        return e(a, valuation);
    }
}
