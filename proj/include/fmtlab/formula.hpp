#pragma once

#include <fmtlab/structure.hpp>

#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fmtlab
{
    enum class FormulaKind
    {
        exists,
        forall,
        conjunction,
        disjunction,
        negation,
        atom,
        equal,
        dist_le,
        truth,
        falsity
    };

    /// Immutable first-order formula. Nodes are shared, so copies are cheap.
    ///
    /// Quantifiers carry a variable and one child; atoms carry a symbol name
    /// and argument variables; equal and dist_le carry two variables.
    class Formula
    {
        public:
            /// The formula true.
            Formula();

            auto kind() const -> FormulaKind;
            /// Bound variable of a quantifier.
            auto variable() const -> const std::string &;
            /// Relation symbol of an atom.
            auto symbol() const -> const std::string &;
            /// Variables of an atom, equality or distance bound.
            auto arguments() const -> const std::vector<std::string> &;
            auto radius() const -> int;
            auto children() const -> const std::vector<Formula> &;
            auto body() const -> const Formula &;

            auto is_quantifier() const -> bool;

            friend auto operator== (const Formula &, const Formula &) -> bool;

        private:
            struct Node;
            std::shared_ptr<const Node> _node;

            explicit Formula(std::shared_ptr<const Node> node);
            static auto truth_node() -> std::shared_ptr<const Node>;

            friend auto make_formula(FormulaKind, std::string, std::vector<std::string>, int, std::vector<Formula>) -> Formula;
    };

    auto make_formula(FormulaKind kind, std::string name, std::vector<std::string> arguments, int radius,
            std::vector<Formula> children) -> Formula;

    namespace fo
    {
        auto exists(std::string variable, Formula body) -> Formula;
        auto exists(const std::vector<std::string> & variables, Formula body) -> Formula;
        auto exists(std::initializer_list<std::string> variables, Formula body) -> Formula;
        auto forall(std::string variable, Formula body) -> Formula;
        auto forall(const std::vector<std::string> & variables, Formula body) -> Formula;
        auto forall(std::initializer_list<std::string> variables, Formula body) -> Formula;
        auto conj(std::vector<Formula> parts) -> Formula;
        auto disj(std::vector<Formula> parts) -> Formula;
        auto negation(Formula body) -> Formula;
        auto implies(Formula premise, Formula conclusion) -> Formula;
        auto atom(std::string symbol, std::vector<std::string> arguments) -> Formula;
        auto edge(std::string x, std::string y) -> Formula;
        auto eq(std::string x, std::string y) -> Formula;
        auto neq(std::string x, std::string y) -> Formula;
        auto dist_le(int radius, std::string x, std::string y) -> Formula;
        auto truth() -> Formula;
        auto falsity() -> Formula;
    }

    /// S-expression rendering, accepted back by parse_formula.
    auto to_string(const Formula & f) -> std::string;

    /// Grammar:
    ///   F := (exists v F) | (forall v F) | (and F+) | (or F+) | (not F)
    ///      | (rel NAME v+) | (= v v) | (dist<= INT v v) | true | false
    /// Throws ParseError carrying the byte offset of the problem.
    auto parse_formula(std::string_view text) -> Formula;

    /// As above, and checks every atom against the vocabulary.
    auto parse_formula(std::string_view text, const Vocabulary & vocabulary) -> Formula;

    /// Throws VocabularyMismatch for unknown symbols or wrong arities.
    auto check_vocabulary(const Formula & f, const Vocabulary & vocabulary) -> void;

    auto free_variables(const Formula & f) -> std::set<std::string>;

    /// Every variable name occurring anywhere, bound or free.
    auto all_variables(const Formula & f) -> std::set<std::string>;

    /// dist<= r counts as its expansion: r - 1 quantifiers for r >= 2, none otherwise.
    auto quantifier_rank(const Formula & f) -> int;

    /// Only exists, and, or, atoms, equality, distance bounds, true and false.
    auto is_existential_positive(const Formula & f) -> bool;

    /// A name of the form base, base1, base2, ... not in used; the result is added to used.
    auto fresh_variable(std::set<std::string> & used, const std::string & base) -> std::string;
}
