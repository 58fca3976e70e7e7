#pragma once

#include <fmtlab/formula.hpp>
#include <fmtlab/structure.hpp>

#include <map>
#include <memory>
#include <string>

namespace fmtlab
{
    /// Assignment of elements to (at least) the free variables of a formula.
    using Valuation = std::map<std::string, int>;

    /// Standard semantics; dist<= is measured in the Gaifman graph.
    /// Throws UnboundVariable if a free variable is missing from the valuation,
    /// and VocabularyMismatch if an atom does not fit the structure.
    auto evaluate(const Formula & f, const Structure & a, const Valuation & valuation = {}) -> bool;

    /// A formula compiled once for a vocabulary, for repeated evaluation.
    class Evaluator
    {
        public:
            Evaluator(const Formula & f, const Vocabulary & vocabulary);
            ~Evaluator();
            Evaluator(Evaluator &&) noexcept;
            auto operator= (Evaluator &&) noexcept -> Evaluator &;

            auto operator() (const Structure & a, const Valuation & valuation = {}) const -> bool;

        private:
            struct Program;
            std::unique_ptr<Program> _program;
    };
}
