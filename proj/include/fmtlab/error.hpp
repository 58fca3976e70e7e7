#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmtlab
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Raised when a search exceeds its node budget. Never swallowed silently.
    class BudgetExceeded : public Error
    {
        public:
            using Error::Error;
    };

    class VocabularyMismatch : public Error
    {
        public:
            using Error::Error;
    };

    /// A graph-mode quotient tried to identify two adjacent vertices.
    class LoopCreated : public Error
    {
        public:
            using Error::Error;
    };

    class NotAHomomorphism : public Error
    {
        public:
            using Error::Error;
    };

    class UnboundVariable : public Error
    {
        public:
            using Error::Error;
    };

    class PreconditionFailed : public Error
    {
        public:
            using Error::Error;
    };

    class ParseError : public Error
    {
        public:
            ParseError(const std::string & message, std::size_t position) :
                Error(message + " at offset " + std::to_string(position)),
                _position(position)
            {
            }

            auto position() const -> std::size_t
            {
                return _position;
            }

        private:
            std::size_t _position;
    };
}
