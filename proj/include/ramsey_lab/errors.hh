#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey_lab
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    // Bad parameter values (out-of-range lengths, even wheels where odd ones are needed, ...).
    class ArgumentError : public Error
    {
        public:
            using Error::Error;
    };

    // Input too large for the chosen representation or an exponential-time guard.
    class CapacityError : public Error
    {
        public:
            using Error::Error;
    };

    // A lemma or bound was invoked on an input that does not meet its hypotheses.
    class HypothesisError : public Error
    {
        public:
            using Error::Error;
    };

    // Structurally degenerate input, e.g. connectivity of a graph with fewer than two vertices.
    class DegenerateInputError : public Error
    {
        public:
            using Error::Error;
    };

    class ParseError : public Error
    {
        public:
            ParseError(const std::string & what, std::size_t offset) :
                Error(what + " (at byte " + std::to_string(offset) + ")"),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t
            {
                return _offset;
            }

        private:
            std::size_t _offset;
    };
}
