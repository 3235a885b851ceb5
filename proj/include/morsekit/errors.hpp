#pragma once

#include <stdexcept>
#include <string>

namespace morsekit {

/// Malformed input text (complex, gradient or circuit files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An operation that needs a connected 2-dimensional complex got something else.
class NotTwoComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact search gave up at its size limit.
class SearchLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The given assignment does not satisfy the circuit.
class NotSatisfyingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace morsekit
