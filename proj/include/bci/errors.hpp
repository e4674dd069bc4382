#pragma once

#include <stdexcept>
#include <string>

namespace bci {

/// Precondition failure: an operation that only makes sense on a BCI-algebra
/// was handed a magma that is not one.
struct NotBciError : std::invalid_argument {
    explicit NotBciError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAutomorphismError : std::invalid_argument {
    explicit NotAutomorphismError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotAutomorphismGroupError : std::invalid_argument {
    explicit NotAutomorphismGroupError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotBooleanGroupError : std::invalid_argument {
    explicit NotBooleanGroupError(const std::string& what) : std::invalid_argument(what) {}
};

struct OrderTooLargeError : std::invalid_argument {
    explicit OrderTooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedIndexError : std::invalid_argument {
    explicit UnsupportedIndexError(const std::string& what) : std::invalid_argument(what) {}
};

/// Table-file syntax error with 1-based source position.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}

    int line;
    int column;
};

}  // namespace bci
