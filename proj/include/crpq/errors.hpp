#ifndef CRPQ_ERRORS_HPP
#define CRPQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crpq {

// Input text could not be parsed (regex, graph, query, decomposition files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Query is outside the supported fragment (cyclic, not free-connex where required, ...).
struct UnsupportedQueryError : std::runtime_error {
    explicit UnsupportedQueryError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was exceeded (oracle size, variable cap).
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violation on an API call (bad filter set, symbol collision, ...).
struct InvalidArgumentError : std::invalid_argument {
    explicit InvalidArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace crpq

#endif
