#pragma once

#include <stdexcept>
#include <string>

namespace ganova {

// Invalid argument to a mathematical routine (out of domain, bad index).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or degenerate input data (unparseable CSV, empty groups, zero variance).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid design (too few groups, no residual degrees of freedom).
struct DesignError : std::runtime_error {
    explicit DesignError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative routine failed to converge.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ganova
