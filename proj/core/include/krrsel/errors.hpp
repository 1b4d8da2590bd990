#pragma once

#include <stdexcept>
#include <string>

namespace krrsel {

/// Numerical breakdown: factorization failure after jitter escalation,
/// degenerate root-finding instances, non-convergence.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data file (message carries the offending line number).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace krrsel
