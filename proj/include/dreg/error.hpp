#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dreg {

/// A precondition of a mathematical operation was violated.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live in polynomial rings with different numbers of variables.
class RingMismatch : public DomainError {
public:
    RingMismatch(std::size_t a, std::size_t b)
        : DomainError("ring mismatch: " + std::to_string(a) + " vs " + std::to_string(b) + " variables")
    {
    }
};

/// An enumeration or degree bound was hit before the answer was decided.
class CapExceeded : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed textual input (monomials, ideal files, areas, ...).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration and degree bounds shared by every operation that may enumerate.
struct Limits {
    std::size_t enumeration_cap = 1'000'000;
    int max_lex_degree = 64;
};

inline Limits& default_limits()
{
    static Limits limits;
    return limits;
}

} // namespace dreg
