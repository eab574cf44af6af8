#pragma once

#include <stdexcept>
#include <string>

namespace qbern {

/// Raised when an argument lies outside an operation's domain: a pole of q,
/// a non-prime modulus, a negative power of zero, a length mismatch.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed textual input (rational literals, grids, monomial specs).
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A request that is well-formed text but not an acceptable configuration,
/// e.g. an empty sample list or bounds past the documented maxima.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qbern
