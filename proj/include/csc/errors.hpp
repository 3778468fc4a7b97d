#pragma once

#include <stdexcept>
#include <string>

namespace csc {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// Contact surgery coefficient outside the supported set
/// {-1, +1, 1/2, p/(p+1), r <= -1}.
class UnsupportedCoefficient : public DomainError {
public:
    explicit UnsupportedCoefficient(const std::string& msg) : DomainError(msg) {}
};

/// c1 does not lie in the column space of the intersection form; d3 and
/// c1^2 are undefined.
class NonTorsion : public DomainError {
public:
    explicit NonTorsion(const std::string& msg) : DomainError(msg) {}
};

/// A Kirby move was requested on a form that does not satisfy the move's
/// precondition (e.g. blowdown on an uncleared row).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& msg) : std::logic_error(msg) {}
};

/// Malformed diagram or script input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace csc
