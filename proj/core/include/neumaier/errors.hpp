#pragma once

#include <stdexcept>
#include <string>

namespace neumaier {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An argument is out of range or otherwise malformed.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A supplied combinatorial object violates its structural contract
/// (a non-clique passed as a clique, an invalid spread, a coset that is
/// not a perfect code, ...).
class StructureError : public Error {
public:
    using Error::Error;
};

/// Construction inputs fail a validity condition; the message names the
/// violated condition.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A graph could not be certified; the message carries the first
/// violated certificate condition.
class CertificationError : public Error {
public:
    using Error::Error;
};

/// The requested search is infeasible on arithmetic grounds
/// (e.g. no perfect 1-code of the requested size can exist).
class InfeasibilityError : public Error {
public:
    using Error::Error;
};

/// A lattice quotient collapsed connection vectors.
class QuotientError : public Error {
public:
    using Error::Error;
};

/// A generator's built-in structural assertion failed.
class GeneratorError : public Error {
public:
    using Error::Error;
};

/// A mathematically guaranteed postcondition failed; this always
/// signals an implementation bug, never bad input.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace neumaier
