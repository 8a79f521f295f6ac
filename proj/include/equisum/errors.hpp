#pragma once

#include <stdexcept>
#include <string>

namespace equisum {

/// Base class for all recoverable library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 64-bit arithmetic would wrap around.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// k*t does not equal the triangular number of n.
class InfeasibleSumError : public Error {
public:
    using Error::Error;
};

/// Target sum t is smaller than the largest element n.
class InfeasibleTargetError : public Error {
public:
    using Error::Error;
};

/// The meander divisibility condition does not hold for (n, k).
class NotApplicableError : public Error {
public:
    using Error::Error;
};

/// An operation that requires a valid partitioning was handed a broken one.
class InvalidPartitioningError : public Error {
public:
    using Error::Error;
};

/// Input file or document does not match the expected schema.
class MalformedInputError : public Error {
public:
    using Error::Error;
};

/// The oracle hit its search-node budget before reaching a verdict.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition was violated (e.g. oracle size cap).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A runtime consistency check inside the solver failed. This signals a bug
/// in the library itself, never a bad input; it is thrown, not swallowed,
/// and the checks stay enabled in release builds.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace equisum
