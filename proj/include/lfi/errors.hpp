#pragma once

#include <stdexcept>
#include <string>

namespace lfi {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (poles, violated parameter constraints).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Result not representable in double precision.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A series or product did not converge within its configured budget.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Mathematically valid input that this implementation deliberately does not handle.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A constructed object would violate its invariants (negative weight, unsorted nodes, ...).
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Function evaluation failed (log of a negative number, division by zero, ...).
class EvalError : public Error {
public:
    using Error::Error;
};

} // namespace lfi
