#pragma once

#include <stdexcept>
#include <string>

namespace appell {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

/// The least coefficient of a series is zero or not invertible.
class NonUnitLeadingCoefficient : public Error {
public:
    using Error::Error;
};

/// A coefficient was requested at or beyond the truncation order.
class OrderExceeded : public Error {
public:
    using Error::Error;
};

class UnsupportedWeight : public Error {
public:
    using Error::Error;
};

/// A q-expansion does not lie in the span it was matched against.
class Inconsistent : public Error {
public:
    using Error::Error;
};

/// Not enough verified coefficients are available for the request.
class InsufficientOrder : public Error {
public:
    using Error::Error;
};

/// det T_l disagrees with detB * eta^((l-1)(l-2)/2); always an implementation bug.
class DeterminantMismatch : public Error {
public:
    using Error::Error;
};

/// Two objects carrying different level tags were combined.
class LevelMismatch : public Error {
public:
    using Error::Error;
};

} // namespace appell
