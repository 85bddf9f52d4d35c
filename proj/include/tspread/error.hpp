#pragma once

#include <stdexcept>
#include <string>

namespace tspread {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A monomial whose indices are not strictly increasing or fall outside [1, n].
class InvalidMonomial : public Error {
public:
    using Error::Error;
};

/// Comparison of monomials of different degrees.
class DegreeMismatch : public Error {
public:
    using Error::Error;
};

/// A monomial that was required to be t-spread is not.
class NotTSpread : public Error {
public:
    using Error::Error;
};

/// The ideal is not t-spread strongly stable, so the Betti formula does not apply.
class NotStronglyStable : public Error {
public:
    using Error::Error;
};

/// The hypotheses of a closed form or construction are not met.
class Inapplicable : public Error {
public:
    using Error::Error;
};

/// A self-check failed. Seeing this means there is a bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// A search ran past its budget before finishing.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed input (text, JSON, ranges).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace tspread
