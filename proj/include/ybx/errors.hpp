#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

/// Base class for every error the library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A fraction was built with an identically zero denominator.
struct ZeroDenominatorError : Error {
    using Error::Error;
};

/// Exact polynomial division was requested but the divisor does not divide.
/// At operator level this means the operator fails to map a polynomial to a
/// polynomial, i.e. it leaves the intended subspace.
struct NotDivisibleError : Error {
    using Error::Error;
};

/// A specialization was requested at a point where the reduced denominator
/// still vanishes: the singularity is not removable.
struct PolePersistsError : Error {
    using Error::Error;
};

/// An operator image escaped V_n (x) V_n: some exponent reached n or above.
struct NotClosedError : Error {
    using Error::Error;
};

/// A matrix expected to be polynomial in h has h in a reduced denominator.
struct HNotPolynomialError : Error {
    using Error::Error;
};

/// Operands built over different variable contexts were mixed.
struct ContextMismatchError : Error {
    using Error::Error;
};

/// Matrix shapes or leg counts do not agree.
struct DimensionError : Error {
    using Error::Error;
};

/// Text in the shared polynomial grammar could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

} // namespace ybx
