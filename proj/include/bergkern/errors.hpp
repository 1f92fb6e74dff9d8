#ifndef BERGKERN_ERRORS_HPP
#define BERGKERN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bergkern {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input lies outside the region an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The argument is too close to a lattice pole for a meaningful value.
class PoleProximity : public DomainError {
public:
    using DomainError::DomainError;
};

/// A multi-index or point has the wrong number of components.
class DimensionMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

/// A finite-difference stencil would leave the valid parameter region.
class StencilOutOfDomain : public DomainError {
public:
    using DomainError::DomainError;
};

/// A truncation loop hit its term cap before reaching the requested accuracy.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (e.g. a value that must be real
/// came out with a large imaginary part).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace bergkern

#endif
