#pragma once

#include <stdexcept>
#include <string>

namespace adreal {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// Exactness refusals: the answer would leave the rational scalar tower.
class ExactnessRefusal : public Error {
public:
    using Error::Error;
};

/// Characteristic polynomial does not split over Q(i) with the roots we can find.
class NonSplittingSpectrum : public ExactnessRefusal {
public:
    using ExactnessRefusal::ExactnessRefusal;
};

class RootNotRepresentable : public ExactnessRefusal {
public:
    using ExactnessRefusal::ExactnessRefusal;
};

/// A user-supplied eigenvalue hint is not a root of the characteristic polynomial.
class DefectiveHint : public Error {
public:
    using Error::Error;
};

/// Real eigenvalue chains of Phi(X) did not come in pairs. Internal error.
class DoublingViolation : public Error {
public:
    using Error::Error;
};

class NonZeroTrace : public Error {
public:
    using Error::Error;
};

/// A witness was requested for an element that does not admit one.
class NoWitness : public Error {
public:
    NoWitness(const std::string& what, std::string reason)
        : Error(what), reason_(std::move(reason)) {}
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

} // namespace adreal
