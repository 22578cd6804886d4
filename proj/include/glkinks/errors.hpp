#pragma once

#include <stdexcept>
#include <string>

namespace glkinks {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad model or driving parameters. The CLI maps these to exit code 2.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Well-formed parameters that lead outside a solution's domain
// (poles, forbidden lambda, no midpoint crossing). CLI exit code 3.
class DomainError : public Error {
public:
    using Error::Error;
};

class NonPositiveCoefficient : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class ComplexDelta : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class NonPositiveRate : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class SingularPoint : public DomainError {
public:
    explicit SingularPoint(double xi)
        : DomainError("singular point at xi = " + std::to_string(xi)), xi_(xi) {}
    double xi() const noexcept { return xi_; }

private:
    double xi_;
};

class EmptyGrid : public DomainError {
public:
    using DomainError::DomainError;
};

class NoCrossing : public DomainError {
public:
    using DomainError::DomainError;
};

class DomainMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class ForbiddenLambda : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace glkinks
