#pragma once

#include <stdexcept>
#include <string>

namespace hyperhs {

// Base of every error raised by the library. Callers that only care about
// "input was bad" vs "numerics failed" can catch the two middle layers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Matrix fails R = s R^t s (or a diagonal block is not symmetric).
class SymmetryViolation : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Source matrix A with A s not positive definite.
class NotPositive : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Finite-difference step pushes A +- h*Adot out of the positivity region.
class StepTooLarge : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class EigenSolverFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Quadrature grid cannot resolve the oscillation of the integrand.
class GridTooCoarse : public QuadratureError {
public:
    using QuadratureError::QuadratureError;
};

}  // namespace hyperhs
