#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>

namespace eslees {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid construction parameters (mode counts, radii, config values).
class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Mesh input could not be parsed as OFF.
class FormatError : public Error {
public:
    using Error::Error;
};

// Mesh has a boundary edge (an edge used by exactly one triangle).
class NotClosedError : public Error {
public:
    using Error::Error;
};

// Mesh has an edge shared by more than two triangles.
class NonManifoldError : public Error {
public:
    using Error::Error;
};

// Triangle with (near-)zero area.
class DegenerateElementError : public Error {
public:
    using Error::Error;
};

// A field is defined on a different point set than the discretization.
class DomainMismatchError : public Error {
public:
    using Error::Error;
};

// Inverse metric (or mass matrix) is not positive definite.
class MetricError : public Error {
public:
    using Error::Error;
};

// Vector/matrix sizes do not match.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Zero vector (or otherwise degenerate input) where a nonzero one is required.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// A numerical routine failed outright.
class NumericalFailureError : public Error {
public:
    using Error::Error;
};

// Iterative solve ran out of iterations; carries the best iterate found.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& msg, double best_value,
                        Eigen::VectorXd best_vector, double residual, int iterations)
        : Error(msg),
          best_value(best_value),
          best_vector(std::move(best_vector)),
          residual(residual),
          iterations(iterations) {}

    double best_value;
    Eigen::VectorXd best_vector;
    double residual;
    int iterations;
};

// The pointwise eigenvalue-ratio hypothesis failed where it was required.
class HypothesisError : public Error {
public:
    using Error::Error;
};

}  // namespace eslees
