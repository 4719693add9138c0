#pragma once

#include <stdexcept>
#include <string>

namespace biharm {

/// Bad run parameters (dimension, mesh size, tolerances, certificate ranges).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Mismatched field/operator sizes.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A pivot fell below the relative threshold during banded elimination.
/// Near the fold this is the expected signature of mu1 crossing zero.
struct SingularOperatorError : std::runtime_error {
    double min_pivot;
    double max_pivot;
    SingularOperatorError(const std::string& what, double min_p, double max_p)
        : std::runtime_error(what), min_pivot(min_p), max_pivot(max_p) {}
};

/// Eigenpair iteration hit its cap before meeting the residual tolerance.
struct ConvergenceError : std::runtime_error {
    double residual;
    int iterations;
    ConvergenceError(const std::string& what, double res, int iters)
        : std::runtime_error(what), residual(res), iterations(iters) {}
};

/// The linearization weight lambda*p/(1-u)^(p+1) is undefined: u touches 1.
struct SingularWeightError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A certificate field is outside its admissible domain at included nodes.
struct CertificateDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace biharm
