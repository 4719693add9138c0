#pragma once

#include "biharm/errors.hpp"

namespace biharm {

/// Single source of run parameters for the radial problem
///     Delta^2 u = lambda / (1-u)^p   on the unit ball in R^n,
///     u = du/dn = 0                  on the boundary,
/// discretized on a uniform radial mesh with M intervals.
struct ProblemConfig {
    int n = 3;                        // spatial dimension, >= 1
    double p = 1.0;                   // nonlinearity exponent; p = 1 is the reference problem
    int mesh_intervals = 256;         // M, number of uniform intervals on [0,1], >= 16
    double r_min_certificate = 0.05;  // exclusion radius for log-singular certificate checks
    double tol_newton = 1e-11;        // relative nonlinear residual
    double tol_eig = 1e-10;           // eigenpair residual, relative to (1 + |eigenvalue|)
    double tol_fold = 1e-9;           // relative width of the fold bracket

    void validate() const {
        if (n < 1) throw ConfigError("ProblemConfig: dimension n must be >= 1");
        if (mesh_intervals < 16) throw ConfigError("ProblemConfig: mesh_intervals must be >= 16");
        if (!(r_min_certificate > 0.0 && r_min_certificate < 1.0))
            throw ConfigError("ProblemConfig: r_min_certificate must lie in (0,1)");
        if (!(p > 0.0)) throw ConfigError("ProblemConfig: exponent p must be positive");
        if (!(tol_newton > 0.0) || !(tol_eig > 0.0) || !(tol_fold > 0.0))
            throw ConfigError("ProblemConfig: tolerances must be positive");
    }
};

}  // namespace biharm
