#pragma once

#include <optional>
#include <vector>

#include "biharm/field.hpp"
#include "biharm/operator.hpp"

namespace biharm {

/// LU factors of the clamped operator minus an optional diagonal weight on
/// the collocation rows (realizing Delta^2 - w). Rows are equilibrated before
/// elimination; no pivoting crosses the band. Factorizations are immutable
/// after creation, so concurrent solves against one object are fine.
class BandedFactorization {
public:
    int size() const { return n_; }
    double min_pivot() const { return min_pivot_; }
    double max_pivot() const { return max_pivot_; }

    /// Solve the shifted clamped system for the given right-hand side.
    /// One step of compensated iterative refinement is applied.
    RadialField solve(const RadialField& rhs) const;

    friend BandedFactorization factor(const DiscreteBiharmonic& op,
                                      const RadialField* diagonal_weight);

private:
    RadialField solve_basic(const RadialField& rhs) const;
    RadialField residual(const RadialField& x, const RadialField& rhs) const;

    int n_ = 0;
    std::vector<double> lu_;      // factored band, row-equilibrated
    std::vector<double> orig_;    // shifted band before equilibration (for refinement)
    std::vector<double> scale_;   // row scales
    double min_pivot_ = 0.0;
    double max_pivot_ = 0.0;
};

/// Factor A - diag(weight) where the weight acts on collocation rows only
/// (constraint rows are never shifted). Passing nullptr factors A itself.
/// Throws SingularOperatorError when a pivot falls below 1e-14 of the largest.
BandedFactorization factor(const DiscreteBiharmonic& op,
                           const RadialField* diagonal_weight = nullptr);

inline RadialField solve_linear(const BandedFactorization& fact, const RadialField& rhs) {
    return fact.solve(rhs);
}

}  // namespace biharm
