#pragma once

#include <vector>

#include "biharm/field.hpp"

namespace biharm {

/// Banded form of the radial biharmonic with clamped boundary and
/// center-regularity closures, on a uniform mesh with M intervals.
///
/// Row layout (N = M+1 rows, bandwidth 5):
///   rows 0 .. M-2   collocate Delta^2 in radial form,
///                   u'''' + 2(n-1)/r u''' + (n-1)(n-3)/r^2 u'' - (n-1)(n-3)/r^3 u',
///                   with second-order centered differences. Center regularity
///                   u'(0) = u'''(0) = 0 enters rows 0 and 1 through even
///                   reflection; row 0 is the limit closure
///                   Delta^2 u(0) = n(n+2)/3 * u''''(0). Rows with r < 0.05 use
///                   smooth-quotient forms of the singular-coefficient terms so
///                   the truncation stays O(h^2) uniformly up to the axis.
///   row M-1         constraint u'(1) = 0 (one-sided, second order)
///   row M           constraint u(1) = 0
///
/// Applied to samples of (1-r^2)^2 the collocation rows return 8n(n+2) up to
/// O(h^2); the constraint rows return the boundary residuals.
class DiscreteBiharmonic {
public:
    static constexpr int kBandRadius = 2;

    DiscreteBiharmonic(int n, RadialMesh mesh);

    int size() const { return static_cast<int>(mesh_.nodes.size()); }
    int dimension() const { return n_; }
    double spacing() const { return mesh_.spacing; }
    const RadialMesh& mesh() const { return mesh_; }

    /// Rows [0, pde_rows()) collocate the operator; the rest are constraints.
    int pde_rows() const { return size() - 2; }
    bool is_constraint_row(int row) const { return row >= pde_rows(); }

    /// Band entry A(row, row+offset), offset in [-2, 2].
    double at(int row, int offset) const;
    void add_at(int row, int col, double value);

    RadialField apply(const RadialField& f) const;

private:
    int n_;
    RadialMesh mesh_;
    std::vector<double> band_;  // 5 entries per row, offsets -2..2
};

DiscreteBiharmonic assemble_biharmonic(const RadialMesh& mesh, int n);

/// Centered discrete radial Laplacian u'' + (n-1)/r u' with the same closures
/// (even reflection at r=0, u'(1)=0 folded into the endpoint row).
RadialField discrete_laplacian(const DiscreteBiharmonic& op, const RadialField& f);

/// rhs - A*f accumulated with compensated (fma-based) products, so residuals
/// of well-converged solutions are measurable below the h^-4 roundoff floor
/// of a plain matvec.
RadialField residual_compensated(const DiscreteBiharmonic& op, const RadialField& f,
                                 const RadialField& rhs);

}  // namespace biharm
