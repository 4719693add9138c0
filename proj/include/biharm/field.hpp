#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "biharm/errors.hpp"

namespace biharm {

/// Uniform radial mesh on [0,1]: r_0 = 0 < r_1 < ... < r_M = 1.
struct RadialMesh {
    std::vector<double> nodes;
    double spacing = 0.0;

    int intervals() const { return static_cast<int>(nodes.size()) - 1; }
};

RadialMesh build_mesh(int intervals);

/// Values of a radial function at the mesh nodes (dimensionless deflection).
struct RadialField {
    std::vector<double> values;

    RadialField() = default;
    explicit RadialField(int size, double fill = 0.0) : values(static_cast<std::size_t>(size), fill) {}

    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int i) { return values[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
    double* data() { return values.data(); }
    const double* data() const { return values.data(); }
};

inline double sup_norm(const RadialField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs_diff(const RadialField& a, const RadialField& b) {
    if (a.size() != b.size()) throw ShapeError("max_abs_diff: length mismatch");
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline bool all_finite(const RadialField& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

/// Sample a callable u(r) at every mesh node.
template <typename F>
RadialField sample(const RadialMesh& mesh, F&& u) {
    RadialField f(static_cast<int>(mesh.nodes.size()));
    for (int i = 0; i < f.size(); ++i) f[i] = u(mesh.nodes[static_cast<std::size_t>(i)]);
    return f;
}

}  // namespace biharm
