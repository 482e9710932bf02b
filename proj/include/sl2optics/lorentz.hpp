#pragma once

#include <array>

#include "sl2c.hpp"

namespace sl2optics {

/// Minkowski four-vector in coordinate order (t, z, x, y).
struct FourVector {
    double t = 0.0;
    double z = 0.0;
    double x = 0.0;
    double y = 0.0;

    double operator[](int i) const;
    double& operator[](int i);
    bool is_finite() const;
};

/// t^2 - z^2 - x^2 - y^2.
double minkowski_interval(const FourVector& v);

/// Real 4x4 matrix acting on (t, z, x, y), nominally in SO(3,1).
struct LorentzMatrix {
    std::array<std::array<double, 4>, 4> m{};

    static LorentzMatrix identity();

    double operator()(int row, int col) const { return m[row][col]; }
    double& operator()(int row, int col) { return m[row][col]; }

    double max_abs() const;

    /// Largest entry of L^T g L - g, g = diag(1, -1, -1, -1).
    double metric_residual() const;

    /// Metric preservation within tol * max(1, max_abs()^2), plus
    /// proper (det ~ +1) and orthochronous (m[0][0] >= 1 - tol).
    bool is_lorentz(double tol = 1e-9) const;
};

LorentzMatrix operator*(const LorentzMatrix& lhs, const LorentzMatrix& rhs);
FourVector apply(const LorentzMatrix& l, const FourVector& v);

/// The two-to-one covering map: the image of A acting on Hermitian
/// matrices X(v) = t I + z s3 + x s1 - y s2 by X -> A X A^dagger, read back
/// in the same basis. lift(A) == lift(-A). Throws std::domain_error
/// if A is non-finite or fails the unit-determinant check.
LorentzMatrix lift(const SL2CMatrix& a, double tol_det = kTolDet);

} // namespace sl2optics
