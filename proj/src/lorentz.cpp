#include "sl2optics/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sl2optics {

double FourVector::operator[](int i) const {
    switch (i) {
        case 0: return t;
        case 1: return z;
        case 2: return x;
        default: return y;
    }
}

double& FourVector::operator[](int i) {
    switch (i) {
        case 0: return t;
        case 1: return z;
        case 2: return x;
        default: return y;
    }
}

bool FourVector::is_finite() const {
    return std::isfinite(t) && std::isfinite(z) && std::isfinite(x) &&
           std::isfinite(y);
}

double minkowski_interval(const FourVector& v) {
    return v.t * v.t - v.z * v.z - v.x * v.x - v.y * v.y;
}

LorentzMatrix LorentzMatrix::identity() {
    LorentzMatrix l;
    for (int i = 0; i < 4; ++i) l.m[i][i] = 1.0;
    return l;
}

double LorentzMatrix::max_abs() const {
    double best = 0.0;
    for (const auto& row : m)
        for (double v : row) best = std::max(best, std::abs(v));
    return best;
}

double LorentzMatrix::metric_residual() const {
    // g = diag(1, -1, -1, -1); residual = max |(L^T g L - g)_{ij}|
    static constexpr double g[4] = {1.0, -1.0, -1.0, -1.0};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += m[k][i] * g[k] * m[k][j];
            const double target = (i == j) ? g[i] : 0.0;
            worst = std::max(worst, std::abs(acc - target));
        }
    }
    return worst;
}

namespace {

double det4(const LorentzMatrix& l) {
    // cofactor expansion over the first row via 3x3 minors
    double total = 0.0;
    for (int col = 0; col < 4; ++col) {
        double minor[3][3];
        for (int i = 1; i < 4; ++i) {
            int jj = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = l.m[i][j];
            }
        }
        const double m3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1]) -
                          minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0]) +
                          minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
        total += ((col % 2 == 0) ? 1.0 : -1.0) * l.m[0][col] * m3;
    }
    return total;
}

} // namespace

bool LorentzMatrix::is_lorentz(double tol) const {
    for (const auto& row : m)
        for (double v : row)
            if (!std::isfinite(v)) return false;
    const double scale = std::max(1.0, max_abs());
    if (metric_residual() > tol * scale * scale) return false;
    if (m[0][0] < 1.0 - tol) return false;
    const double s4 = scale * scale * scale * scale;
    return std::abs(det4(*this) - 1.0) <= tol * s4;
}

LorentzMatrix operator*(const LorentzMatrix& lhs, const LorentzMatrix& rhs) {
    LorentzMatrix out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += lhs.m[i][k] * rhs.m[k][j];
            out.m[i][j] = acc;
        }
    }
    return out;
}

FourVector apply(const LorentzMatrix& l, const FourVector& v) {
    FourVector out;
    for (int i = 0; i < 4; ++i) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += l.m[i][k] * v[k];
        out[i] = acc;
    }
    return out;
}

LorentzMatrix lift(const SL2CMatrix& a, double tol_det) {
    if (!a.is_finite()) {
        throw std::domain_error("lift: non-finite matrix");
    }
    if (!a.has_unit_det(tol_det)) {
        throw std::domain_error("lift: determinant differs from 1");
    }

    // Column nu of the lift is the Hermitian conjugate A tau_nu A^dagger read
    // back in the basis tau = (I, s3, s1, -s2): for H = [[h11, h12],
    // [h21, h22]] the components are
    //   t = Re(h11 + h22) / 2      z = Re(h11 - h22) / 2
    //   x = Re(h12 + h21) / 2      y = (Im h12 - Im h21) / 2
    // The quadratic dependence on A makes lift(A) == lift(-A).
    const SL2CMatrix ad = a.dagger();
    const SL2CMatrix tau[4] = {
        {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}},    // I
        {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {-1.0, 0.0}},   // s3
        {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}},    // s1
        {{0.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}, {0.0, 0.0}},   // -s2
    };

    LorentzMatrix out;
    for (int nu = 0; nu < 4; ++nu) {
        const SL2CMatrix h = a * tau[nu] * ad;
        out.m[0][nu] = (h.a.real() + h.d.real()) / 2.0;
        out.m[1][nu] = (h.a.real() - h.d.real()) / 2.0;
        out.m[2][nu] = (h.b.real() + h.c.real()) / 2.0;
        out.m[3][nu] = (h.b.imag() - h.c.imag()) / 2.0;
    }
    return out;
}

} // namespace sl2optics
