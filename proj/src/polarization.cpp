#include "sl2optics/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sl2optics {

bool JonesSpinor::is_finite() const {
    return std::isfinite(psi1.real()) && std::isfinite(psi1.imag()) &&
           std::isfinite(psi2.real()) && std::isfinite(psi2.imag());
}

double JonesSpinor::norm_squared() const {
    return std::norm(psi1) + std::norm(psi2);
}

double CoherencyMatrix::max_abs() const {
    return std::max({std::abs(c11), std::abs(c12), std::abs(c21), std::abs(c22)});
}

void CoherencyMatrix::validate(double tol) const {
    const double scale = max_abs();
    if (!std::isfinite(scale)) {
        throw std::domain_error("coherency: non-finite entries");
    }
    const double bound = tol * std::max(1.0, scale);
    if (std::abs(c11.imag()) > bound || std::abs(c22.imag()) > bound) {
        throw std::domain_error("coherency: diagonal not real");
    }
    if (std::abs(c21 - std::conj(c12)) > bound) {
        throw std::domain_error("coherency: not Hermitian");
    }
    if (c11.real() < -bound || c22.real() < -bound) {
        throw std::domain_error("coherency: negative intensity");
    }
    // PSD: determinant error scales with the square of the entries
    const double det_re = c11.real() * c22.real() - std::norm(c12);
    if (det_re < -tol * std::max(1.0, scale * scale)) {
        throw std::domain_error("coherency: not positive semidefinite");
    }
}

void StokesVector::validate(double tol) const {
    if (!(std::isfinite(s0) && std::isfinite(s1) && std::isfinite(s2) &&
          std::isfinite(s3))) {
        throw std::domain_error("stokes: non-finite components");
    }
    const double slack = tol * std::max(1.0, s0 * s0);
    if (s0 < -tol * std::max(1.0, std::abs(s0))) {
        throw std::domain_error("stokes: negative intensity S0");
    }
    const double m2 = s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3;
    if (m2 < -slack) {
        throw std::domain_error("stokes: unphysical (S0^2 < S1^2+S2^2+S3^2)");
    }
}

const char* to_string(MixednessClass cls) {
    switch (cls) {
        case MixednessClass::Pure: return "pure";
        case MixednessClass::PartiallyMixed: return "partially_mixed";
        case MixednessClass::CompletelyRandom: return "completely_random";
    }
    return "?";
}

CoherencyMatrix coherency_from_jones(const JonesSpinor& psi) {
    if (!psi.is_finite()) {
        throw std::domain_error("jones: non-finite amplitudes");
    }
    if (psi.norm_squared() == 0.0) {
        throw std::domain_error("jones: zero spinor");
    }
    return {Complex{std::norm(psi.psi1), 0.0},
            psi.psi1 * std::conj(psi.psi2),
            psi.psi2 * std::conj(psi.psi1),
            Complex{std::norm(psi.psi2), 0.0}};
}

StokesVector stokes_from_coherency(const CoherencyMatrix& c) {
    c.validate();
    return {c.c11.real() + c.c22.real(),
            c.c11.real() - c.c22.real(),
            c.c12.real() + c.c21.real(),
            c.c12.imag() - c.c21.imag()};  // = 2 Im(c12) for Hermitian C
}

CoherencyMatrix coherency_from_stokes(const StokesVector& s) {
    s.validate();
    const Complex off{s.s2 / 2.0, s.s3 / 2.0};
    return {Complex{(s.s0 + s.s1) / 2.0, 0.0}, off, std::conj(off),
            Complex{(s.s0 - s.s1) / 2.0, 0.0}};
}

JonesSpinor transform_jones(const SL2CMatrix& a, const JonesSpinor& psi) {
    if (!a.is_finite() || !psi.is_finite()) {
        throw std::domain_error("transform_jones: non-finite input");
    }
    return {a.a * psi.psi1 + a.b * psi.psi2, a.c * psi.psi1 + a.d * psi.psi2};
}

CoherencyMatrix transform_coherency(const SL2CMatrix& a, const CoherencyMatrix& c) {
    const SL2CMatrix m{c.c11, c.c12, c.c21, c.c22};
    const SL2CMatrix h = a * m * a.dagger();
    // symmetrize so the result is Hermitian by construction
    const Complex off = (h.b + std::conj(h.c)) / 2.0;
    return {Complex{h.a.real(), 0.0}, off, std::conj(off), Complex{h.d.real(), 0.0}};
}

LorentzMatrix mueller_from_sl2c(const SL2CMatrix& a, double tol_det) {
    return lift(a, tol_det);
}

CoherencyMatrix decohere(const CoherencyMatrix& c, double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::domain_error("decohere: r must lie in [0, 1]");
    }
    c.validate();
    return {c.c11, r * c.c12, r * c.c21, c.c22};
}

MixednessReport mixedness(const StokesVector& s, double tol_mix) {
    s.validate();
    if (s.s0 <= 0.0) {
        throw std::domain_error("mixedness: zero-intensity state");
    }
    const double m2 = s.s0 * s.s0 - s.s1 * s.s1 - s.s2 * s.s2 - s.s3 * s.s3;
    const double ratio = std::sqrt(std::max(m2, 0.0)) / s.s0;
    MixednessClass cls;
    if (ratio <= tol_mix) {
        cls = MixednessClass::Pure;
    } else if (ratio >= 1.0 - tol_mix) {
        cls = MixednessClass::CompletelyRandom;
    } else {
        cls = MixednessClass::PartiallyMixed;
    }
    return {m2, ratio, cls};
}

} // namespace sl2optics
