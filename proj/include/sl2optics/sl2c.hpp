#pragma once

#include <complex>
#include <span>

namespace sl2optics {

using Complex = std::complex<double>;

/// Default relative tolerance on |det - 1| for integrity checks.
inline constexpr double kTolDet = 1e-9;
/// Default tolerance on |trace| - 2 for conjugacy classification.
inline constexpr double kTolClass = 1e-9;

/// 2x2 complex matrix [[a, b], [c, d]], nominally of unit determinant.
struct SL2CMatrix {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    Complex d{1.0, 0.0};

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }
    SL2CMatrix dagger() const;

    /// Largest entry modulus; used to scale rounding-error budgets.
    double max_abs() const;
    bool is_finite() const;

    /// |det - 1| <= tol * max(1, max_abs()^2). The quadratic scale factor
    /// tracks how cancellation error in a*d - b*c actually grows.
    bool has_unit_det(double tol = kTolDet) const;

    /// Entries real up to tol * max(1, max_abs()).
    bool is_real(double tol = kTolDet) const;
};

SL2CMatrix operator*(const SL2CMatrix& lhs, const SL2CMatrix& rhs);
SL2CMatrix operator-(const SL2CMatrix& m);

/// Parameter bundle for the four one-parameter subgroups.
struct GeneratorParams {
    double phi = 0.0;
    double theta = 0.0;
    double eta = 0.0;
    double chi = 0.0;

    bool is_finite() const;
};

enum class ConjugacyTag { Elliptic, Parabolic, Hyperbolic };

struct ConjugacyClass {
    ConjugacyTag tag;
    double trace;
};

const char* to_string(ConjugacyTag tag);

/// diag(e^{i phi/2}, e^{-i phi/2}): relative phase shift between the
/// two beams (or field components).
SL2CMatrix phase_shift(double phi);

/// [[cos t/2, -sin t/2], [sin t/2, cos t/2]]: rotation by theta.
SL2CMatrix rotation(double theta);

/// diag(e^{eta/2}, e^{-eta/2}): relative attenuation, a squeeze along
/// the component axes.
SL2CMatrix attenuation(double eta);

/// [[cosh x/2, sinh x/2], [sinh x/2, cosh x/2]]: squeeze along the
/// 45-degree axes.
SL2CMatrix x_boost(double chi);

/// Product in optical order: elements.front() acts first on the state,
/// so it sits rightmost in the matrix product. Throws
/// std::invalid_argument on an empty span, std::domain_error on a
/// non-finite or singular element, IntegrityError if the product's
/// determinant drifts.
SL2CMatrix compose(std::span<const SL2CMatrix> elements, double tol_det = kTolDet);

/// Conjugacy class of a real unimodular matrix by |trace| vs 2.
/// Throws std::domain_error if m is not real or not unimodular.
ConjugacyClass classify_real(const SL2CMatrix& m, double tol_cls = kTolClass,
                             double tol_det = kTolDet);

} // namespace sl2optics
