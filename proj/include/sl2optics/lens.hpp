#pragma once

#include <span>
#include <variant>
#include <vector>

#include "sl2c.hpp"

namespace sl2optics {

/// 2x2 real ray-transfer (ABCD) matrix [[a, b], [c, d]]. b carries
/// length units, c inverse length; det = 1.
struct RayMatrix {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    double max_abs() const;
    bool has_unit_det(double tol = kTolDet) const;

    /// View as a real SL(2,C) element (for classify_real / lift).
    SL2CMatrix to_sl2c() const;
};

RayMatrix operator*(const RayMatrix& lhs, const RayMatrix& rhs);

/// Thin lens of focal length f: [[1, 0], [-1/f, 1]]. f = 0 is a
/// domain error.
RayMatrix lens(double f);

/// Free propagation over z: [[1, z], [0, 1]].
RayMatrix translation(double z);

struct OneLensSystem {
    double z1;  // object-lens distance, > 0
    double z2;  // lens-image distance, > 0
    double f;   // focal length, != 0

    /// Throws std::domain_error on an out-of-range field.
    void validate() const;
};

/// translation(z2) * lens(f) * translation(z1) =
/// [[1 - z2/f, z1 + z2 - z1 z2 / f], [-1/f, 1 - z1/f]].
RayMatrix one_lens_chain(const OneLensSystem& sys);

/// True iff the chain's upper-right entry vanishes within tol,
/// equivalently 1/z1 + 1/z2 = 1/f.
bool is_focused(const OneLensSystem& sys, double tol);

/// [[x-1, x-2], [x, x-1]]; unit determinant identically.
struct CoreMatrix {
    double x;

    RayMatrix matrix() const;
};

CoreMatrix core_matrix(double x);

struct RenormalizedCore {
    double x;      // z / f
    double scale;  // sqrt(z)
};

/// Reduce the equal-arm (z1 = z2 = z) one-lens chain M to the core:
/// -D M D^{-1} = core_matrix(z/f) with D = diag(1/sqrt(z), sqrt(z)).
/// The sign flip is harmless because M and -M act identically on
/// intensities. The conjugation identity is re-verified to 1e-12;
/// drift raises IntegrityError.
RenormalizedCore renormalize_core(double z, double f);

struct EllipticPart {
    double eta;
    double phi;
};

struct HyperbolicPart {
    double eta;
    double chi;
};

struct ParabolicPart {
    double gamma;
};

enum class ParticleLabel { MassiveLike, MasslessLike, TachyonLike };

const char* to_string(ParticleLabel label);

/// Result of factoring the core through a little-group element:
/// elliptic  Z(eta) R(phi) Z(-eta), hyperbolic Z(eta) X(chi) Z(-eta),
/// parabolic the shear [[1, 0], [gamma, 1]] itself.
struct WignerDecomposition {
    std::variant<EllipticPart, ParabolicPart, HyperbolicPart> part;

    ConjugacyTag tag() const;
    ParticleLabel particle_label() const;
};

/// Closed-form decomposition of core_matrix(x), x > 0:
///   0 < x < 2: elliptic, cos(phi/2) = x - 1, sin(phi/2) = sqrt(x(2-x)),
///              eta = ln(x/(2-x))/2;
///   x > 2:     hyperbolic, cosh(chi/2) = x - 1 with chi > 0,
///              eta = ln(x/(x-2))/2;
///   |x - 2| <= tol_cls: parabolic, gamma = 2.
/// x <= 0 is a domain error.
WignerDecomposition decompose_core(double x, double tol_cls = kTolClass);

/// Multiply the factors back out:
///   elliptic   [[cos(phi/2), -e^{-eta} sin(phi/2)],
///               [e^{eta} sin(phi/2), cos(phi/2)]]
///   hyperbolic [[cosh(chi/2), e^{-eta} sinh(chi/2)],
///               [e^{eta} sinh(chi/2), cosh(chi/2)]]
///   parabolic  [[1, 0], [gamma, 1]]
RayMatrix reconstruct(const WignerDecomposition& d);

enum class ContractionSide { Below, Above };

/// One sample of the singular limit x -> 2.
struct ContractionRow {
    double x;
    double eta;
    double angle;       // phi below, chi above
    double lower_left;  // e^{eta} sin(phi/2) or e^{eta} sinh(chi/2)
    double upper_right; // x - 2, i.e. -eps below and +eps above
};

/// Decompose core_matrix(2 -/+ eps) for each eps in (0, 1): eta grows
/// like ln(2/eps)/2 while the angle collapses, squeezing both regimes
/// onto the parabolic shear. Out-of-range eps is a domain error.
std::vector<ContractionRow> contraction_sweep(std::span<const double> epsilons,
                                              ContractionSide side);

} // namespace sl2optics
