#include "sl2optics/lens.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sl2optics/errors.hpp"

namespace sl2optics {

double RayMatrix::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool RayMatrix::has_unit_det(double tol) const {
    const double scale = max_abs();
    if (!std::isfinite(scale)) return false;
    return std::abs(det() - 1.0) <= tol * std::max(1.0, scale * scale);
}

SL2CMatrix RayMatrix::to_sl2c() const {
    return {{a, 0.0}, {b, 0.0}, {c, 0.0}, {d, 0.0}};
}

RayMatrix operator*(const RayMatrix& lhs, const RayMatrix& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

RayMatrix lens(double f) {
    if (!std::isfinite(f) || f == 0.0) {
        throw std::domain_error("lens: focal length must be finite and nonzero");
    }
    return {1.0, 0.0, -1.0 / f, 1.0};
}

RayMatrix translation(double z) {
    if (!std::isfinite(z)) {
        throw std::domain_error("translation: distance must be finite");
    }
    return {1.0, z, 0.0, 1.0};
}

void OneLensSystem::validate() const {
    if (!(std::isfinite(z1) && z1 > 0.0)) {
        throw std::domain_error("one-lens system: z1 must be positive");
    }
    if (!(std::isfinite(z2) && z2 > 0.0)) {
        throw std::domain_error("one-lens system: z2 must be positive");
    }
    if (!std::isfinite(f) || f == 0.0) {
        throw std::domain_error("one-lens system: f must be finite and nonzero");
    }
}

RayMatrix one_lens_chain(const OneLensSystem& sys) {
    sys.validate();
    return translation(sys.z2) * lens(sys.f) * translation(sys.z1);
}

bool is_focused(const OneLensSystem& sys, double tol) {
    sys.validate();
    if (!(std::isfinite(tol) && tol > 0.0)) {
        throw std::domain_error("is_focused: tolerance must be positive");
    }
    return std::abs(one_lens_chain(sys).b) <= tol;
}

RayMatrix CoreMatrix::matrix() const {
    return {x - 1.0, x - 2.0, x, x - 1.0};
}

CoreMatrix core_matrix(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("core_matrix: x must be finite");
    }
    return {x};
}

RenormalizedCore renormalize_core(double z, double f) {
    if (!(std::isfinite(z) && z > 0.0)) {
        throw std::domain_error("renormalize_core: z must be positive");
    }
    if (!std::isfinite(f) || f == 0.0) {
        throw std::domain_error("renormalize_core: f must be finite and nonzero");
    }
    const double x = z / f;
    const double s = std::sqrt(z);

    // -D M D^{-1} with D = diag(1/s, s) must reproduce the core exactly;
    // this pins down the renormalization rather than assuming it.
    const RayMatrix m = one_lens_chain({z, z, f});
    const RayMatrix conj{-m.a, -m.b / (s * s), -m.c * (s * s), -m.d};
    const RayMatrix core = core_matrix(x).matrix();
    const double err = std::max({std::abs(conj.a - core.a), std::abs(conj.b - core.b),
                                 std::abs(conj.c - core.c), std::abs(conj.d - core.d)});
    if (err > 1e-12 * std::max(1.0, core.max_abs())) {
        throw IntegrityError("renormalize_core: conjugation identity drifted");
    }
    return {x, s};
}

const char* to_string(ParticleLabel label) {
    switch (label) {
        case ParticleLabel::MassiveLike: return "massive_like";
        case ParticleLabel::MasslessLike: return "massless_like";
        case ParticleLabel::TachyonLike: return "tachyon_like";
    }
    return "?";
}

ConjugacyTag WignerDecomposition::tag() const {
    if (std::holds_alternative<EllipticPart>(part)) return ConjugacyTag::Elliptic;
    if (std::holds_alternative<ParabolicPart>(part)) return ConjugacyTag::Parabolic;
    return ConjugacyTag::Hyperbolic;
}

ParticleLabel WignerDecomposition::particle_label() const {
    switch (tag()) {
        case ConjugacyTag::Elliptic: return ParticleLabel::MassiveLike;
        case ConjugacyTag::Parabolic: return ParticleLabel::MasslessLike;
        default: return ParticleLabel::TachyonLike;
    }
}

WignerDecomposition decompose_core(double x, double tol_cls) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw std::domain_error("decompose_core: x must be positive");
    }
    if (std::abs(x - 2.0) <= tol_cls) {
        return {ParabolicPart{2.0}};
    }
    if (x < 2.0) {
        // cos(phi/2) = x - 1, sin(phi/2) = sqrt(x(2-x)) > 0, phi in (0, 2pi)
        const double phi = 2.0 * std::atan2(std::sqrt(x * (2.0 - x)), x - 1.0);
        const double eta = 0.5 * std::log(x / (2.0 - x));
        return {EllipticPart{eta, phi}};
    }
    const double chi = 2.0 * std::acosh(x - 1.0);
    const double eta = 0.5 * std::log(x / (x - 2.0));
    return {HyperbolicPart{eta, chi}};
}

RayMatrix reconstruct(const WignerDecomposition& d) {
    if (const auto* e = std::get_if<EllipticPart>(&d.part)) {
        const double c = std::cos(e->phi / 2.0);
        const double s = std::sin(e->phi / 2.0);
        return {c, -std::exp(-e->eta) * s, std::exp(e->eta) * s, c};
    }
    if (const auto* h = std::get_if<HyperbolicPart>(&d.part)) {
        const double c = std::cosh(h->chi / 2.0);
        const double s = std::sinh(h->chi / 2.0);
        return {c, std::exp(-h->eta) * s, std::exp(h->eta) * s, c};
    }
    const auto& p = std::get<ParabolicPart>(d.part);
    return {1.0, 0.0, p.gamma, 1.0};
}

std::vector<ContractionRow> contraction_sweep(std::span<const double> epsilons,
                                              ContractionSide side) {
    std::vector<ContractionRow> rows;
    rows.reserve(epsilons.size());
    for (double eps : epsilons) {
        if (!(std::isfinite(eps) && eps > 0.0 && eps < 1.0)) {
            throw std::domain_error("contraction_sweep: eps must lie in (0, 1)");
        }
        const bool below = side == ContractionSide::Below;
        ContractionRow row;
        row.x = below ? 2.0 - eps : 2.0 + eps;
        // Same closed forms decompose_core applies at x = 2 -/+ eps, but
        // written in eps: the x - 2 cancellation would otherwise destroy
        // the row for small eps, and the upper-right entry is -/+ eps by
        // construction rather than a re-rounding of x - 2.
        row.upper_right = below ? -eps : eps;
        if (below) {
            const double s = std::sqrt(eps * (2.0 - eps));  // sin(phi/2)
            row.eta = 0.5 * std::log((2.0 - eps) / eps);
            row.angle = 2.0 * std::atan2(s, 1.0 - eps);
            row.lower_left = std::exp(row.eta) * s;
        } else {
            const double s = std::sqrt(eps * (2.0 + eps));  // sinh(chi/2)
            row.eta = 0.5 * std::log((2.0 + eps) / eps);
            row.angle = 2.0 * std::asinh(s);
            row.lower_left = std::exp(row.eta) * s;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace sl2optics
