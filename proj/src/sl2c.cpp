#include "sl2optics/sl2c.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sl2optics/errors.hpp"

namespace sl2optics {

SL2CMatrix SL2CMatrix::dagger() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
}

double SL2CMatrix::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool SL2CMatrix::is_finite() const {
    auto ok = [](const Complex& v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    };
    return ok(a) && ok(b) && ok(c) && ok(d);
}

bool SL2CMatrix::has_unit_det(double tol) const {
    if (!is_finite()) return false;
    const double scale = max_abs();
    return std::abs(det() - Complex{1.0, 0.0}) <= tol * std::max(1.0, scale * scale);
}

bool SL2CMatrix::is_real(double tol) const {
    const double bound = tol * std::max(1.0, max_abs());
    return std::abs(a.imag()) <= bound && std::abs(b.imag()) <= bound &&
           std::abs(c.imag()) <= bound && std::abs(d.imag()) <= bound;
}

SL2CMatrix operator*(const SL2CMatrix& lhs, const SL2CMatrix& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

SL2CMatrix operator-(const SL2CMatrix& m) {
    return {-m.a, -m.b, -m.c, -m.d};
}

bool GeneratorParams::is_finite() const {
    return std::isfinite(phi) && std::isfinite(theta) && std::isfinite(eta) &&
           std::isfinite(chi);
}

const char* to_string(ConjugacyTag tag) {
    switch (tag) {
        case ConjugacyTag::Elliptic: return "elliptic";
        case ConjugacyTag::Parabolic: return "parabolic";
        case ConjugacyTag::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

namespace {

void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw std::domain_error(std::string(name) + " must be finite");
    }
}

} // namespace

SL2CMatrix phase_shift(double phi) {
    require_finite(phi, "phi");
    const Complex e{std::cos(phi / 2.0), std::sin(phi / 2.0)};
    return {e, {0.0, 0.0}, {0.0, 0.0}, std::conj(e)};
}

SL2CMatrix rotation(double theta) {
    require_finite(theta, "theta");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0}};
}

SL2CMatrix attenuation(double eta) {
    require_finite(eta, "eta");
    return {{std::exp(eta / 2.0), 0.0},
            {0.0, 0.0},
            {0.0, 0.0},
            {std::exp(-eta / 2.0), 0.0}};
}

SL2CMatrix x_boost(double chi) {
    require_finite(chi, "chi");
    const double ch = std::cosh(chi / 2.0);
    const double sh = std::sinh(chi / 2.0);
    return {{ch, 0.0}, {sh, 0.0}, {sh, 0.0}, {ch, 0.0}};
}

SL2CMatrix compose(std::span<const SL2CMatrix> elements, double tol_det) {
    if (elements.empty()) {
        throw std::invalid_argument("compose: empty element list");
    }
    for (const SL2CMatrix& e : elements) {
        if (!e.is_finite()) {
            throw std::domain_error("compose: non-finite element");
        }
        if (!e.has_unit_det(tol_det)) {
            throw std::domain_error("compose: element determinant differs from 1");
        }
    }
    SL2CMatrix product = elements.front();
    for (std::size_t i = 1; i < elements.size(); ++i) {
        product = elements[i] * product;  // later elements act from the left
    }
    if (!product.has_unit_det(tol_det)) {
        throw IntegrityError("compose: determinant drifted beyond tolerance");
    }
    return product;
}

ConjugacyClass classify_real(const SL2CMatrix& m, double tol_cls, double tol_det) {
    if (!m.is_finite()) {
        throw std::domain_error("classify_real: non-finite matrix");
    }
    if (!m.is_real(tol_det)) {
        throw std::domain_error("classify_real: matrix has complex entries");
    }
    if (!m.has_unit_det(tol_det)) {
        throw std::domain_error("classify_real: determinant differs from 1");
    }
    const double tr = m.trace().real();
    ConjugacyTag tag;
    if (std::abs(std::abs(tr) - 2.0) <= tol_cls) {
        tag = ConjugacyTag::Parabolic;
    } else if (std::abs(tr) < 2.0) {
        tag = ConjugacyTag::Elliptic;
    } else {
        tag = ConjugacyTag::Hyperbolic;
    }
    return {tag, tr};
}

} // namespace sl2optics
