#pragma once

#include "lorentz.hpp"
#include "sl2c.hpp"

namespace sl2optics {

/// Default absolute floor for hermiticity / positivity checks.
inline constexpr double kTolHerm = 1e-12;
/// Default tolerance for mixedness classification boundaries.
inline constexpr double kTolMix = 1e-9;

/// Two-component complex field amplitude (a Jones vector).
struct JonesSpinor {
    Complex psi1{1.0, 0.0};
    Complex psi2{0.0, 0.0};

    bool is_finite() const;
    double norm_squared() const;
};

/// 2x2 Hermitian, positive semi-definite coherency matrix of
/// time-averaged quadratic field products.
struct CoherencyMatrix {
    Complex c11{0.0, 0.0};
    Complex c12{0.0, 0.0};
    Complex c21{0.0, 0.0};
    Complex c22{0.0, 0.0};

    Complex trace() const { return c11 + c22; }
    double max_abs() const;

    /// Throws std::domain_error unless Hermitian and PSD within
    /// tol * max(1, max_abs()).
    void validate(double tol = kTolHerm) const;
};

/// (S0, S1, S2, S3) with S0 the intensity. A Minkowski four-vector
/// under the optical action.
struct StokesVector {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    /// Throws std::domain_error unless S0 >= 0 and S0^2 >= S1^2+S2^2+S3^2
    /// within tol * max(1, S0^2).
    void validate(double tol = kTolMix) const;
};

enum class MixednessClass { Pure, PartiallyMixed, CompletelyRandom };

const char* to_string(MixednessClass cls);

struct MixednessReport {
    double m_squared;       // S0^2 - S1^2 - S2^2 - S3^2
    double ratio;           // sqrt(max(m_squared, 0)) / S0
    MixednessClass cls;
};

/// C = psi psi^dagger for a fully coherent field.
CoherencyMatrix coherency_from_jones(const JonesSpinor& psi);

/// S0 = c11 + c22, S1 = c11 - c22, S2 = c12 + c21, S3 = 2 Im(c12).
StokesVector stokes_from_coherency(const CoherencyMatrix& c);

/// Inverse map: c11 = (S0+S1)/2, c22 = (S0-S1)/2, c12 = (S2 + i S3)/2,
/// c21 = conj(c12). Validates the input's physicality.
CoherencyMatrix coherency_from_stokes(const StokesVector& s);

JonesSpinor transform_jones(const SL2CMatrix& a, const JonesSpinor& psi);

/// C -> A C A^dagger, re-symmetrized so the result is Hermitian by
/// construction.
CoherencyMatrix transform_coherency(const SL2CMatrix& a, const CoherencyMatrix& c);

/// The 4x4 Mueller matrix of a deterministic element: acts on Stokes
/// vectors exactly as A acts on coherency matrices. Identical to
/// lift(a).
LorentzMatrix mueller_from_sl2c(const SL2CMatrix& a, double tol_det = kTolDet);

/// Scale off-diagonal coherence by r in [0, 1]: c12 -> r c12, diagonal
/// unchanged. r = 1 leaves the state alone; r = 0 gives fully
/// incoherent light with the same intensities.
CoherencyMatrix decohere(const CoherencyMatrix& c, double r);

/// Lorentzian mixedness of a Stokes vector. Throws std::domain_error
/// on an unphysical input (via StokesVector::validate) or S0 == 0.
MixednessReport mixedness(const StokesVector& s, double tol_mix = kTolMix);

} // namespace sl2optics
