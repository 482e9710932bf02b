#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "doctest.h"
#include "oracles.hpp"
#include "sl2optics/polarization.hpp"

using namespace sl2optics;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865476;

JonesSpinor random_spinor(std::mt19937_64& rng) {
    return {{oracle::uniform(rng, -2.0, 2.0), oracle::uniform(rng, -2.0, 2.0)},
            {oracle::uniform(rng, -2.0, 2.0), oracle::uniform(rng, -2.0, 2.0)}};
}

StokesVector random_physical_stokes(std::mt19937_64& rng) {
    // point strictly inside the light cone: s0 fixed, spatial part scaled
    const double s0 = oracle::uniform(rng, 0.5, 3.0);
    double s1 = oracle::uniform(rng, -1.0, 1.0);
    double s2 = oracle::uniform(rng, -1.0, 1.0);
    double s3 = oracle::uniform(rng, -1.0, 1.0);
    const double len = std::sqrt(s1 * s1 + s2 * s2 + s3 * s3);
    const double target = s0 * oracle::uniform(rng, 0.0, 0.95);
    if (len > 0.0) {
        s1 *= target / len;
        s2 *= target / len;
        s3 *= target / len;
    }
    return {s0, s1, s2, s3};
}

double stokes_diff(const StokesVector& a, const StokesVector& b) {
    return std::max({std::abs(a.s0 - b.s0), std::abs(a.s1 - b.s1),
                     std::abs(a.s2 - b.s2), std::abs(a.s3 - b.s3)});
}

} // namespace

TEST_CASE("coherency of the basis spinors") {
    const CoherencyMatrix cx = coherency_from_jones({{1.0, 0.0}, {0.0, 0.0}});
    CHECK(cx.c11 == Complex{1.0, 0.0});
    CHECK(cx.c22 == Complex{0.0, 0.0});
    CHECK(cx.c12 == Complex{0.0, 0.0});

    const StokesVector sx = stokes_from_coherency(cx);
    CHECK(sx.s0 == 1.0);
    CHECK(sx.s1 == 1.0);
    CHECK(sx.s2 == 0.0);
    CHECK(sx.s3 == 0.0);
}

TEST_CASE("diagonal polarization gives S2 = 1") {
    const JonesSpinor diag{{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}};
    const StokesVector s = stokes_from_coherency(coherency_from_jones(diag));
    CHECK(std::abs(s.s0 - 1.0) <= 1e-15);
    CHECK(std::abs(s.s1) <= 1e-15);
    CHECK(std::abs(s.s2 - 1.0) <= 1e-15);
    CHECK(std::abs(s.s3) <= 1e-15);
}

TEST_CASE("circular polarization pins the S3 orientation") {
    // psi2 leads psi1 by a quarter cycle: S3 = 2 Im(psi1 conj(psi2)) = -1
    const JonesSpinor circ{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}};
    const StokesVector s = stokes_from_coherency(coherency_from_jones(circ));
    CHECK(std::abs(s.s0 - 1.0) <= 1e-15);
    CHECK(std::abs(s.s1) <= 1e-15);
    CHECK(std::abs(s.s2) <= 1e-15);
    CHECK(std::abs(s.s3 + 1.0) <= 1e-15);

    // a quarter-turn phase shift must rotate (S2, S3) by +pi/2,
    // carrying (0, -1) to (1, 0)
    const StokesVector after = stokes_from_coherency(
        transform_coherency(phase_shift(kPi / 2.0), coherency_from_jones(circ)));
    CHECK(std::abs(after.s2 - 1.0) <= 1e-15);
    CHECK(std::abs(after.s3) <= 1e-15);
}

TEST_CASE("stokes and coherency are inverse maps") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const StokesVector s = random_physical_stokes(rng);
        const StokesVector back = stokes_from_coherency(coherency_from_stokes(s));
        CHECK(stokes_diff(s, back) <= 1e-12);
    }
    for (int i = 0; i < 200; ++i) {
        const CoherencyMatrix c = coherency_from_jones(random_spinor(rng));
        const CoherencyMatrix back = coherency_from_stokes(stokes_from_coherency(c));
        CHECK(std::abs(back.c11 - c.c11) <= 1e-12);
        CHECK(std::abs(back.c12 - c.c12) <= 1e-12);
        CHECK(std::abs(back.c21 - c.c21) <= 1e-12);
        CHECK(std::abs(back.c22 - c.c22) <= 1e-12);
    }
}

TEST_CASE("transform_coherency matches the jones route on pure states") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        const SL2CMatrix a = oracle::random_chain(rng, 5, 1.5);
        const JonesSpinor psi = random_spinor(rng);
        if (psi.norm_squared() < 1e-6) continue;
        const CoherencyMatrix via_jones = coherency_from_jones(transform_jones(a, psi));
        const CoherencyMatrix via_matrix = transform_coherency(a, coherency_from_jones(psi));
        const double scale = std::max(1.0, via_jones.max_abs());
        CHECK(std::abs(via_jones.c11 - via_matrix.c11) <= 1e-12 * scale);
        CHECK(std::abs(via_jones.c12 - via_matrix.c12) <= 1e-12 * scale);
        CHECK(std::abs(via_jones.c22 - via_matrix.c22) <= 1e-12 * scale);
    }
}

TEST_CASE("transform_coherency output is Hermitian by construction") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const SL2CMatrix a = oracle::random_chain(rng, 5, 1.5);
        const CoherencyMatrix c = coherency_from_stokes(random_physical_stokes(rng));
        const CoherencyMatrix out = transform_coherency(a, c);
        CHECK(out.c21 == std::conj(out.c12));
        CHECK(out.c11.imag() == 0.0);
        CHECK(out.c22.imag() == 0.0);
        out.validate();  // must not throw
    }
}

TEST_CASE("stokes transformation is the lift in action") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 300; ++i) {
        const SL2CMatrix a = oracle::random_chain(rng, 5, 1.5);
        const CoherencyMatrix c = coherency_from_stokes(random_physical_stokes(rng));
        const StokesVector direct = stokes_from_coherency(transform_coherency(a, c));
        const StokesVector s = stokes_from_coherency(c);
        const LorentzMatrix l = mueller_from_sl2c(a);
        const FourVector moved = apply(l, {s.s0, s.s1, s.s2, s.s3});
        const double scale = std::max(1.0, l.max_abs() * s.s0);
        CHECK(std::abs(direct.s0 - moved.t) <= 1e-10 * scale);
        CHECK(std::abs(direct.s1 - moved.z) <= 1e-10 * scale);
        CHECK(std::abs(direct.s2 - moved.x) <= 1e-10 * scale);
        CHECK(std::abs(direct.s3 - moved.y) <= 1e-10 * scale);
    }
}

TEST_CASE("mueller_from_sl2c is the lift") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 50; ++i) {
        const SL2CMatrix a = oracle::random_chain(rng, 6, 2.0);
        CHECK(oracle::max_abs_diff(mueller_from_sl2c(a), lift(a)) == 0.0);
    }
}

TEST_CASE("decohere endpoints") {
    const CoherencyMatrix c = coherency_from_stokes({2.0, 0.5, 1.0, -0.5});
    SUBCASE("r = 1 changes nothing") {
        const CoherencyMatrix out = decohere(c, 1.0);
        CHECK(out.c11 == c.c11);
        CHECK(out.c12 == c.c12);
        CHECK(out.c21 == c.c21);
        CHECK(out.c22 == c.c22);
    }
    SUBCASE("r = 0 erases the off-diagonal coherence only") {
        const CoherencyMatrix out = decohere(c, 0.0);
        CHECK(out.c12 == Complex{0.0, 0.0});
        CHECK(out.c21 == Complex{0.0, 0.0});
        CHECK(out.c11 == c.c11);
        CHECK(out.c22 == c.c22);
    }
    SUBCASE("r outside [0, 1] is rejected") {
        CHECK_THROWS_AS(decohere(c, -0.1), std::domain_error);
        CHECK_THROWS_AS(decohere(c, 1.5), std::domain_error);
        CHECK_THROWS_AS(decohere(c, std::nan("")), std::domain_error);
    }
}

TEST_CASE("decohere drives mixedness monotonically") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 200; ++i) {
        const CoherencyMatrix c = coherency_from_stokes(random_physical_stokes(rng));
        double r1 = oracle::uniform(rng, 0.0, 1.0);
        double r2 = oracle::uniform(rng, 0.0, 1.0);
        if (r1 > r2) std::swap(r1, r2);
        const double m1 =
            mixedness(stokes_from_coherency(decohere(c, r1))).m_squared;
        const double m2 =
            mixedness(stokes_from_coherency(decohere(c, r2))).m_squared;
        // smaller r means less coherence, hence no smaller M^2
        CHECK(m1 >= m2 - 1e-12);
    }
}

TEST_CASE("mixedness endpoints and midpoint") {
    SUBCASE("pure state") {
        const MixednessReport r = mixedness({1.0, 0.0, 0.0, 1.0});
        CHECK(std::abs(r.m_squared) <= 1e-15);
        CHECK(r.cls == MixednessClass::Pure);
    }
    SUBCASE("completely random light") {
        const MixednessReport r = mixedness({1.0, 0.0, 0.0, 0.0});
        CHECK(r.m_squared == 1.0);
        CHECK(r.ratio == 1.0);
        CHECK(r.cls == MixednessClass::CompletelyRandom);
    }
    SUBCASE("partially mixed") {
        const MixednessReport r = mixedness({1.0, 0.6, 0.0, 0.0});
        CHECK(std::abs(r.m_squared - 0.64) <= 1e-15);
        CHECK(std::abs(r.ratio - 0.8) <= 1e-15);
        CHECK(r.cls == MixednessClass::PartiallyMixed);
    }
    SUBCASE("zero intensity is rejected") {
        CHECK_THROWS_AS(mixedness({0.0, 0.0, 0.0, 0.0}), std::domain_error);
    }
}

TEST_CASE("mixedness is invariant under deterministic elements") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        const SL2CMatrix a = oracle::random_chain(rng, 5, 1.5);
        const CoherencyMatrix c = coherency_from_stokes(random_physical_stokes(rng));
        const double before = mixedness(stokes_from_coherency(c)).m_squared;
        const double after =
            mixedness(stokes_from_coherency(transform_coherency(a, c))).m_squared;
        const double scale = std::max(1.0, lift(a).max_abs());
        CHECK(std::abs(after - before) <= 1e-10 * scale * scale);
    }
}

TEST_CASE("validators reject unphysical input") {
    SUBCASE("non-Hermitian coherency") {
        const CoherencyMatrix c{{1.0, 0.0}, {0.5, 0.0}, {0.1, 0.0}, {1.0, 0.0}};
        CHECK_THROWS_AS(c.validate(), std::domain_error);
    }
    SUBCASE("negative intensity on the diagonal") {
        const CoherencyMatrix c{{-1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
        CHECK_THROWS_AS(c.validate(), std::domain_error);
    }
    SUBCASE("indefinite coherency") {
        const CoherencyMatrix c{{1.0, 0.0}, {0.9, 0.0}, {0.9, 0.0}, {0.5, 0.0}};
        CHECK_THROWS_AS(c.validate(), std::domain_error);
    }
    SUBCASE("overpolarized stokes vector") {
        CHECK_THROWS_AS((StokesVector{1.0, 2.0, 0.0, 0.0}.validate()), std::domain_error);
        CHECK_THROWS_AS(coherency_from_stokes({1.0, 0.0, 1.2, 0.0}), std::domain_error);
    }
    SUBCASE("negative intensity stokes vector") {
        CHECK_THROWS_AS((StokesVector{-1.0, 0.0, 0.0, 0.0}.validate()), std::domain_error);
    }
    SUBCASE("zero jones spinor") {
        CHECK_THROWS_AS(coherency_from_jones({{0.0, 0.0}, {0.0, 0.0}}), std::domain_error);
    }
}
