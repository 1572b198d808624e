#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "osq/dynamics.hpp"

using namespace osq;

namespace {

SystemParams make_params(double g_minus, double g_plus) {
    SystemParams p;
    p.kappa = 1000.0;
    p.gamma_m = 1e-5;
    p.gamma_1 = p.gamma_2 = 1e-3;
    p.g_a1 = p.g_a2 = 10.0;
    p.delta_1 = 2.0;
    p.delta_2 = -2.0;
    p.g_minus = g_minus;
    p.g_plus = g_plus;
    return p;
}

Mat8 reconstruct(const DriftHarmonics& h, double t) {
    const std::complex<double> e =
        std::exp(std::complex<double>(0.0, 2.0 * SystemParams::omega_m * t));
    const Mat8c sum = h.a0.cast<std::complex<double>>() + h.a_plus * e + h.a_minus / e;
    return sum.real();
}

} // namespace

TEST_CASE("modulation values at t = 0") {
    const SystemParams p = make_params(1.0, 0.5);
    const Modulation f = modulation_values(p, 0.0);
    CHECK(f.f1.real() == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(f.f2.real() == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(f.f3.real() == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(std::abs(f.f1.imag()) < 1e-15);
}

TEST_CASE("modulation values at half a period flip the modulated part") {
    const SystemParams p = make_params(1.0, 0.5);
    const double t = modulation_period() / 2.0;  // 2 omega_m t = pi
    const Modulation f = modulation_values(p, t);
    CHECK(f.f1.real() == doctest::Approx(0.5).epsilon(1e-12));   // -(0.5 - 1.0)
    CHECK(f.f2.real() == doctest::Approx(-0.5).epsilon(1e-12));  // -(1.0 - 0.5)
    CHECK(f.f3.real() == doctest::Approx(-0.5).epsilon(1e-12));  // -(1.0 - 0.5)
    CHECK(std::abs(f.f1.imag()) < 1e-12);
    CHECK(std::abs(f.f2.imag()) < 1e-12);
    CHECK(std::abs(f.f3.imag()) < 1e-12);
}

TEST_CASE("modulation vanishes without drives") {
    const SystemParams p = make_params(0.0, 0.0);
    const Modulation f = modulation_values(p, 0.37);
    CHECK(std::abs(f.f1) == 0.0);
    CHECK(std::abs(f.f2) == 0.0);
    CHECK(std::abs(f.f3) == 0.0);
}

TEST_CASE("drift matrix entries at t = 0") {
    const SystemParams p = make_params(1.0, 0.5);
    const Mat8 a = drift_matrix({p, DriftVariant::Full}, 0.0);
    // f12+ = -3 (real): A(0,2) = -Im = 0, A(1,2) = Re = -3; f12- = 0: A(0,3) = 0
    CHECK(a(0, 2) == doctest::Approx(0.0));
    CHECK(a(1, 2) == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(a(0, 3) == doctest::Approx(0.0));
    // diagonal damping and atom blocks
    CHECK(a(0, 0) == doctest::Approx(-500.0));
    CHECK(a(2, 2) == doctest::Approx(-5e-6));
    CHECK(a(4, 5) == doctest::Approx(2.0));
    CHECK(a(5, 4) == doctest::Approx(-2.0));
    CHECK(a(0, 5) == doctest::Approx(10.0));
    CHECK(a(1, 4) == doctest::Approx(-10.0));
}

TEST_CASE("RWA drift matrix entries") {
    const SystemParams p = make_params(1.0, 0.5);
    const Mat8 a = drift_matrix({p, DriftVariant::RWA});
    // f12- = G- - G+ = 0.5 -> A(0,3) = 0.5; f12+ = -1.5 -> A(1,2) = -1.5
    CHECK(a(0, 3) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(a(1, 2) == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(a(2, 1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(a(3, 0) == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(a(0, 2) == doctest::Approx(0.0));
    CHECK(a(1, 3) == doctest::Approx(0.0));
}

TEST_CASE("decoupled drift is block diagonal with detuning rotations") {
    SystemParams p = make_params(0.0, 0.0);
    p.g_a1 = p.g_a2 = 0.0;
    const Mat8 a = drift_matrix({p, DriftVariant::Full}, 0.123);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const bool same_block = (i / 2) == (j / 2);
            if (!same_block) CHECK(a(i, j) == 0.0);
        }
    CHECK(a(4, 5) == doctest::Approx(p.delta_1));
    CHECK(a(6, 7) == doctest::Approx(p.delta_2));
}

TEST_CASE("drift is periodic with period pi/omega_m") {
    const SystemParams p = make_params(1.0, 0.7);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.0, 50.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double t = u(rng);
        const Mat8 a = drift_matrix({p, DriftVariant::Full}, t);
        const Mat8 b = drift_matrix({p, DriftVariant::Full}, t + modulation_period());
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("time average of the full drift equals the RWA drift") {
    const SystemParams p = make_params(1.0, 0.7);
    const int n = 256;
    Mat8 avg = Mat8::Zero();
    for (int k = 0; k < n; ++k)
        avg += drift_matrix({p, DriftVariant::Full}, modulation_period() * k / n);
    avg /= double(n);
    const Mat8 rwa = drift_matrix({p, DriftVariant::RWA});
    CHECK((avg - rwa).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("full and RWA drift differ even with no blue drive") {
    const SystemParams p = make_params(1.0, 0.0);
    const Mat8 full = drift_matrix({p, DriftVariant::Full}, modulation_period() / 3.0);
    const Mat8 rwa = drift_matrix({p, DriftVariant::RWA});
    CHECK((full - rwa).cwiseAbs().maxCoeff() > 0.1);
}

TEST_CASE("ensembles couple to mechanics only through the cavity") {
    const SystemParams p = make_params(1.0, 0.7);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat8 a = drift_matrix({p, DriftVariant::Full}, u(rng));
        for (int i = 4; i < 8; ++i)
            for (int j = 2; j < 4; ++j) {
                CHECK(a(i, j) == 0.0);
                CHECK(a(j, i) == 0.0);
            }
    }
}

TEST_CASE("noise matrix at the production parameters") {
    SystemParams p = make_params(1.0, 0.5);
    const NoiseMatrix d = noise_matrix(p);
    CHECK(d.diagonal[0] == doctest::Approx(500.0));
    CHECK(d.diagonal[1] == doctest::Approx(500.0));
    CHECK(d.diagonal[2] == doctest::Approx(5e-6));
    CHECK(d.diagonal[3] == doctest::Approx(5e-6));
    CHECK(d.diagonal[4] == doctest::Approx(5e-4));
    CHECK(d.diagonal[7] == doctest::Approx(5e-4));
}

TEST_CASE("thermal occupation only enters the mechanical noise entries") {
    SystemParams p = make_params(1.0, 0.5);
    p.gamma_m = 1.0;
    p.n_th = 10.0;
    const NoiseMatrix d = noise_matrix(p);
    CHECK(d.diagonal[2] == doctest::Approx(10.5));
    CHECK(d.diagonal[3] == doctest::Approx(10.5));
    CHECK(d.diagonal[0] == doctest::Approx(p.kappa / 2));
}

TEST_CASE("all rates zero gives a zero noise matrix") {
    SystemParams p;
    p.kappa = 1e-300;  // kappa itself must stay positive
    p.gamma_m = p.gamma_1 = p.gamma_2 = 0.0;
    p.n_th = 0.0;
    const NoiseMatrix d = noise_matrix(p);
    CHECK(d.matrix().cwiseAbs().maxCoeff() < 1e-299);
}

TEST_CASE("Fourier blocks reconstruct the drift at arbitrary times") {
    const SystemParams p = make_params(1.0, 0.7);
    const DriftSpec spec{p, DriftVariant::Full};
    const DriftHarmonics h = drift_harmonics(spec);

    CHECK((h.a_minus - h.a_plus.conjugate()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((h.a0 - drift_matrix({p, DriftVariant::RWA})).cwiseAbs().maxCoeff() < 1e-12);

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double t = u(rng);
        CHECK((reconstruct(h, t) - drift_matrix(spec, t)).cwiseAbs().maxCoeff() < 1e-12);
    }

    const DriftHarmonics hr = drift_harmonics({p, DriftVariant::RWA});
    CHECK(hr.a_plus.cwiseAbs().maxCoeff() == 0.0);
    CHECK(hr.a_minus.cwiseAbs().maxCoeff() == 0.0);
}
