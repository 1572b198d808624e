#include "osq/dynamics.hpp"

#include <cmath>

#include "osq/errors.hpp"

namespace osq {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

Modulation modulation_values(const SystemParams& p, double t) {
    const std::complex<double> e = std::exp(2.0 * kI * SystemParams::omega_m * t);
    Modulation f;
    f.f1 = -(p.g_plus + p.g_minus * e);
    f.f2 = -(p.g_minus + p.g_plus / e);
    f.f3 = -(p.g_minus + p.g_plus * e);
    return f;
}

Mat8 drift_matrix(const DriftSpec& spec, double t) {
    const SystemParams& p = spec.params;

    std::complex<double> f1, f2, f3;
    if (spec.variant == DriftVariant::RWA) {
        f1 = -p.g_plus;
        f2 = -p.g_minus;
        f3 = -p.g_minus;
    } else {
        const Modulation f = modulation_values(p, t);
        f1 = f.f1;
        f2 = f.f2;
        f3 = f.f3;
    }
    const std::complex<double> f12p = f1 + f2, f12m = f1 - f2;
    const std::complex<double> f13p = f1 + f3, f13m = f1 - f3;

    Mat8 a = Mat8::Zero();
    a(0, 0) = -p.kappa / 2;
    a(0, 2) = -f12p.imag();
    a(0, 3) = f12m.real();
    a(0, 5) = p.g_a1;
    a(0, 7) = p.g_a2;

    a(1, 1) = -p.kappa / 2;
    a(1, 2) = f12p.real();
    a(1, 3) = f12m.imag();
    a(1, 4) = -p.g_a1;
    a(1, 6) = -p.g_a2;

    a(2, 0) = -f13p.imag();
    a(2, 1) = f13m.real();
    a(2, 2) = -p.gamma_m / 2;

    a(3, 0) = f13p.real();
    a(3, 1) = f13m.imag();
    a(3, 3) = -p.gamma_m / 2;

    a(4, 1) = p.g_a1;
    a(4, 4) = -p.gamma_1 / 2;
    a(4, 5) = p.delta_1;

    a(5, 0) = -p.g_a1;
    a(5, 4) = -p.delta_1;
    a(5, 5) = -p.gamma_1 / 2;

    a(6, 1) = p.g_a2;
    a(6, 6) = -p.gamma_2 / 2;
    a(6, 7) = p.delta_2;

    a(7, 0) = -p.g_a2;
    a(7, 6) = -p.delta_2;
    a(7, 7) = -p.gamma_2 / 2;

    return a;
}

NoiseMatrix noise_matrix(const SystemParams& p) {
    NoiseMatrix d;
    const double mech = p.gamma_m * (2.0 * p.n_th + 1.0) / 2.0;
    d.diagonal << p.kappa / 2, p.kappa / 2, mech, mech,
                  p.gamma_1 / 2, p.gamma_1 / 2, p.gamma_2 / 2, p.gamma_2 / 2;
    return d;
}

DriftHarmonics drift_harmonics(const DriftSpec& spec) {
    DriftHarmonics h;
    if (spec.variant == DriftVariant::RWA) {
        h.a0 = drift_matrix(spec);
        return h;
    }
    // Discrete Fourier projection over one period. 16 samples are exact for
    // the degree-one trigonometric time dependence of A(t).
    constexpr int kSamples = 16;
    const double period = modulation_period();
    Mat8c a0 = Mat8c::Zero(), a1 = Mat8c::Zero();
    for (int m = 0; m < kSamples; ++m) {
        const double t = period * m / kSamples;
        const Mat8 at = drift_matrix(spec, t);
        const std::complex<double> w =
            std::exp(-2.0 * kI * SystemParams::omega_m * t);
        a0 += at;
        a1 += at * w;
    }
    a0 /= double(kSamples);
    a1 /= double(kSamples);
    if (a0.imag().cwiseAbs().maxCoeff() > 1e-12)
        throw SolverError("drift Fourier projection produced a complex mean block");
    h.a0 = a0.real();
    h.a_plus = a1;
    h.a_minus = a1.conjugate();
    return h;
}

} // namespace osq
