#pragma once

#include <numbers>

namespace osq {

/// Physical rates and couplings of the driven cavity / mechanical oscillator /
/// two-ensemble system. Everything is expressed in units of the mechanical
/// frequency omega_m, which is therefore pinned to 1 and never appears as a
/// tunable number.
struct SystemParams {
    static constexpr double omega_m = 1.0;

    double kappa = 1000.0;   ///< cavity amplitude decay rate
    double gamma_m = 1e-5;   ///< mechanical decay rate
    double gamma_1 = 1e-3;   ///< decay rate of ensemble 1
    double gamma_2 = 1e-3;   ///< decay rate of ensemble 2
    double g_a1 = 10.0;      ///< collective cavity coupling of ensemble 1
    double g_a2 = 10.0;      ///< collective cavity coupling of ensemble 2
    double delta_1 = 2.0;    ///< ensemble-1 detuning from the cavity
    double delta_2 = -2.0;   ///< ensemble-2 detuning from the cavity
    double g_minus = 1.0;    ///< effective coupling of the red-detuned drive
    double g_plus = 0.0;     ///< effective coupling of the blue-detuned drive
    double n_th = 0.0;       ///< mean thermal phonon number of the bath
};

/// Period of the drift modulation: the counter-rotating terms oscillate at
/// 2*omega_m, so everything repeats after pi/omega_m.
inline double modulation_period() {
    return std::numbers::pi / SystemParams::omega_m;
}

/// Checks every invariant and returns the parameters unchanged. Violations are
/// collected into a single ValidationError naming each offending field and its
/// bound; g_plus >= g_minus is reported as a Bogoliubov-unstable configuration.
SystemParams validate_params(const SystemParams& p);

} // namespace osq
