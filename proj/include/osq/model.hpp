#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "osq/params.hpp"

namespace osq {

using Complex = std::complex<double>;

/// Classical two-tone response of the driven cavity: amplitudes of the
/// components oscillating at omega_c +/- omega_m, together with the ensemble
/// self-energies that dress the cavity response at those frequencies.
struct MeanField {
    Complex alpha_plus;   ///< tone at omega_c + omega_m (blue drive)
    Complex alpha_minus;  ///< tone at omega_c - omega_m (red drive)
    Complex xi_1_plus, xi_1_minus;  ///< ensemble-1 self-energy at +/- omega_m
    Complex xi_2_plus, xi_2_minus;  ///< ensemble-2 self-energy at +/- omega_m
};

/// Ensemble self-energy dressing the cavity response at the tone frequency:
///   xi = g_a^2 / (sign*omega_m - delta + i*gamma/2),  sign = +/-1.
/// Zero coupling gives exactly zero; an on-resonance undamped denominator is
/// reported once its magnitude falls below singularity_floor * omega_m.
Complex atomic_self_energy(double g_a, double delta, double gamma, int sign,
                           double singularity_floor = 1e-12);

/// Amplitudes of the driven tones from the drive strengths.
///   alpha'_s = Omega_s / (s*omega_m + kappa/2 - xi_{1,s} - xi_{2,s}),  s = +/-1.
/// Throws ValidationError when a denominator magnitude falls below
/// singularity_floor * omega_m.
MeanField mean_field(double omega_plus_drive, double omega_minus_drive,
                     const SystemParams& p, double singularity_floor = 1e-12);

/// Effective drive couplings g * |alpha'_(+/-)| with the common phase of the
/// two tones stripped. The residual phase between the tones cannot be removed
/// by a frame choice, so it is surfaced as a diagnostic and flagged when it
/// exceeds 1e-3 rad.
struct EffectiveCouplings {
    double g_plus = 0.0;
    double g_minus = 0.0;
    double relative_phase = 0.0;  ///< arg(alpha_plus) - arg(alpha_minus), wrapped to (-pi, pi]
    bool phase_warning = false;
};
EffectiveCouplings effective_couplings(double g_single_photon, const MeanField& mf);

/// Squeezed-frame description of the mechanical mode. Cooling the mode
/// B = cosh(r) b + sinh(r) b^dag at rate ~ g_eff squeezes the bare mode by r.
struct BogoliubovParams {
    double r = 0.0;      ///< squeezing parameter ln[(G- + G+)/(G- - G+)]/2
    double g_eff = 0.0;  ///< sqrt(G-^2 - G+^2)
};
BogoliubovParams bogoliubov(const SystemParams& p);

/// Classical mean-field trajectory in the frame rotating at the cavity
/// frequency. beta stays in the lab frame (it is driven by |alpha|^2, which is
/// frame independent).
struct ClassicalTrajectory {
    std::vector<double> t;
    std::vector<Complex> alpha;    ///< cavity amplitude (rotating frame)
    std::vector<Complex> beta;     ///< mechanical amplitude
    std::vector<Complex> alpha_1;  ///< ensemble-1 amplitude (rotating frame)
    std::vector<Complex> alpha_2;  ///< ensemble-2 amplitude (rotating frame)
};

struct ClassicalOdeOptions {
    double dt = 1e-3;              ///< requested step; shrunk to the explicit stability limit
    double amplitude_bound = 1e6;  ///< |alpha| beyond this is reported as classical instability
    int store_stride = 1;          ///< keep every n-th step
};

/// Integrates the nonlinear classical equations with the two-tone drive from
/// zero initial conditions. Used to check the two-tone response ansatz against
/// the full nonlinear dynamics.
ClassicalTrajectory classical_mean_field_ode(const SystemParams& p, double g_single_photon,
                                             double omega_plus_drive, double omega_minus_drive,
                                             double t_final,
                                             const ClassicalOdeOptions& opts = {});

/// Least-squares fit of c_plus e^{-i omega_m t} + c_minus e^{+i omega_m t} to
/// the trailing `window_periods` drive periods of the cavity trajectory.
/// Returns (c_plus, c_minus); these are the settled tone amplitudes once the
/// transient has decayed.
std::pair<Complex, Complex> settled_tone_amplitudes(const ClassicalTrajectory& traj,
                                                    int window_periods = 50);

} // namespace osq
