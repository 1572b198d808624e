#include "osq/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "osq/errors.hpp"

namespace osq {

namespace {
constexpr Complex kI{0.0, 1.0};
} // namespace

Complex atomic_self_energy(double g_a, double delta, double gamma, int sign,
                           double singularity_floor) {
    if (g_a == 0.0) return {0.0, 0.0};
    const Complex den(sign * SystemParams::omega_m - delta, gamma / 2.0);
    if (std::abs(den) < singularity_floor * SystemParams::omega_m) {
        std::ostringstream os;
        os << "near-singular self-energy denominator, magnitude " << std::abs(den)
           << " below floor " << singularity_floor * SystemParams::omega_m;
        throw ValidationError(os.str());
    }
    return g_a * g_a / den;
}

MeanField mean_field(double omega_plus_drive, double omega_minus_drive,
                     const SystemParams& p, double singularity_floor) {
    const double floor_abs = singularity_floor * SystemParams::omega_m;

    MeanField mf;
    mf.xi_1_plus = atomic_self_energy(p.g_a1, p.delta_1, p.gamma_1, +1, singularity_floor);
    mf.xi_1_minus = atomic_self_energy(p.g_a1, p.delta_1, p.gamma_1, -1, singularity_floor);
    mf.xi_2_plus = atomic_self_energy(p.g_a2, p.delta_2, p.gamma_2, +1, singularity_floor);
    mf.xi_2_minus = atomic_self_energy(p.g_a2, p.delta_2, p.gamma_2, -1, singularity_floor);

    const Complex den_plus =
        Complex(SystemParams::omega_m + p.kappa / 2.0, 0.0) - mf.xi_1_plus - mf.xi_2_plus;
    const Complex den_minus =
        Complex(-SystemParams::omega_m + p.kappa / 2.0, 0.0) - mf.xi_1_minus - mf.xi_2_minus;

    for (const auto& [den, which] : {std::pair{den_plus, "+"}, std::pair{den_minus, "-"}}) {
        if (std::abs(den) < floor_abs) {
            std::ostringstream os;
            os << "near-singular mean-field denominator (" << which
               << " tone), magnitude " << std::abs(den) << " below floor " << floor_abs;
            throw ValidationError(os.str());
        }
    }

    mf.alpha_plus = omega_plus_drive / den_plus;
    mf.alpha_minus = omega_minus_drive / den_minus;
    return mf;
}

EffectiveCouplings effective_couplings(double g_single_photon, const MeanField& mf) {
    EffectiveCouplings ec;
    ec.g_plus = std::abs(g_single_photon * mf.alpha_plus);
    ec.g_minus = std::abs(g_single_photon * mf.alpha_minus);
    if (ec.g_plus > 0.0 && ec.g_minus > 0.0) {
        double d = std::arg(mf.alpha_plus) - std::arg(mf.alpha_minus);
        while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
        while (d <= -std::numbers::pi) d += 2 * std::numbers::pi;
        ec.relative_phase = d;
        ec.phase_warning = std::abs(d) > 1e-3;
    }
    return ec;
}

BogoliubovParams bogoliubov(const SystemParams& p) {
    if (p.g_plus < 0.0 || !(p.g_minus > p.g_plus)) {
        std::ostringstream os;
        os << "Bogoliubov-unstable configuration: g_minus = " << p.g_minus
           << " must exceed g_plus = " << p.g_plus;
        throw ValidationError(os.str());
    }
    BogoliubovParams b;
    b.r = 0.5 * std::log((p.g_minus + p.g_plus) / (p.g_minus - p.g_plus));
    b.g_eff = std::sqrt(p.g_minus * p.g_minus - p.g_plus * p.g_plus);
    return b;
}

ClassicalTrajectory classical_mean_field_ode(const SystemParams& p, double g_single_photon,
                                             double omega_plus_drive, double omega_minus_drive,
                                             double t_final, const ClassicalOdeOptions& opts) {
    if (!(t_final > 0.0)) throw ValidationError("t_final must be > 0");

    const double wm = SystemParams::omega_m;
    // explicit RK4 stability limit: the fastest rates are the cavity decay and
    // the collective/detuning rotations
    const double rate = p.kappa / 2.0 + p.g_a1 + p.g_a2 +
                        std::max(std::abs(p.delta_1), std::abs(p.delta_2)) + wm;
    const double dt = std::min(opts.dt, 1.0 / rate);
    const long n_steps = static_cast<long>(std::ceil(t_final / dt));

    using State = Eigen::Vector4cd;
    const auto rhs = [&](double t, const State& y) -> State {
        const Complex a = y[0], b = y[1], a1 = y[2], a2 = y[3];
        State d;
        d[0] = -(p.kappa / 2.0) * a - kI * g_single_photon * a * (b + std::conj(b)) -
               kI * p.g_a1 * a1 - kI * p.g_a2 * a2 -
               kI * (omega_plus_drive * std::exp(-kI * wm * t) +
                     omega_minus_drive * std::exp(kI * wm * t));
        d[1] = -(kI * wm + p.gamma_m / 2.0) * b - kI * g_single_photon * std::norm(a);
        d[2] = -(kI * p.delta_1 + p.gamma_1 / 2.0) * a1 - kI * p.g_a1 * a;
        d[3] = -(kI * p.delta_2 + p.gamma_2 / 2.0) * a2 - kI * p.g_a2 * a;
        return d;
    };

    ClassicalTrajectory traj;
    const int stride = std::max(1, opts.store_stride);
    traj.t.reserve(n_steps / stride + 2);

    State y = State::Zero();
    auto store = [&](double t) {
        traj.t.push_back(t);
        traj.alpha.push_back(y[0]);
        traj.beta.push_back(y[1]);
        traj.alpha_1.push_back(y[2]);
        traj.alpha_2.push_back(y[3]);
    };
    store(0.0);

    for (long k = 0; k < n_steps; ++k) {
        const double t = k * dt;
        const State k1 = rhs(t, y);
        const State k2 = rhs(t + dt / 2, y + (dt / 2) * k1);
        const State k3 = rhs(t + dt / 2, y + (dt / 2) * k2);
        const State k4 = rhs(t + dt, y + dt * k3);
        y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!y.allFinite() || std::abs(y[0]) > opts.amplitude_bound) {
            std::ostringstream os;
            os << "classical instability: |alpha| = " << std::abs(y[0])
               << " exceeded bound " << opts.amplitude_bound << " at t = " << t + dt;
            throw InstabilityError(os.str());
        }
        if ((k + 1) % stride == 0 || k + 1 == n_steps) store((k + 1) * dt);
    }
    return traj;
}

std::pair<Complex, Complex> settled_tone_amplitudes(const ClassicalTrajectory& traj,
                                                    int window_periods) {
    const double wm = SystemParams::omega_m;
    const double drive_period = 2.0 * std::numbers::pi / wm;
    if (traj.t.size() < 4) throw ValidationError("trajectory too short for tone fit");

    const double t_end = traj.t.back();
    const double t_start = t_end - window_periods * drive_period;
    std::size_t first = 0;
    while (first < traj.t.size() && traj.t[first] < t_start) ++first;
    const std::size_t n = traj.t.size() - first;
    if (n < 8) throw ValidationError("tone-fit window has too few samples");

    // least squares on the model c+ e^{-i w t} + c- e^{+i w t}
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
    for (std::size_t k = first; k < traj.t.size(); ++k) {
        const Complex ep = std::exp(-kI * wm * traj.t[k]);
        const Complex em = std::conj(ep);
        m(0, 0) += std::norm(ep);
        m(0, 1) += std::conj(ep) * em;
        m(1, 0) += std::conj(em) * ep;
        m(1, 1) += std::norm(em);
        v[0] += std::conj(ep) * traj.alpha[k];
        v[1] += std::conj(em) * traj.alpha[k];
    }
    const Eigen::Vector2cd c = m.fullPivLu().solve(v);
    return {c[0], c[1]};
}

} // namespace osq
