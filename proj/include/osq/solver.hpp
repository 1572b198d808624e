#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "osq/dynamics.hpp"

namespace osq {

// --- covariance-matrix helpers -------------------------------------------
//
// V_{jk} = <u_j u_k + u_k u_j>/2 in the canonical quadrature ordering.
// Vacuum variance of each quadrature is 1/2; a physical Gaussian state has
// all symplectic eigenvalues >= 1/2.

Mat8 symmetrized(const Mat8& v);

/// Symplectic eigenvalues (one per mode, ascending). For a physical state all
/// four are >= 1/2.
std::array<double, 4> symplectic_eigenvalues(const Mat8& v);

bool is_physical(const Mat8& v, double slack = 1e-8);

/// Pre-drive state: vacuum cavity and ensembles, thermal mechanics.
Mat8 initial_covariance(const SystemParams& p);

// --- steady-state solvers --------------------------------------------------

enum class SolverMethod {
    AlgebraicLyapunov,  ///< RWA only: solve A V + V A^T + D = 0 directly
    TimeIntegration,    ///< exponential integrator, period-map iteration
    HarmonicBalance     ///< Fourier expansion of the periodic steady state
};

const char* to_string(SolverMethod m);

struct SolverOptions {
    SolverMethod method = SolverMethod::HarmonicBalance;
    double rel_tol = 1e-8;          ///< step-bias target of the time integrator
    double abs_tol = 1e-10;
    double convergence_tol = 1e-7;  ///< period-averaged V, relative change
    long max_periods = 1'000'000;
    int harmonics = 6;              ///< Fourier truncation order N
};

/// Periodic steady state. v_mean is the period average; the extrema of the
/// X_b variance over one period bracket the mean.
struct SteadyState {
    Mat8 v_mean = Mat8::Zero();
    double v_min_var_xb = 0.0;
    double v_max_var_xb = 0.0;
    bool stable = false;
    long periods_used = 0;
    SolverMethod method = SolverMethod::HarmonicBalance;

    // diagnostics
    double residual = 0.0;       ///< method-specific defect, see each solver
    int harmonics_used = 0;      ///< harmonic balance only
    double truncation = 0.0;     ///< |V_N| / |V_0| at the returned order
    std::vector<double> rel_change_tail;  ///< trailing period-to-period changes
};

/// Generic solver for A X + X A^T + Q = 0 by vectorization (with one step of
/// iterative refinement). Requires A Hurwitz; throws InstabilityError listing
/// the offending eigenvalues otherwise.
Eigen::MatrixXd lyapunov_solve(const Eigen::MatrixXd& a, const Eigen::MatrixXd& q);

/// Steady covariance of the time-independent dynamics. The residual
/// |A V + V A^T + D|_max is checked against 1e-10 * |D|_max.
Mat8 lyapunov_steady(const Mat8& a, const NoiseMatrix& d);

/// Floquet multipliers: eigenvalues of the fundamental matrix integrated over
/// one modulation period. Stable iff every multiplier modulus < 1 - 1e-9
/// (marginal systems count as unstable). For the RWA variant this reduces to
/// the eigenvalue real-part test; multipliers are reported as exp(lambda T).
struct FloquetResult {
    bool stable = false;
    std::array<std::complex<double>, 8> multipliers{};
    double max_modulus = 0.0;
};
FloquetResult floquet_stability(const DriftSpec& spec);

/// Integrates dV/dt = A(t) V + V A(t)^T + D from v0 until the period-averaged
/// covariance settles. One period is composed from exponential (Van Loan)
/// steps, which are unconditionally stable in the stiff cavity rate; the
/// resulting affine period map is then iterated period by period. Convergence
/// requires the relative change of the period average to fall below
/// convergence_tol with the geometric tail (known from the Floquet radius)
/// also below it. Throws InstabilityError / NonConvergenceError.
SteadyState integrate_covariance(const DriftSpec& spec, const NoiseMatrix& d,
                                 const Mat8& v0, const SolverOptions& opts);

/// Frequency-domain steady state: expands A(t) in its two modulation
/// harmonics and V(t) = sum_n V_n e^{2 i n omega_m t}, and solves the coupled
/// block-tridiagonal system for the V_n. The truncation order is raised (in
/// steps of two) until |V_N| <= 1e-3 |V_0|; the reconstruction must come out
/// real and Hermitian-paired (V_{-n} = conj(V_n)).
SteadyState harmonic_balance_steady(const DriftSpec& spec, const NoiseMatrix& d,
                                    const SolverOptions& opts);

/// Dispatch on opts.method. AlgebraicLyapunov demands the RWA variant.
SteadyState solve_steady(const DriftSpec& spec, const NoiseMatrix& d,
                         const SolverOptions& opts);

} // namespace osq
