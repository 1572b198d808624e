#pragma once

#include <string>
#include <vector>

#include "osq/solver.hpp"

namespace osq {

/// Mechanical squeezing relative to the zero-point level:
///   S_dB = -10 log10(2 <dX_b^2>),  <dX^2>_zpf = 1/2.
/// s_db is computed from the period-averaged variance; s_db_min/max follow
/// from the period extrema (larger variance -> smaller S).
struct SqueezingResult {
    double s_db = 0.0;
    double var_xb = 0.0;
    double s_db_min = 0.0;
    double s_db_max = 0.0;
    bool stable = false;
};

/// dB value for a single variance; throws ValidationError for var <= 0.
double squeezing_db_value(double var_xb);

/// Squeezing of a covariance matrix (no period information: min = max = mean).
SqueezingResult squeezing_db(const Mat8& v);

/// Squeezing of a periodic steady state, period extrema included.
SqueezingResult squeezing_from_steady(const SteadyState& st);

struct SweepRecord {
    double parameter = 0.0;
    SqueezingResult squeezing;
    SolverMethod method = SolverMethod::HarmonicBalance;
    long periods_used = 0;
    double best_ratio = 0.0;  ///< only meaningful for optimized kappa sweeps
    std::string note;         ///< empty on success, error text otherwise
};

/// Ordered sweep records; parameter values are strictly increasing and every
/// record carries a stability flag (failed points are recorded, not fatal).
struct SweepResult {
    std::vector<SweepRecord> records;
};

/// Solves the Full model at g_plus = ratio * g_minus for every ratio.
/// Unstable/failed points get stable = false and NaN squeezing.
SweepResult sweep_ratio(const SystemParams& base, const std::vector<double>& ratios,
                        const SolverOptions& opts, int jobs = 1);

/// Sweeps the cavity decay rate. With optimize set, each point reports the
/// best squeezing over the drive ratio; otherwise the base ratio is used.
SweepResult sweep_kappa(const SystemParams& base, const std::vector<double>& kappas,
                        const SolverOptions& opts, bool optimize, int jobs = 1);

struct RatioOptimum {
    double ratio = 0.0;
    SqueezingResult squeezing;
};

/// Maximizes S_dB over the drive ratio in [0, 1): coarse grid (step 0.02),
/// then golden-section refinement to 1e-4 inside the bracketing cells,
/// restricted to Floquet-stable points. Refinement assumes the coarse grid is
/// unimodal; if it is not, a dense grid (step 1e-3) is scanned first. Flat
/// objectives tie-break to the smallest ratio. Throws InstabilityError when no
/// stable ratio exists.
RatioOptimum optimize_ratio(const SystemParams& base, const SolverOptions& opts);

/// Grid helpers for sweeps.
std::vector<double> linspace(double lo, double hi, int n);
std::vector<double> logspace(double lo, double hi, int n);

} // namespace osq
