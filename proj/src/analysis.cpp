#include "osq/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "osq/errors.hpp"

namespace osq {

namespace {

constexpr double kCoarseStep = 0.02;
constexpr double kDenseStep = 1e-3;
constexpr double kGoldenTol = 1e-4;
constexpr double kRatioCap = 0.9999;  // open interval [0, 1)

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. fn must not throw.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Sweeps run the full time-periodic model; the algebraic method only exists
// for the RWA variant, so requesting it sweeps the RWA model instead.
DriftVariant variant_for(SolverMethod m) {
    return m == SolverMethod::AlgebraicLyapunov ? DriftVariant::RWA : DriftVariant::Full;
}

SweepRecord solve_record(const SystemParams& p, double parameter, const SolverOptions& opts) {
    SweepRecord rec;
    rec.parameter = parameter;
    rec.method = opts.method;
    rec.best_ratio = nan();
    try {
        const SteadyState st =
            solve_steady({p, variant_for(opts.method)}, noise_matrix(p), opts);
        if (!is_physical(st.v_mean))
            throw SolverError("steady state violates the uncertainty bound");
        rec.squeezing = squeezing_from_steady(st);
        rec.periods_used = st.periods_used;
    } catch (const std::exception& e) {
        rec.squeezing.stable = false;
        rec.squeezing.s_db = rec.squeezing.s_db_min = rec.squeezing.s_db_max = nan();
        rec.squeezing.var_xb = nan();
        rec.note = e.what();
    }
    return rec;
}

void require_strictly_increasing(const std::vector<double>& xs, const char* what) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw ValidationError(std::string(what) + " values must be strictly increasing");
}

} // namespace

double squeezing_db_value(double var_xb) {
    if (!(var_xb > 0.0)) {
        std::ostringstream os;
        os << "invalid covariance: X_b variance " << var_xb << " must be positive";
        throw ValidationError(os.str());
    }
    return -10.0 * std::log10(2.0 * var_xb);
}

SqueezingResult squeezing_db(const Mat8& v) {
    SqueezingResult r;
    r.var_xb = v(kIdxXb, kIdxXb);
    r.s_db = squeezing_db_value(r.var_xb);
    r.s_db_min = r.s_db_max = r.s_db;
    r.stable = true;
    return r;
}

SqueezingResult squeezing_from_steady(const SteadyState& st) {
    SqueezingResult r;
    r.var_xb = st.v_mean(kIdxXb, kIdxXb);
    r.s_db = squeezing_db_value(r.var_xb);
    // the largest variance over the period gives the least squeezing
    r.s_db_min = squeezing_db_value(st.v_max_var_xb);
    r.s_db_max = squeezing_db_value(st.v_min_var_xb);
    r.stable = st.stable;
    return r;
}

SweepResult sweep_ratio(const SystemParams& base, const std::vector<double>& ratios,
                        const SolverOptions& opts, int jobs) {
    require_strictly_increasing(ratios, "ratio");
    for (double r : ratios)
        if (r < 0.0 || r >= 1.0)
            throw ValidationError("ratios must lie in [0, 1)");

    SweepResult out;
    out.records.resize(ratios.size());
    parallel_for(ratios.size(), jobs, [&](std::size_t i) {
        SystemParams p = base;
        p.g_plus = ratios[i] * p.g_minus;
        out.records[i] = solve_record(p, ratios[i], opts);
    });
    return out;
}

SweepResult sweep_kappa(const SystemParams& base, const std::vector<double>& kappas,
                        const SolverOptions& opts, bool optimize, int jobs) {
    require_strictly_increasing(kappas, "kappa");
    for (double k : kappas)
        if (!(k > 0.0)) throw ValidationError("kappa values must be positive");

    SweepResult out;
    out.records.resize(kappas.size());
    parallel_for(kappas.size(), jobs, [&](std::size_t i) {
        SystemParams p = base;
        p.kappa = kappas[i];
        if (!optimize) {
            out.records[i] = solve_record(p, kappas[i], opts);
            return;
        }
        SweepRecord rec;
        rec.parameter = kappas[i];
        rec.method = opts.method;
        try {
            const RatioOptimum best = optimize_ratio(p, opts);
            rec.squeezing = best.squeezing;
            rec.best_ratio = best.ratio;
        } catch (const std::exception& e) {
            rec.squeezing.stable = false;
            rec.squeezing.s_db = rec.squeezing.s_db_min = rec.squeezing.s_db_max = nan();
            rec.squeezing.var_xb = nan();
            rec.best_ratio = nan();
            rec.note = e.what();
        }
        out.records[i] = rec;
    });
    return out;
}

RatioOptimum optimize_ratio(const SystemParams& base, const SolverOptions& opts) {
    struct Eval {
        double s_db = -std::numeric_limits<double>::infinity();
        SqueezingResult sq;
        bool ok = false;
    };
    const auto eval = [&](double ratio) {
        Eval e;
        SystemParams p = base;
        p.g_plus = ratio * p.g_minus;
        try {
            const SteadyState st =
                solve_steady({p, variant_for(opts.method)}, noise_matrix(p), opts);
            e.sq = squeezing_from_steady(st);
            e.s_db = e.sq.s_db;
            e.ok = true;
        } catch (const std::exception&) {
            // unstable or non-converged ratios simply do not compete
        }
        return e;
    };

    std::vector<double> grid;
    for (double r = 0.0; r < 1.0 - kCoarseStep / 2; r += kCoarseStep) grid.push_back(r);

    std::vector<Eval> evals(grid.size());
    int n_stable = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        evals[i] = eval(grid[i]);
        if (evals[i].ok) ++n_stable;
    }
    if (n_stable == 0)
        throw InstabilityError("no Floquet-stable ratio found in [0, 1)");

    std::size_t arg = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (evals[i].s_db > evals[arg].s_db) arg = i;

    // flat objective (decoupled limit): tie-break to the smallest ratio
    double lo_val = std::numeric_limits<double>::infinity();
    double hi_val = -lo_val;
    for (const auto& e : evals) {
        if (!e.ok) continue;
        lo_val = std::min(lo_val, e.s_db);
        hi_val = std::max(hi_val, e.s_db);
    }
    if (hi_val - lo_val < 1e-12) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (evals[i].ok) return {grid[i], evals[i].sq};
    }

    // unimodality check on the stable subsequence; fall back to a dense grid
    // if the coarse profile has several local maxima
    {
        std::vector<double> vals;
        for (const auto& e : evals) vals.push_back(e.s_db);
        int local_maxima = 0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            const double left = i > 0 ? vals[i - 1] : -std::numeric_limits<double>::infinity();
            const double right = i + 1 < vals.size()
                                     ? vals[i + 1]
                                     : -std::numeric_limits<double>::infinity();
            if (std::isfinite(vals[i]) && vals[i] >= left && vals[i] >= right) ++local_maxima;
        }
        if (local_maxima > 1) {
            double best_r = grid[arg];
            Eval best = evals[arg];
            for (double r = 0.0; r < kRatioCap; r += kDenseStep) {
                const Eval e = eval(r);
                if (e.s_db > best.s_db) {
                    best = e;
                    best_r = r;
                }
            }
            arg = 0;  // bracket the dense argmax below
            grid = {std::max(0.0, best_r - kDenseStep), best_r,
                    std::min(kRatioCap, best_r + kDenseStep)};
            evals = {eval(grid[0]), best, eval(grid[2])};
            arg = 1;
        }
    }

    // golden-section refinement inside the bracketing cells
    const double cell = grid.size() == 3 ? kDenseStep : kCoarseStep;
    double a = std::max(0.0, grid[arg] - cell);
    double b = std::min(kRatioCap, grid[arg] + cell);
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    Eval e1 = eval(x1), e2 = eval(x2);
    double best_r = grid[arg];
    Eval best = evals[arg];
    auto consider = [&](double r, const Eval& e) {
        if (e.s_db > best.s_db) {
            best = e;
            best_r = r;
        }
    };
    consider(x1, e1);
    consider(x2, e2);
    while (b - a > kGoldenTol) {
        if (e1.s_db > e2.s_db) {
            b = x2;
            x2 = x1;
            e2 = e1;
            x1 = b - kInvPhi * (b - a);
            e1 = eval(x1);
            consider(x1, e1);
        } else {
            a = x1;
            x1 = x2;
            e1 = e2;
            x2 = a + kInvPhi * (b - a);
            e2 = eval(x2);
            consider(x2, e2);
        }
    }
    if (!best.ok) throw InstabilityError("ratio refinement found no stable point");
    return {best_r, best.sq};
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw ValidationError("grid needs at least 2 points");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > 0.0)) throw ValidationError("log grid needs positive bounds");
    if (n < 2) throw ValidationError("grid needs at least 2 points");
    std::vector<double> out(n);
    const double llo = std::log10(lo), lhi = std::log10(hi);
    for (int i = 0; i < n; ++i) out[i] = std::pow(10.0, llo + (lhi - llo) * i / (n - 1));
    return out;
}

} // namespace osq
