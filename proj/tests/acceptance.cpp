// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one [PASS]/[FAIL] line per criterion. Exit code is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "osq/analysis.hpp"
#include "osq/errors.hpp"
#include "osq/model.hpp"
#include "osq/solver.hpp"

using namespace osq;

namespace {

int checks_failed = 0;

void expect(bool ok, const std::string& what) {
    std::printf("    %s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++checks_failed;
}

SystemParams caption_params(double gamma) {
    SystemParams p;
    p.kappa = 1000.0;
    p.gamma_m = 1e-5;
    p.gamma_1 = p.gamma_2 = gamma;
    p.g_a1 = p.g_a2 = 10.0;
    p.delta_1 = 2.0;
    p.delta_2 = -2.0;
    p.g_minus = 1.0;
    p.g_plus = 0.0;
    p.n_th = 0.0;
    return p;
}

struct CollectedState {
    SteadyState st;
    double d_max = 0.0;  // |D|_max of the solved system
};
std::vector<CollectedState> collected;

void collect(const SteadyState& st, const NoiseMatrix& d) {
    collected.push_back({st, d.matrix().cwiseAbs().maxCoeff()});
}

int jobs() { return 4; }

// --- criteria -------------------------------------------------------------

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    SolverOptions opts;
    const SystemParams p = caption_params(1e-3);

    std::vector<double> ratios;
    for (double r = 0.0; r <= 0.98 + 1e-12; r += 0.02) ratios.push_back(r);
    const SweepResult res = sweep_ratio(p, ratios, opts, jobs());

    double best = -1e30, at_zero = 0.0;
    for (const auto& rec : res.records) {
        if (!rec.squeezing.stable) continue;
        best = std::max(best, rec.squeezing.s_db);
        if (rec.parameter == 0.0) at_zero = rec.squeezing.s_db;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::printf("  max S_dB over the ratio grid: %.4f dB; S_dB(ratio 0) = %.4f dB; "
                "%zu points in %.1f s\n",
                best, at_zero, res.records.size(), secs);
    expect(best > 3.0, "max over G+/G- in [0, 0.98] exceeds 3 dB");
    expect(at_zero < 3.0, "no blue drive stays below 3 dB");
    expect(secs < 300.0, "50-point sweep finishes within 5 minutes");

    // keep a few of the solved states for the physicality suite
    for (double r : {0.0, 0.5, 0.9}) {
        SystemParams q = p;
        q.g_plus = r * q.g_minus;
        const NoiseMatrix d = noise_matrix(q);
        collect(harmonic_balance_steady({q, DriftVariant::Full}, d, opts), d);
    }
}

void criterion_2() {
    SolverOptions opts;
    const RatioOptimum slow = optimize_ratio(caption_params(1e-3), opts);
    const RatioOptimum fast = optimize_ratio(caption_params(1e-2), opts);
    std::printf("  optimal ratio: %.4f (gamma = 0.001) vs %.4f (gamma = 0.01)\n",
                slow.ratio, fast.ratio);
    expect(slow.ratio > fast.ratio,
           "optimal ratio grows as the ensemble decay rate shrinks");
}

void criterion_3() {
    SolverOptions opts;
    const std::vector<double> kappas = logspace(1.0, 1000.0, 25);

    SystemParams single = caption_params(1e-3);
    single.g_a1 = 0.0;
    const SweepResult s1 = sweep_kappa(single, kappas, opts, true, jobs());
    double worst_single = -1e30;
    for (const auto& rec : s1.records)
        if (rec.squeezing.stable) worst_single = std::max(worst_single, rec.squeezing.s_db);
    std::printf("  single ensemble: max optimized S_dB = %.4f dB over kappa in [1, 1000]\n",
                worst_single);
    expect(worst_single < 3.0, "single ensemble stays below 3 dB at every sampled kappa");

    const SweepResult s2 = sweep_kappa(caption_params(1e-3), kappas, opts, true, jobs());
    const auto& last = s2.records.back();
    std::printf("  two ensembles at kappa = 1000: optimized S_dB = %.4f dB (ratio %.4f)\n",
                last.squeezing.s_db, last.best_ratio);
    expect(last.squeezing.stable && last.squeezing.s_db > 3.0,
           "two ensembles exceed 3 dB at kappa = 1000");

    bool non_increasing = true;
    for (std::size_t i = 1; i < s2.records.size(); ++i) {
        const double prev = s2.records[i - 1].squeezing.s_db;
        const double cur = s2.records[i].squeezing.s_db;
        if (cur > prev) {
            if (non_increasing)
                std::printf("  increase along the curve: S(kappa=%.3f) = %.4f -> "
                            "S(kappa=%.3f) = %.4f\n",
                            s2.records[i - 1].parameter, prev, s2.records[i].parameter, cur);
            non_increasing = false;
        }
    }
    expect(non_increasing, "two-ensemble optimized curve is non-increasing in kappa");
}

void criterion_4() {
    SolverOptions opts;
    SystemParams p = caption_params(1e-3);
    p.g_a1 = p.g_a2 = 0.0;
    const RatioOptimum best = optimize_ratio(p, opts);
    std::printf("  no ensembles, kappa = 1000: optimized S_dB = %.4f dB at ratio %.4f\n",
                best.squeezing.s_db, best.ratio);
    expect(best.squeezing.s_db < -30.0, "optimized S_dB below -30 dB without ensembles");

    SystemParams q = p;
    q.g_plus = best.ratio * q.g_minus;
    const NoiseMatrix d = noise_matrix(q);
    collect(harmonic_balance_steady({q, DriftVariant::Full}, d, opts), d);
}

void criterion_5() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    SolverOptions hb_opts;
    SolverOptions ti_opts;
    ti_opts.method = SolverMethod::TimeIntegration;
    ti_opts.rel_tol = 1e-10;
    ti_opts.convergence_tol = 1e-10;

    double worst_full = 0.0, worst_rwa = 0.0;
    int n_draws = 0, n_rwa = 0;
    while (n_draws < 50) {
        SystemParams p;
        p.kappa = std::pow(10.0, -1.0 + 4.0 * u(rng));
        p.gamma_m = std::pow(10.0, -3.0 + 2.0 * u(rng));
        p.gamma_1 = std::pow(10.0, -2.5 + 1.5 * u(rng));
        p.gamma_2 = std::pow(10.0, -2.5 + 1.5 * u(rng));
        p.g_a1 = 10.0 * u(rng);
        p.g_a2 = 10.0 * u(rng);
        p.delta_1 = -3.0 + 6.0 * u(rng);
        p.delta_2 = -3.0 + 6.0 * u(rng);
        p.g_minus = 0.1 + 1.4 * u(rng);
        p.g_plus = p.g_minus * 0.85 * u(rng);
        p.n_th = (n_draws % 3 == 0) ? 2.0 : 0.0;

        const DriftSpec full{p, DriftVariant::Full};
        const FloquetResult fl = floquet_stability(full);
        if (!fl.stable || fl.max_modulus > 0.9995) continue;
        ++n_draws;

        const NoiseMatrix d = noise_matrix(p);
        const SteadyState hb = harmonic_balance_steady(full, d, hb_opts);
        const SteadyState ti = integrate_covariance(full, d, initial_covariance(p), ti_opts);
        worst_full = std::max(worst_full, (hb.v_mean - ti.v_mean).cwiseAbs().maxCoeff());
        collect(hb, d);
        collect(ti, d);

        const DriftSpec rwa{p, DriftVariant::RWA};
        const FloquetResult flr = floquet_stability(rwa);
        if (flr.stable && flr.max_modulus < 0.9995) {
            ++n_rwa;
            const Mat8 v_alg = lyapunov_steady(drift_matrix(rwa), d);
            const SteadyState hbr = harmonic_balance_steady(rwa, d, hb_opts);
            const SteadyState tir =
                integrate_covariance(rwa, d, initial_covariance(p), ti_opts);
            worst_rwa = std::max(worst_rwa, (hbr.v_mean - v_alg).cwiseAbs().maxCoeff());
            worst_rwa = std::max(worst_rwa, (tir.v_mean - v_alg).cwiseAbs().maxCoeff());
            collect(tir, d);
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("  50 stable draws in %.1f s: worst |V_hb - V_ti| = %.3e; "
                "worst RWA deviation from the algebraic solve = %.3e (%d RWA-stable)\n",
                secs, worst_full, worst_rwa, n_rwa);
    expect(worst_full < 1e-4, "harmonic balance and time integration agree to 1e-4");
    expect(worst_rwa < 1e-6, "both methods match the algebraic RWA solve to 1e-6");
    expect(secs < 600.0, "cross-validation finishes within 10 minutes");
}

void criterion_6() {
    double worst_nu = 1e30;
    bool residuals_ok = true;
    for (const auto& c : collected) {
        worst_nu = std::min(worst_nu, symplectic_eigenvalues(c.st.v_mean)[0]);
        if (c.st.method == SolverMethod::HarmonicBalance) {
            if (c.st.residual > 1e-8 * std::max(c.d_max, 1.0)) residuals_ok = false;
            if (c.st.truncation > 1e-3) residuals_ok = false;
        } else if (c.st.method == SolverMethod::TimeIntegration) {
            if (c.st.residual > 1e-7) residuals_ok = false;
        }
    }
    std::printf("  %zu converged steady states: min symplectic eigenvalue = %.10f\n",
                collected.size(), worst_nu);
    expect(!collected.empty() && worst_nu >= 0.5 - 1e-8,
           "all symplectic eigenvalues at or above the vacuum floor");
    expect(residuals_ok, "solver residuals stay below their stated bounds");

    // the algebraic route enforces its own residual bound; exercise it here
    const SystemParams p = caption_params(1e-3);
    const Mat8 a = drift_matrix({p, DriftVariant::RWA});
    const NoiseMatrix d = noise_matrix(p);
    const Mat8 v = lyapunov_steady(a, d);
    const double res = (a * v + v * a.transpose() + d.matrix()).cwiseAbs().maxCoeff();
    expect(res <= 1e-10 * d.matrix().cwiseAbs().maxCoeff(),
           "Lyapunov residual below 1e-10 |D|_max");
}

void criterion_7() {
    SystemParams p;
    p.kappa = 0.1;
    p.gamma_m = 1e-5;
    p.gamma_1 = p.gamma_2 = 1e-3;
    p.delta_1 = 2.0;
    p.delta_2 = -2.0;
    p.g_minus = 0.02;
    p.g_plus = 0.01;
    p.n_th = 0.0;

    bool all_ok = true;
    for (double ga : {0.0, 0.05}) {
        p.g_a1 = p.g_a2 = ga;
        const NoiseMatrix d = noise_matrix(p);
        const Mat8 v_rwa = lyapunov_steady(drift_matrix({p, DriftVariant::RWA}), d);
        const SteadyState full =
            harmonic_balance_steady({p, DriftVariant::Full}, d, SolverOptions{});
        collect(full, d);
        const double rel = std::abs(full.v_mean(kIdxXb, kIdxXb) - v_rwa(kIdxXb, kIdxXb)) /
                           v_rwa(kIdxXb, kIdxXb);
        std::printf("  kappa = 0.1, g_a = %.2f: RWA vs full X_b variance differ by %.3f%%\n",
                    ga, rel * 100.0);
        all_ok = all_ok && rel < 0.05;
    }
    expect(all_ok, "RWA and full model agree within 5% at kappa = 0.1");
}

void criterion_8() {
    SystemParams p;
    p.kappa = 2.0;
    p.gamma_m = 0.1;
    p.gamma_1 = p.gamma_2 = 0.2;
    p.g_a1 = p.g_a2 = 0.0;
    p.g_minus = 1e-12;
    p.g_plus = 0.0;
    p.n_th = 10.0;

    const NoiseMatrix d = noise_matrix(p);
    const SteadyState st = harmonic_balance_steady({p, DriftVariant::Full}, d,
                                                   SolverOptions{});
    collect(st, d);
    const double expect_var = (2.0 * p.n_th + 1.0) / 2.0;
    std::printf("  decoupled thermal variance: %.12f (expected %.1f)\n",
                st.v_mean(kIdxXb, kIdxXb), expect_var);
    expect(std::abs(st.v_mean(kIdxXb, kIdxXb) - expect_var) < 1e-9,
           "decoupled thermal steady state hits (2 n_th + 1)/2");
    expect(std::abs(squeezing_db_value(0.25) - 3.0103) < 1e-4,
           "variance 0.25 maps to 3.0103 dB");
}

} // namespace

int main() {
    struct Item {
        const char* name;
        void (*fn)();
    };
    const Item items[] = {
        {"criterion 1: ratio-sweep threshold reproduction", criterion_1},
        {"criterion 2: optimal-ratio ordering in the ensemble decay", criterion_2},
        {"criterion 3: kappa-sweep reproduction", criterion_3},
        {"criterion 4: no-ensemble squeezing collapse", criterion_4},
        {"criterion 5: solver cross-validation on random draws", criterion_5},
        {"criterion 6: physicality and residual bounds", criterion_6},
        {"criterion 7: resolved-sideband consistency", criterion_7},
        {"criterion 8: trivial anchors", criterion_8},
    };

    int failed = 0;
    for (const Item& item : items) {
        std::printf("%s\n", item.name);
        const int before = checks_failed;
        try {
            item.fn();
        } catch (const std::exception& e) {
            std::printf("    FAIL  unexpected exception: %s\n", e.what());
            ++checks_failed;
        }
        const bool ok = checks_failed == before;
        std::printf("[%s] %s\n\n", ok ? "PASS" : "FAIL", item.name);
        if (!ok) ++failed;
    }
    std::printf("acceptance: %d of %zu criteria passed\n",
                static_cast<int>(std::size(items)) - failed, std::size(items));
    return failed;
}
