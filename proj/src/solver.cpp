#include "osq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "osq/errors.hpp"

namespace osq {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using Mat16 = Eigen::Matrix<double, 16, 16>;
using Complex = std::complex<double>;

constexpr double kStabilityMargin = 1e-9;   // multipliers must stay below 1 - margin
constexpr double kTruncationBound = 1e-3;   // |V_N| / |V_0| acceptance for harmonic balance
constexpr int kMaxHarmonics = 30;

template <typename A, typename B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    using Scalar = decltype(typename A::Scalar{} * typename B::Scalar{});
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                              a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// vec operator for the Lyapunov right-hand side: column-major, matching
/// vec(A V) = (I (x) A) vec(V) and vec(V A^T) = (A (x) I) vec(V).
template <typename M>
auto vec(const M& m) {
    using Scalar = typename M::Scalar;
    return Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>>(m.data(),
                                                                      m.size());
}

/// Exact affine propagator of dV/dt = A V + V A^T + D for frozen A over a
/// step h: V -> E V E^T + H, both blocks read off one 16x16 exponential.
struct StepMap {
    Mat8 e;
    Mat8 h;
};

StepMap van_loan_step(const Mat8& a, const Mat8& d, double h) {
    Mat16 b = Mat16::Zero();
    b.topLeftCorner<8, 8>() = -a * h;
    b.topRightCorner<8, 8>() = d * h;
    b.bottomRightCorner<8, 8>() = a.transpose() * h;
    const Mat16 eb = b.exp();
    StepMap s;
    s.e = eb.bottomRightCorner<8, 8>().transpose();
    s.h = s.e * eb.topRightCorner<8, 8>();
    s.h = 0.5 * (s.h + s.h.transpose()).eval();
    return s;
}

/// One period of the covariance dynamics as an affine map plus the operators
/// needed for period averages and for tracking the X_b variance within the
/// period.
struct PeriodMap {
    Mat8 phi = Mat8::Identity();           // monodromy
    Mat8 noise = Mat8::Zero();             // accumulated noise over one period
    MatrixXd avg_op;                       // 64x64: vec(V_avg) = avg_op vec(V0) + avg_vec
    VectorXd avg_vec;
    std::vector<Eigen::Matrix<double, 1, 8>> xb_rows;  // row 2 of each prefix map
    std::vector<double> xb_noise;                      // [2,2] of each prefix noise
    int steps = 0;

    Mat8 apply(const Mat8& v) const { return phi * v * phi.transpose() + noise; }
    Mat8 average(const Mat8& v) const {
        const VectorXd x = avg_op * vec(v) + avg_vec;
        return Eigen::Map<const Mat8>(x.data());
    }
};

PeriodMap build_period_map(const DriftSpec& spec, const Mat8& d, int steps,
                           bool with_average) {
    const double period = modulation_period();
    const double h = period / steps;

    PeriodMap map;
    map.steps = steps;
    if (with_average) {
        map.avg_op = MatrixXd::Zero(64, 64);
        map.avg_vec = VectorXd::Zero(64);
        map.xb_rows.reserve(steps);
        map.xb_noise.reserve(steps);
    }

    Mat8 phi = Mat8::Identity();
    Mat8 noise = Mat8::Zero();
    for (int k = 0; k < steps; ++k) {
        if (with_average) {
            map.avg_op += kron(phi, phi);
            map.avg_vec += vec(noise);
            map.xb_rows.push_back(phi.row(kIdxXb));
            map.xb_noise.push_back(noise(kIdxXb, kIdxXb));
        }
        const Mat8 a = drift_matrix(spec, (k + 0.5) * h);  // frozen at the midpoint
        const StepMap s = van_loan_step(a, d, h);
        phi = (s.e * phi).eval();
        noise = (s.e * noise * s.e.transpose() + s.h).eval();
    }
    if (with_average) {
        map.avg_op /= double(steps);
        map.avg_vec /= double(steps);
    }
    map.phi = phi;
    map.noise = noise;
    return map;
}

/// Deterministic ordering: modulus, then real part, then imaginary part (all
/// descending). Keeps conjugate pairs from swapping between refinements.
bool multiplier_order(const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

std::array<Complex, 8> sorted_by_modulus(Eigen::Matrix<Complex, 8, 1> ev) {
    std::array<Complex, 8> out{};
    std::sort(ev.data(), ev.data() + 8, multiplier_order);
    for (int i = 0; i < 8; ++i) out[i] = ev[i];
    return out;
}

int initial_step_count(const DriftSpec& spec) {
    const SystemParams& p = spec.params;
    // The Van Loan block carries exp(+A h); keep h * rate <= 4 so its growth
    // cannot wash out the small noise blocks in double precision.
    const double rate = std::max({p.kappa, p.gamma_m, p.gamma_1, p.gamma_2});
    const int growth_bound =
        static_cast<int>(std::ceil(modulation_period() * rate / 4.0));
    if (spec.variant == DriftVariant::RWA) return std::max(64, growth_bound);
    // initial step bounded by min(0.05/kappa, 0.05/omega_m)
    const double h0 = std::min(0.05 / p.kappa, 0.05 / SystemParams::omega_m);
    const int n = static_cast<int>(std::ceil(modulation_period() / h0));
    return std::max({64, n, growth_bound});
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

void validate_options(const SolverOptions& opts) {
    if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0) || !(opts.convergence_tol > 0.0))
        throw ValidationError("solver tolerances must be positive");
    if (opts.harmonics < 1) throw ValidationError("harmonics must be >= 1");
    if (opts.max_periods < 1) throw ValidationError("max_periods must be >= 1");
}

} // namespace

const char* to_string(SolverMethod m) {
    switch (m) {
        case SolverMethod::AlgebraicLyapunov: return "lyapunov";
        case SolverMethod::TimeIntegration: return "time-integration";
        case SolverMethod::HarmonicBalance: return "harmonic-balance";
    }
    return "?";
}

Mat8 symmetrized(const Mat8& v) { return 0.5 * (v + v.transpose()); }

std::array<double, 4> symplectic_eigenvalues(const Mat8& v) {
    Mat8 omega = Mat8::Zero();
    for (int m = 0; m < 4; ++m) {
        omega(2 * m, 2 * m + 1) = 1.0;
        omega(2 * m + 1, 2 * m) = -1.0;
    }
    const Eigen::EigenSolver<Mat8> es(omega * symmetrized(v), false);
    Eigen::Matrix<double, 8, 1> mods = es.eigenvalues().cwiseAbs();
    std::sort(mods.data(), mods.data() + 8);
    // eigenvalues of Omega V are +- i nu_m; each nu appears twice
    return {mods[0], mods[2], mods[4], mods[6]};
}

bool is_physical(const Mat8& v, double slack) {
    const auto nu = symplectic_eigenvalues(v);
    return nu[0] >= 0.5 - slack;
}

Mat8 initial_covariance(const SystemParams& p) {
    Vec8 d;
    const double mech = (2.0 * p.n_th + 1.0) / 2.0;
    d << 0.5, 0.5, mech, mech, 0.5, 0.5, 0.5, 0.5;
    return d.asDiagonal();
}

MatrixXd lyapunov_solve(const MatrixXd& a, const MatrixXd& q) {
    const Eigen::Index n = a.rows();
    const Eigen::EigenSolver<MatrixXd> es(a, false);
    std::ostringstream unstable;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (es.eigenvalues()[i].real() >= 0.0)
            unstable << " " << es.eigenvalues()[i];
    }
    if (!unstable.str().empty())
        throw InstabilityError("drift matrix is not Hurwitz; offending eigenvalues:" +
                               unstable.str());

    const MatrixXd id = MatrixXd::Identity(n, n);
    const MatrixXd op = kron(id, a) + kron(a, id);
    const Eigen::PartialPivLU<MatrixXd> lu(op);
    const VectorXd rhs = -vec(q);
    VectorXd x = lu.solve(rhs);
    x += lu.solve(rhs - op * x);  // one refinement pass
    MatrixXd v = Eigen::Map<const MatrixXd>(x.data(), n, n);
    return 0.5 * (v + v.transpose());
}

Mat8 lyapunov_steady(const Mat8& a, const NoiseMatrix& d) {
    const Mat8 dm = d.matrix();
    const Mat8 v = lyapunov_solve(a, dm);
    const double res = (a * v + v * a.transpose() + dm).cwiseAbs().maxCoeff();
    const double bound = 1e-10 * dm.cwiseAbs().maxCoeff() + 1e-30;
    if (res > bound)
        throw SolverError("Lyapunov residual " + fmt(res) + " exceeds bound " + fmt(bound));
    return v;
}

FloquetResult floquet_stability(const DriftSpec& spec) {
    FloquetResult r;
    const double period = modulation_period();

    if (spec.variant == DriftVariant::RWA) {
        const Mat8 a = drift_matrix(spec);
        const Eigen::EigenSolver<Mat8> es(a, false);
        Eigen::Matrix<Complex, 8, 1> mult;
        for (int i = 0; i < 8; ++i) mult[i] = std::exp(es.eigenvalues()[i] * period);
        r.multipliers = sorted_by_modulus(mult);
        r.max_modulus = std::abs(r.multipliers[0]);
        r.stable = r.max_modulus < 1.0 - kStabilityMargin;
        return r;
    }

    // fundamental matrix over one period with a fourth-order commutator-free
    // exponential scheme; step count doubled until the multipliers settle
    constexpr double c1 = 0.5 - 0.2886751345948129;  // sqrt(3)/6
    constexpr double c2 = 0.5 + 0.2886751345948129;
    constexpr double w1 = 0.25 + 0.2886751345948129;
    constexpr double w2 = 0.25 - 0.2886751345948129;

    auto monodromy = [&](int steps) {
        const double h = period / steps;
        Mat8 phi = Mat8::Identity();
        for (int k = 0; k < steps; ++k) {
            const double t = k * h;
            const Mat8 a1 = drift_matrix(spec, t + c1 * h);
            const Mat8 a2 = drift_matrix(spec, t + c2 * h);
            const Mat8 e1 = (h * (w1 * a1 + w2 * a2)).exp();
            const Mat8 e2 = (h * (w2 * a1 + w1 * a2)).exp();
            phi = (e2 * (e1 * phi)).eval();
        }
        return phi;
    };

    int steps = 128;
    Eigen::Matrix<Complex, 8, 1> mult =
        Eigen::EigenSolver<Mat8>(monodromy(steps), false).eigenvalues();
    std::sort(mult.data(), mult.data() + 8, multiplier_order);
    for (int round = 0; round < 8; ++round) {
        steps *= 2;
        Eigen::Matrix<Complex, 8, 1> mult2 =
            Eigen::EigenSolver<Mat8>(monodromy(steps), false).eigenvalues();
        std::sort(mult2.data(), mult2.data() + 8, multiplier_order);
        const double diff = (mult2 - mult).cwiseAbs().maxCoeff();
        mult = mult2;
        if (diff < 1e-10) break;
    }

    r.multipliers = sorted_by_modulus(mult);
    r.max_modulus = std::abs(r.multipliers[0]);
    r.stable = r.max_modulus < 1.0 - kStabilityMargin;
    return r;
}

SteadyState integrate_covariance(const DriftSpec& spec, const NoiseMatrix& d,
                                 const Mat8& v0, const SolverOptions& opts) {
    validate_options(opts);
    const FloquetResult fl = floquet_stability(spec);
    if (!fl.stable)
        throw InstabilityError("no periodic steady state: max Floquet multiplier modulus " +
                               fmt(fl.max_modulus));
    const double rho = std::min(fl.max_modulus * fl.max_modulus, 1.0 - 1e-12);
    const double geometric_amp = 1.0 / (1.0 - rho);

    const Mat8 dm = d.matrix();
    const double conv_tol = opts.convergence_tol;

    int steps = initial_step_count(spec);
    PeriodMap half = build_period_map(spec, dm, std::max(steps / 2, 1), false);
    PeriodMap map = build_period_map(spec, dm, steps, true);

    SteadyState st;
    st.method = SolverMethod::TimeIntegration;

    Mat8 v = symmetrized(v0);
    const double guard = 1e14 * (v.cwiseAbs().maxCoeff() + dm.cwiseAbs().maxCoeff() + 1.0);

    long periods_total = 0;
    constexpr int kMaxRefinements = 6;
    for (int refinement = 0;; ++refinement) {
        // The error of the stroboscopic iterate obeys e -> Phi e Phi^T, and the
        // measured change c = V_p - V_{p-1} obeys the same recursion, so the
        // remaining error solves (Phi (x) Phi - I) vec(e_prev) = vec(c). This
        // catches slow modes whose change contribution is still small.
        const Eigen::PartialPivLU<MatrixXd> err_lu(kron(map.phi, map.phi) -
                                                   MatrixXd::Identity(64, 64));

        Mat8 vbar_prev = map.average(v);
        std::vector<double> tail;
        bool converged = false;
        double last_change = 0.0;
        double err_rel = 0.0;

        while (periods_total < opts.max_periods) {
            const Mat8 v_prev = v;
            v = symmetrized(map.apply(v));
            ++periods_total;
            const Mat8 vbar = map.average(v);
            const double scale = std::max(vbar.cwiseAbs().maxCoeff(), 1e-300);
            last_change = (vbar - vbar_prev).cwiseAbs().maxCoeff() / scale;
            vbar_prev = vbar;
            tail.push_back(last_change);
            if (tail.size() > 10) tail.erase(tail.begin());
            if (scale > guard)
                throw InstabilityError("covariance iteration diverged, |V| = " + fmt(scale));
            if (last_change < conv_tol) {
                const Mat8 change = v - v_prev;
                const VectorXd e_prev = err_lu.solve(vec(change));
                const Mat8 e_now = Eigen::Map<const Mat8>(e_prev.data()) + change;
                const VectorXd e_bar = map.avg_op * vec(e_now);
                err_rel = e_bar.cwiseAbs().maxCoeff() / scale;
                if (err_rel < conv_tol) {
                    converged = true;
                    break;
                }
            }
        }
        if (!converged)
            throw NonConvergenceError("period budget " + fmt(double(opts.max_periods)) +
                                      " exhausted; last relative change " + fmt(last_change));

        // Richardson control of the step bias: compare the period map against
        // its half-resolution build at the converged state, amplified by the
        // geometric factor of the fixed-point iteration.
        const Mat8 vbar = map.average(v);
        const double defect = (map.apply(v) - half.apply(v)).cwiseAbs().maxCoeff();
        const double bias_est = defect * geometric_amp;
        const double target =
            std::max(opts.rel_tol * 100.0 * vbar.cwiseAbs().maxCoeff(), 10.0 * opts.abs_tol);
        if (bias_est <= target || spec.variant == DriftVariant::RWA ||
            refinement >= kMaxRefinements) {
            st.v_mean = symmetrized(vbar);
            st.rel_change_tail = tail;
            st.residual = err_rel;
            break;
        }
        steps *= 2;
        half = std::move(map);
        half.avg_op.resize(0, 0);
        half.avg_vec.resize(0);
        half.xb_rows.clear();
        half.xb_noise.clear();
        map = build_period_map(spec, dm, steps, true);
    }

    st.stable = true;
    st.periods_used = periods_total;

    // X_b variance extrema over the final period
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -vmin;
    for (std::size_t k = 0; k < map.xb_rows.size(); ++k) {
        const double val = map.xb_rows[k] * v * map.xb_rows[k].transpose() + map.xb_noise[k];
        vmin = std::min(vmin, val);
        vmax = std::max(vmax, val);
    }
    st.v_min_var_xb = std::min(vmin, st.v_mean(kIdxXb, kIdxXb));
    st.v_max_var_xb = std::max(vmax, st.v_mean(kIdxXb, kIdxXb));
    return st;
}

namespace {

/// Block-tridiagonal LU (Thomas elimination), retained so a
/// residual-correction pass can reuse the factorization.
class BlockTridiagLU {
public:
    // blocks: lower x_{i-1} + diag[i] x_i + upper x_{i+1} = b_i
    BlockTridiagLU(MatrixXcd lower, std::vector<MatrixXcd> diag, const MatrixXcd& upper)
        : lower_(std::move(lower)), n_(diag.size()) {
        lu_.reserve(n_);
        g_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            MatrixXcd m = std::move(diag[i]);
            if (i > 0) m -= lower_ * g_[i - 1];
            lu_.emplace_back(m);
            g_[i] = lu_[i].solve(upper);
        }
    }

    std::vector<MatrixXcd> solve(const std::vector<MatrixXcd>& rhs) const {
        std::vector<MatrixXcd> x(n_);
        x[0] = lu_[0].solve(rhs[0]);
        for (std::size_t i = 1; i < n_; ++i)
            x[i] = lu_[i].solve(rhs[i] - lower_ * x[i - 1]);
        for (std::size_t i = n_ - 1; i-- > 0;) x[i] -= g_[i] * x[i + 1];
        return x;
    }

private:
    MatrixXcd lower_;
    std::size_t n_;
    std::vector<Eigen::PartialPivLU<MatrixXcd>> lu_;
    std::vector<MatrixXcd> g_;  // inv(M_i) * upper
};

} // namespace

SteadyState harmonic_balance_steady(const DriftSpec& spec, const NoiseMatrix& d,
                                    const SolverOptions& opts) {
    validate_options(opts);

    SteadyState st;
    st.method = SolverMethod::HarmonicBalance;

    if (spec.variant == DriftVariant::RWA) {
        // no modulation: the expansion collapses to the algebraic solution
        const Mat8 v = lyapunov_steady(drift_matrix(spec), d);
        st.v_mean = v;
        st.v_min_var_xb = st.v_max_var_xb = v(kIdxXb, kIdxXb);
        st.stable = true;
        st.harmonics_used = 0;
        return st;
    }

    const FloquetResult fl = floquet_stability(spec);
    if (!fl.stable)
        throw InstabilityError("no periodic steady state: max Floquet multiplier modulus " +
                               fmt(fl.max_modulus));

    const DriftHarmonics h = drift_harmonics(spec);
    const Mat8c id = Mat8c::Identity();
    const MatrixXcd op0 = kron(id, h.a0.cast<Complex>()) + kron(h.a0.cast<Complex>(), id);
    const MatrixXcd opp = kron(id, h.a_plus) + kron(h.a_plus, id);
    const MatrixXcd opm = kron(id, h.a_minus) + kron(h.a_minus, id);
    const Mat8 dm = d.matrix();
    const VectorXcd dvec = vec(dm).cast<Complex>();

    const double d_scale = std::max(dm.cwiseAbs().maxCoeff(), 1.0);

    for (int order = opts.harmonics;; order += 2) {
        const int m = 2 * order + 1;  // harmonics -order .. order

        std::vector<MatrixXcd> diag;
        diag.reserve(m);
        std::vector<MatrixXcd> rhs(m, MatrixXcd::Zero(64, 1));
        for (int i = 0; i < m; ++i) {
            const int n = i - order;
            MatrixXcd block = op0;
            block -= Complex(0.0, 2.0 * n * SystemParams::omega_m) *
                     MatrixXcd::Identity(64, 64);
            diag.push_back(std::move(block));
            if (n == 0) rhs[i] = -dvec;
        }
        const BlockTridiagLU lu(opp, std::move(diag), opm);
        std::vector<MatrixXcd> x = lu.solve(rhs);

        // residual of the full block system, one correction pass if needed
        auto residual = [&](const std::vector<MatrixXcd>& sol) {
            std::vector<MatrixXcd> r(m);
            double worst = 0.0;
            for (int i = 0; i < m; ++i) {
                const int n = i - order;
                MatrixXcd ri = op0 * sol[i] -
                               Complex(0.0, 2.0 * n * SystemParams::omega_m) * sol[i];
                if (i > 0) ri += opp * sol[i - 1];
                if (i + 1 < m) ri += opm * sol[i + 1];
                if (n == 0) ri += dvec;
                worst = std::max(worst, ri.cwiseAbs().maxCoeff());
                r[i] = -ri;
            }
            return std::pair{worst, r};
        };

        auto [res, rvec] = residual(x);
        if (res > 1e-10 * d_scale) {
            const std::vector<MatrixXcd> dx = lu.solve(rvec);
            for (int i = 0; i < m; ++i) x[i] += dx[i];
            res = residual(x).first;
        }
        if (res > 1e-8 * d_scale)
            throw SolverError("harmonic-balance residual " + fmt(res) +
                              " did not reach solver accuracy");

        auto as_matrix = [](const MatrixXcd& col) {
            return Eigen::Map<const Mat8c>(col.data());
        };
        const Mat8c v0 = as_matrix(x[order]);
        const double v0_norm = v0.cwiseAbs().maxCoeff();
        const double vn_norm =
            std::max(as_matrix(x[0]).cwiseAbs().maxCoeff(),
                     as_matrix(x[m - 1]).cwiseAbs().maxCoeff());
        st.truncation = v0_norm > 0 ? vn_norm / v0_norm : 0.0;
        st.harmonics_used = order;
        st.residual = res;

        if (st.truncation > kTruncationBound) {
            if (order + 2 > kMaxHarmonics)
                throw SolverError("harmonic truncation did not converge by order " +
                                  std::to_string(order) + " (|V_N|/|V_0| = " +
                                  fmt(st.truncation) + ")");
            continue;  // raise the order and resolve
        }

        // reconstruction checks: harmonic pairing V_{-n} = conj(V_n), real and
        // symmetric mean
        const double pair_tol = 1e-8 * std::max(v0_norm, 1e-300);
        for (int n = 1; n <= order; ++n) {
            const Mat8c vp = as_matrix(x[order + n]);
            const Mat8c vm = as_matrix(x[order - n]);
            if ((vm - vp.conjugate()).cwiseAbs().maxCoeff() > pair_tol)
                throw SolverError("harmonic pairing V_{-n} = conj(V_n) violated at n = " +
                                  std::to_string(n));
        }
        if (v0.imag().cwiseAbs().maxCoeff() > pair_tol)
            throw SolverError("mean covariance came out complex");

        st.v_mean = symmetrized(v0.real());

        // X_b variance over one period from the reconstructed trigonometric series
        double vmin = st.v_mean(kIdxXb, kIdxXb), vmax = vmin;
        constexpr int kGrid = 2048;
        for (int g = 0; g < kGrid; ++g) {
            const double theta = 2.0 * std::numbers::pi * g / kGrid;
            double val = v0.real()(kIdxXb, kIdxXb);
            for (int n = 1; n <= order; ++n) {
                const Complex c = as_matrix(x[order + n])(kIdxXb, kIdxXb);
                val += 2.0 * (c * std::exp(Complex(0.0, n * theta))).real();
            }
            vmin = std::min(vmin, val);
            vmax = std::max(vmax, val);
        }
        st.v_min_var_xb = vmin;
        st.v_max_var_xb = vmax;
        st.stable = true;
        return st;
    }
}

SteadyState solve_steady(const DriftSpec& spec, const NoiseMatrix& d,
                         const SolverOptions& opts) {
    switch (opts.method) {
        case SolverMethod::AlgebraicLyapunov: {
            if (spec.variant != DriftVariant::RWA)
                throw ValidationError(
                    "the algebraic Lyapunov method applies to the RWA variant only");
            SteadyState st;
            st.method = SolverMethod::AlgebraicLyapunov;
            st.v_mean = lyapunov_steady(drift_matrix(spec), d);
            st.v_min_var_xb = st.v_max_var_xb = st.v_mean(kIdxXb, kIdxXb);
            st.stable = true;
            return st;
        }
        case SolverMethod::TimeIntegration:
            return integrate_covariance(spec, d, initial_covariance(spec.params), opts);
        case SolverMethod::HarmonicBalance:
            return harmonic_balance_steady(spec, d, opts);
    }
    throw ValidationError("unknown solver method");
}

} // namespace osq
