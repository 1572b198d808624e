#include "osq/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include "osq/errors.hpp"
#include "osq/model.hpp"

namespace osq {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

void write_config_header(std::ostream& os, const RunConfig& cfg, const std::string& command) {
    const SystemParams& p = cfg.system;
    os << "# command=" << command << "\n";
    os << "# kappa=" << num(p.kappa) << "\n";
    os << "# gamma_m=" << num(p.gamma_m) << "\n";
    os << "# gamma_1=" << num(p.gamma_1) << "\n";
    os << "# gamma_2=" << num(p.gamma_2) << "\n";
    os << "# g_a1=" << num(p.g_a1) << "\n";
    os << "# g_a2=" << num(p.g_a2) << "\n";
    os << "# delta_1=" << num(p.delta_1) << "\n";
    os << "# delta_2=" << num(p.delta_2) << "\n";
    os << "# g_minus=" << num(p.g_minus) << "\n";
    os << "# g_plus=" << num(p.g_plus) << "\n";
    os << "# n_th=" << num(p.n_th) << "\n";
    os << "# method=" << to_string(cfg.solver.method) << "\n";
    os << "# rel_tol=" << num(cfg.solver.rel_tol) << "\n";
    os << "# abs_tol=" << num(cfg.solver.abs_tol) << "\n";
    os << "# convergence_tol=" << num(cfg.solver.convergence_tol) << "\n";
    os << "# max_periods=" << cfg.solver.max_periods << "\n";
    os << "# harmonics=" << cfg.solver.harmonics << "\n";
    if (cfg.sweep) {
        os << "# sweep.parameter=" << cfg.sweep->parameter << "\n";
        os << "# sweep.min=" << num(cfg.sweep->min) << "\n";
        os << "# sweep.max=" << num(cfg.sweep->max) << "\n";
        os << "# sweep.count=" << cfg.sweep->count << "\n";
        os << "# sweep.scale=" << (cfg.sweep->log_scale ? "log" : "linear") << "\n";
        os << "# sweep.optimize=" << (cfg.sweep->optimize ? "true" : "false") << "\n";
    }
    os << "# output=" << cfg.output_path << "\n";
}

} // namespace

void write_sweep_csv(std::ostream& os, const RunConfig& cfg, const std::string& command,
                     const SweepResult& sweep, const std::string& curve_label,
                     bool with_best_ratio, bool header) {
    if (header) {
        write_config_header(os, cfg, command);
        if (!curve_label.empty()) os << "curve,";
        os << "parameter,s_db,s_db_min,s_db_max,var_xb,stable,method,periods_used";
        if (with_best_ratio) os << ",best_ratio";
        os << "\n";
    }
    for (const auto& rec : sweep.records) {
        if (!curve_label.empty()) os << curve_label << ",";
        os << num(rec.parameter) << "," << num(rec.squeezing.s_db) << ","
           << num(rec.squeezing.s_db_min) << "," << num(rec.squeezing.s_db_max) << ","
           << num(rec.squeezing.var_xb) << "," << (rec.squeezing.stable ? 1 : 0) << ","
           << to_string(rec.method) << "," << rec.periods_used;
        if (with_best_ratio) os << "," << num(rec.best_ratio);
        os << "\n";
    }
}

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot open output file '" + path + "'");
    return f;
}

/// Resolves the physical coupling mode into effective g_minus/g_plus.
void resolve_couplings(RunConfig& cfg, std::ostream& err) {
    if (!cfg.physical_coupling) return;
    const MeanField mf = mean_field(cfg.drive_plus, cfg.drive_minus, cfg.system);
    const EffectiveCouplings ec = effective_couplings(cfg.g_single_photon, mf);
    if (ec.phase_warning)
        err << "warning: relative tone phase " << ec.relative_phase
            << " rad exceeds 1e-3; couplings taken as the tone magnitudes\n";
    cfg.system.g_minus = ec.g_minus;
    cfg.system.g_plus = ec.g_plus;
}

std::vector<double> sweep_grid(const SweepSpec& s) {
    return s.log_scale ? logspace(s.min, s.max, s.count) : linspace(s.min, s.max, s.count);
}

// The algebraic method is defined on the time-independent variant only.
DriftVariant variant_for(SolverMethod m) {
    return m == SolverMethod::AlgebraicLyapunov ? DriftVariant::RWA : DriftVariant::Full;
}

int do_steady(const RunConfig& cfg, int /*jobs*/, std::ostream& out) {
    const SystemParams p = validate_params(cfg.system);
    const SteadyState st =
        solve_steady({p, variant_for(cfg.solver.method)}, noise_matrix(p), cfg.solver);
    const SqueezingResult sq = squeezing_from_steady(st);

    SweepResult res;
    SweepRecord rec;
    rec.parameter = p.g_minus > 0 ? p.g_plus / p.g_minus : 0.0;
    rec.squeezing = sq;
    rec.method = st.method;
    rec.periods_used = st.periods_used;
    rec.best_ratio = std::numeric_limits<double>::quiet_NaN();
    res.records.push_back(rec);

    auto f = open_output(cfg.output_path);
    write_sweep_csv(f, cfg, "steady", res);
    out << "steady: s_db=" << num(sq.s_db) << " var_xb=" << num(sq.var_xb)
        << " method=" << to_string(st.method) << " periods=" << st.periods_used << "\n";
    return kExitOk;
}

int do_sweep_ratio(const RunConfig& cfg, int jobs, std::ostream& out) {
    const SystemParams p = validate_params(cfg.system);
    SweepSpec spec = cfg.sweep.value_or(SweepSpec{"ratio", 0.0, 0.98, 50, false, false});
    if (spec.parameter != "ratio")
        throw ValidationError("sweep-ratio needs [sweep] parameter = ratio");
    const SweepResult res = sweep_ratio(p, sweep_grid(spec), cfg.solver, jobs);
    RunConfig echo = cfg;
    echo.sweep = spec;
    auto f = open_output(cfg.output_path);
    write_sweep_csv(f, echo, "sweep-ratio", res);
    out << "sweep-ratio: " << res.records.size() << " points -> " << cfg.output_path << "\n";
    return kExitOk;
}

int do_sweep_kappa(const RunConfig& cfg, int jobs, std::ostream& out) {
    const SystemParams p = validate_params(cfg.system);
    SweepSpec spec = cfg.sweep.value_or(SweepSpec{"kappa", 1.0, 1000.0, 25, true, false});
    if (spec.parameter != "kappa")
        throw ValidationError("sweep-kappa needs [sweep] parameter = kappa");
    const SweepResult res = sweep_kappa(p, sweep_grid(spec), cfg.solver, spec.optimize, jobs);
    RunConfig echo = cfg;
    echo.sweep = spec;
    auto f = open_output(cfg.output_path);
    write_sweep_csv(f, echo, "sweep-kappa", res, "", spec.optimize);
    out << "sweep-kappa: " << res.records.size() << " points -> " << cfg.output_path << "\n";
    return kExitOk;
}

int do_fig2(const RunConfig& cfg, int jobs, std::ostream& out) {
    const SystemParams base = validate_params(cfg.system);
    SweepSpec spec = cfg.sweep.value_or(SweepSpec{"ratio", 0.0, 0.98, 50, false, false});
    if (spec.parameter != "ratio")
        throw ValidationError("fig2 sweeps the drive ratio; [sweep] parameter must be ratio");
    const std::vector<double> grid = sweep_grid(spec);

    auto f = open_output(cfg.output_path);
    bool first = true;
    for (double gamma : {1e-3, 5e-3, 1e-2}) {
        SystemParams p = base;
        p.gamma_1 = p.gamma_2 = gamma;
        const SweepResult res = sweep_ratio(p, grid, cfg.solver, jobs);
        RunConfig echo = cfg;
        echo.system = p;
        echo.sweep = spec;
        std::ostringstream label;
        label << "gamma=" << gamma;
        write_sweep_csv(f, echo, "fig2", res, label.str(), false, first);
        first = false;
        out << "fig2 " << label.str() << ": " << res.records.size() << " points\n";
    }
    out << "fig2 -> " << cfg.output_path << "\n";
    return kExitOk;
}

int do_fig3(const RunConfig& cfg, int jobs, std::ostream& out) {
    const SystemParams base = validate_params(cfg.system);
    SweepSpec spec = cfg.sweep.value_or(SweepSpec{"kappa", 1.0, 1000.0, 25, true, true});
    if (spec.parameter != "kappa")
        throw ValidationError("fig3 sweeps kappa; [sweep] parameter must be kappa");
    const std::vector<double> grid = sweep_grid(spec);

    struct Curve {
        const char* label;
        double g_a1, g_a2;
    };
    auto f = open_output(cfg.output_path);
    bool first = true;
    for (const Curve& c : {Curve{"single_ensemble", 0.0, 10.0},
                           Curve{"two_ensembles", 10.0, 10.0}}) {
        SystemParams p = base;
        p.g_a1 = c.g_a1;
        p.g_a2 = c.g_a2;
        const SweepResult res = sweep_kappa(p, grid, cfg.solver, true, jobs);
        RunConfig echo = cfg;
        echo.system = p;
        echo.sweep = spec;
        write_sweep_csv(f, echo, "fig3", res, c.label, true, first);
        first = false;
        out << "fig3 " << c.label << ": " << res.records.size() << " points\n";
    }
    out << "fig3 -> " << cfg.output_path << "\n";
    return kExitOk;
}

int do_stability(const RunConfig& cfg, std::ostream& out) {
    const SystemParams p = validate_params(cfg.system);
    const FloquetResult fl = floquet_stability({p, DriftVariant::Full});
    out << "stable: " << (fl.stable ? "yes" : "no") << "\n";
    out << "max_modulus: " << num(fl.max_modulus) << "\n";
    for (const auto& m : fl.multipliers)
        out << "multiplier: " << num(m.real()) << (m.imag() < 0 ? " - " : " + ")
            << num(std::abs(m.imag())) << "i  |.|=" << num(std::abs(m)) << "\n";
    return kExitOk;
}

void write_grid(std::ostream& os, const std::string& name, const Mat8& m) {
    os << "# " << name << "\n";
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) os << (j ? " " : "") << num(m(i, j));
        os << "\n";
    }
}

int do_dump(const RunConfig& cfg, std::ostream& out) {
    const SystemParams p = validate_params(cfg.system);
    auto f = open_output(cfg.output_path);
    const DriftSpec full{p, DriftVariant::Full};
    const double period = modulation_period();
    write_grid(f, "A(0)", drift_matrix(full, 0.0));
    write_grid(f, "A(T/4)", drift_matrix(full, period / 4.0));
    write_grid(f, "A_RWA", drift_matrix({p, DriftVariant::RWA}));
    write_grid(f, "D", noise_matrix(p).matrix());
    out << "dump-matrices -> " << cfg.output_path << "\n";
    return kExitOk;
}

} // namespace

int run_command(Command cmd, RunConfig cfg, int jobs, std::ostream& out, std::ostream& err) {
    try {
        resolve_couplings(cfg, err);
        switch (cmd) {
            case Command::Steady: return do_steady(cfg, jobs, out);
            case Command::SweepRatio: return do_sweep_ratio(cfg, jobs, out);
            case Command::SweepKappa: return do_sweep_kappa(cfg, jobs, out);
            case Command::Fig2: return do_fig2(cfg, jobs, out);
            case Command::Fig3: return do_fig3(cfg, jobs, out);
            case Command::Stability: return do_stability(cfg, out);
            case Command::DumpMatrices: return do_dump(cfg, out);
        }
        throw ValidationError("unknown command");
    } catch (const InstabilityError& e) {
        err << "ERROR code=" << kExitInstability << " kind=instability message=\"" << e.what()
            << "\"\n";
        return kExitInstability;
    } catch (const NonConvergenceError& e) {
        err << "ERROR code=" << kExitNonConvergence << " kind=non-convergence message=\""
            << e.what() << "\"\n";
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        err << "ERROR code=" << kExitValidation << " kind=validation message=\"" << e.what()
            << "\"\n";
        return kExitValidation;
    }
}

} // namespace osq
