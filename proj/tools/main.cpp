#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "osq/cli.hpp"
#include "osq/errors.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string output;
    std::string method;
    int harmonics = 0;
    int jobs = 1;
    long seed = 0;  // accepted for interface stability; the pipeline is deterministic
};

void add_common(CLI::App* sub, CommonArgs& args, bool with_sweep_defaults) {
    sub->add_option("config", args.config_path, "config file (flat [section] key=value)")
        ->check(CLI::ExistingFile);
    sub->add_option("--output", args.output, "output file path");
    sub->add_option("--method", args.method,
                    "solver method: lyapunov | time-integration | harmonic-balance");
    sub->add_option("--harmonics", args.harmonics, "Fourier truncation order");
    sub->add_option("--jobs", args.jobs, "parallel sweep workers")->check(CLI::PositiveNumber);
    sub->add_option("--seed", args.seed, "ignored; results are deterministic");
    (void)with_sweep_defaults;
}

int apply_and_run(osq::Command cmd, const CommonArgs& args) {
    osq::RunConfig cfg;
    try {
        if (!args.config_path.empty()) cfg = osq::load_config(args.config_path);
        if (!args.output.empty()) cfg.output_path = args.output;
        if (args.harmonics > 0) cfg.solver.harmonics = args.harmonics;
        if (!args.method.empty()) {
            if (args.method == "lyapunov")
                cfg.solver.method = osq::SolverMethod::AlgebraicLyapunov;
            else if (args.method == "time-integration")
                cfg.solver.method = osq::SolverMethod::TimeIntegration;
            else if (args.method == "harmonic-balance")
                cfg.solver.method = osq::SolverMethod::HarmonicBalance;
            else
                throw osq::ValidationError("unknown --method '" + args.method + "'");
        }
    } catch (const std::exception& e) {
        std::cerr << "ERROR code=" << osq::kExitValidation << " kind=validation message=\""
                  << e.what() << "\"\n";
        return osq::kExitValidation;
    }
    return osq::run_command(cmd, cfg, args.jobs, std::cout, std::cerr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state mechanical squeezing of a two-ensemble optomechanical system"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        osq::Command cmd;
    };
    const Sub subs[] = {
        {"steady", "solve one steady state and report the squeezing", osq::Command::Steady},
        {"sweep-ratio", "squeezing over a grid of drive ratios g_plus/g_minus",
         osq::Command::SweepRatio},
        {"sweep-kappa", "squeezing over a grid of cavity decay rates",
         osq::Command::SweepKappa},
        {"fig2", "ratio sweep at three ensemble decay rates (0.001, 0.005, 0.01)",
         osq::Command::Fig2},
        {"fig3", "ratio-optimized squeezing vs cavity decay, one- and two-ensemble setups",
         osq::Command::Fig3},
        {"stability", "print the Floquet multipliers", osq::Command::Stability},
        {"dump-matrices", "write A(0), A(T/4), A_RWA and D as numeric grids",
         osq::Command::DumpMatrices},
    };

    CommonArgs args[std::size(subs)];
    for (std::size_t i = 0; i < std::size(subs); ++i) {
        CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].help);
        add_common(sub, args[i], true);
    }

    CLI11_PARSE(app, argc, argv);

    for (std::size_t i = 0; i < std::size(subs); ++i)
        if (app.got_subcommand(subs[i].name)) return apply_and_run(subs[i].cmd, args[i]);
    return osq::kExitValidation;
}
