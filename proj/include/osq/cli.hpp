#pragma once

#include <iosfwd>
#include <string>

#include "osq/config.hpp"

namespace osq {

enum class Command {
    Steady,        ///< single steady-state solve
    SweepRatio,    ///< S_dB over a drive-ratio grid
    SweepKappa,    ///< S_dB over a cavity-decay grid
    Fig2,          ///< ratio sweep at three ensemble decay rates
    Fig3,          ///< ratio-optimized squeezing over a log kappa grid, two ensemble configs
    Stability,     ///< print Floquet multipliers
    DumpMatrices   ///< write A(0), A(T/4), A_RWA and D as numeric grids
};

/// Exit codes of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitInstability = 3;

/// Executes one command: validates the configuration, runs the solves
/// (sweeps may fan out over `jobs` threads) and writes the CSV / text outputs.
/// Human-readable progress goes to `out`; fatal failures print one
/// machine-readable "ERROR code=... kind=... message=..." line to `err` and
/// map to the exit codes above.
int run_command(Command cmd, RunConfig cfg, int jobs, std::ostream& out, std::ostream& err);

/// Writes sweep records as CSV: '#'-prefixed key=value header capturing the
/// full configuration, then a header row and one row per record. Numbers are
/// emitted with enough digits to round-trip exactly.
void write_sweep_csv(std::ostream& os, const RunConfig& cfg, const std::string& command,
                     const SweepResult& sweep, const std::string& curve_label = "",
                     bool with_best_ratio = false, bool header = true);

} // namespace osq
