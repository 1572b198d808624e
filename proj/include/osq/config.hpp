#pragma once

#include <optional>
#include <string>

#include "osq/analysis.hpp"

namespace osq {

/// Sweep request from the [sweep] section.
struct SweepSpec {
    std::string parameter;  ///< "ratio" or "kappa"
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    bool log_scale = false;
    bool optimize = false;
};

/// Full run description assembled from a config document. Frequencies are in
/// units of omega_m throughout. Couplings are taken either directly
/// (g_minus/g_plus) or, in physical mode, derived from the single-photon
/// coupling and the two drive amplitudes via the mean-field response.
struct RunConfig {
    SystemParams system;
    SolverOptions solver;
    std::optional<SweepSpec> sweep;
    std::string output_path = "out.csv";

    bool physical_coupling = false;
    double g_single_photon = 0.0;
    double drive_plus = 0.0;
    double drive_minus = 0.0;
};

/// Parses the flat sectioned key/value format:
///
///   [system]
///   kappa = 1000
///   ...
///   [solver]
///   method = harmonic-balance
///   [sweep]
///   parameter = ratio
///   min = 0
///   max = 0.98
///   count = 50
///   [output]
///   path = fig.csv
///
/// '#' starts a comment. Omitted solver fields get their defaults. Unknown
/// keys, type mismatches and incomplete sections raise ConfigError with the
/// line number and key name.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::string& path);

} // namespace osq
