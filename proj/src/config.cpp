#include "osq/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "osq/errors.hpp"

namespace osq {

namespace {

struct Entry {
    std::string key;
    std::string value;
    int line;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    std::ostringstream os;
    os << "config line " << line << ": " << msg;
    throw ConfigError(os.str());
}

std::string trim(std::string s) {
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_space(s.front())) s.erase(s.begin());
    while (!s.empty() && is_space(s.back())) s.pop_back();
    return s;
}

double as_double(const Entry& e) {
    const std::string& v = e.value;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        fail(e.line, "key '" + e.key + "' expects a number, got '" + v + "'");
    return out;
}

long as_long(const Entry& e) {
    const std::string& v = e.value;
    long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        fail(e.line, "key '" + e.key + "' expects an integer, got '" + v + "'");
    return out;
}

bool as_bool(const Entry& e) {
    if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
    if (e.value == "false" || e.value == "0" || e.value == "no") return false;
    fail(e.line, "key '" + e.key + "' expects true/false, got '" + e.value + "'");
}

SolverMethod as_method(const Entry& e) {
    if (e.value == "lyapunov") return SolverMethod::AlgebraicLyapunov;
    if (e.value == "time-integration") return SolverMethod::TimeIntegration;
    if (e.value == "harmonic-balance") return SolverMethod::HarmonicBalance;
    fail(e.line, "unknown solver method '" + e.value +
                     "' (expected lyapunov | time-integration | harmonic-balance)");
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;

    std::istringstream is(text);
    std::string raw;
    std::string section;
    int line_no = 0;

    bool sweep_seen = false;
    SweepSpec sweep;
    bool sweep_has_param = false, sweep_has_min = false, sweep_has_max = false,
         sweep_has_count = false;

    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "system" && section != "solver" && section != "sweep" &&
                section != "output")
                fail(line_no, "unknown section [" + section + "]");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
        Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
        if (e.key.empty()) fail(line_no, "empty key");
        if (e.value.empty()) fail(line_no, "key '" + e.key + "' has no value");
        if (section.empty()) fail(line_no, "key '" + e.key + "' outside any section");

        if (section == "system") {
            auto& p = cfg.system;
            if (e.key == "kappa") p.kappa = as_double(e);
            else if (e.key == "gamma_m") p.gamma_m = as_double(e);
            else if (e.key == "gamma_1") p.gamma_1 = as_double(e);
            else if (e.key == "gamma_2") p.gamma_2 = as_double(e);
            else if (e.key == "g_a1") p.g_a1 = as_double(e);
            else if (e.key == "g_a2") p.g_a2 = as_double(e);
            else if (e.key == "delta_1") p.delta_1 = as_double(e);
            else if (e.key == "delta_2") p.delta_2 = as_double(e);
            else if (e.key == "g_minus") p.g_minus = as_double(e);
            else if (e.key == "g_plus") p.g_plus = as_double(e);
            else if (e.key == "n_th") p.n_th = as_double(e);
            else if (e.key == "coupling_mode") {
                if (e.value == "direct") cfg.physical_coupling = false;
                else if (e.value == "physical") cfg.physical_coupling = true;
                else fail(e.line, "coupling_mode must be direct or physical");
            }
            else if (e.key == "g_single_photon") cfg.g_single_photon = as_double(e);
            else if (e.key == "drive_plus") cfg.drive_plus = as_double(e);
            else if (e.key == "drive_minus") cfg.drive_minus = as_double(e);
            else fail(e.line, "unknown key '" + e.key + "' in [system]");
        } else if (section == "solver") {
            auto& s = cfg.solver;
            if (e.key == "method") s.method = as_method(e);
            else if (e.key == "rel_tol") s.rel_tol = as_double(e);
            else if (e.key == "abs_tol") s.abs_tol = as_double(e);
            else if (e.key == "convergence_tol") s.convergence_tol = as_double(e);
            else if (e.key == "max_periods") s.max_periods = as_long(e);
            else if (e.key == "harmonics") s.harmonics = static_cast<int>(as_long(e));
            else fail(e.line, "unknown key '" + e.key + "' in [solver]");
            if (s.rel_tol <= 0 || s.abs_tol <= 0 || s.convergence_tol <= 0)
                fail(e.line, "solver tolerances must be positive");
            if (s.harmonics < 1) fail(e.line, "harmonics must be >= 1");
        } else if (section == "sweep") {
            sweep_seen = true;
            if (e.key == "parameter") {
                if (e.value != "ratio" && e.value != "kappa")
                    fail(e.line, "sweep parameter must be ratio or kappa");
                sweep.parameter = e.value;
                sweep_has_param = true;
            }
            else if (e.key == "min") { sweep.min = as_double(e); sweep_has_min = true; }
            else if (e.key == "max") { sweep.max = as_double(e); sweep_has_max = true; }
            else if (e.key == "count") {
                sweep.count = static_cast<int>(as_long(e));
                sweep_has_count = true;
            }
            else if (e.key == "scale") {
                if (e.value == "linear") sweep.log_scale = false;
                else if (e.value == "log") sweep.log_scale = true;
                else fail(e.line, "scale must be linear or log");
            }
            else if (e.key == "optimize") sweep.optimize = as_bool(e);
            else fail(e.line, "unknown key '" + e.key + "' in [sweep]");
        } else if (section == "output") {
            if (e.key == "path") cfg.output_path = e.value;
            else fail(e.line, "unknown key '" + e.key + "' in [output]");
        }
    }

    if (sweep_seen) {
        if (!sweep_has_param) throw ConfigError("[sweep] is missing required key 'parameter'");
        if (!sweep_has_min) throw ConfigError("[sweep] is missing required key 'min'");
        if (!sweep_has_max) throw ConfigError("[sweep] is missing required key 'max'");
        if (!sweep_has_count) throw ConfigError("[sweep] is missing required key 'count'");
        if (sweep.count < 2) throw ConfigError("[sweep] count must be >= 2");
        if (!(sweep.max > sweep.min)) throw ConfigError("[sweep] needs max > min");
        cfg.sweep = sweep;
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return parse_config(os.str());
}

} // namespace osq
