#include "osq/params.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "osq/errors.hpp"

namespace osq {

SystemParams validate_params(const SystemParams& p) {
    std::vector<std::string> bad;

    auto finite = [&](double v, const char* name) {
        if (!std::isfinite(v)) {
            bad.push_back(std::string(name) + " must be finite");
            return false;
        }
        return true;
    };

    if (finite(p.kappa, "kappa") && !(p.kappa > 0.0))
        bad.push_back("kappa must be > 0");
    if (finite(p.gamma_m, "gamma_m") && p.gamma_m < 0.0)
        bad.push_back("gamma_m must be >= 0");
    if (finite(p.gamma_1, "gamma_1") && p.gamma_1 < 0.0)
        bad.push_back("gamma_1 must be >= 0");
    if (finite(p.gamma_2, "gamma_2") && p.gamma_2 < 0.0)
        bad.push_back("gamma_2 must be >= 0");
    if (finite(p.n_th, "n_th") && p.n_th < 0.0)
        bad.push_back("n_th must be >= 0 (negative thermal occupation)");
    finite(p.g_a1, "g_a1");
    finite(p.g_a2, "g_a2");
    finite(p.delta_1, "delta_1");
    finite(p.delta_2, "delta_2");

    const bool gp_ok = finite(p.g_plus, "g_plus");
    const bool gm_ok = finite(p.g_minus, "g_minus");
    if (gp_ok && p.g_plus < 0.0)
        bad.push_back("g_plus must be >= 0");
    if (gp_ok && gm_ok && !(p.g_minus > p.g_plus))
        bad.push_back("g_plus >= g_minus: Bogoliubov-unstable configuration "
                      "(requires g_minus > g_plus)");

    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid parameters:";
        for (const auto& b : bad) os << "\n  - " << b;
        throw ValidationError(os.str());
    }
    return p;
}

} // namespace osq
