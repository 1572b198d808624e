#pragma once

#include <complex>

#include <Eigen/Dense>

#include "osq/params.hpp"

namespace osq {

// Canonical quadrature ordering used everywhere in this codebase:
//   u = (X_a, Y_a, X_b, Y_b, X_a1, Y_a1, X_a2, Y_a2)
// index   0    1    2    3    4     5     6     7
// Cavity first, mechanics second, then the two ensembles. The mechanical
// position variance is V(2,2).
inline constexpr int kIdxXb = 2;

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat8c = Eigen::Matrix<std::complex<double>, 8, 8>;
using Vec8 = Eigen::Matrix<double, 8, 1>;

enum class DriftVariant {
    Full,  ///< time-periodic drift, modulation at 2*omega_m
    RWA    ///< counter-rotating terms dropped; time independent
};

/// Generator of the 8x8 drift matrix A(t).
struct DriftSpec {
    SystemParams params;
    DriftVariant variant = DriftVariant::Full;
};

/// Drive modulation functions entering the optomechanical block:
///   f1(t) = -(G+ + G- e^{+2i omega_m t})
///   f2(t) = -(G- + G+ e^{-2i omega_m t})
///   f3(t) = -(G- + G+ e^{+2i omega_m t})
struct Modulation {
    std::complex<double> f1, f2, f3;
};
Modulation modulation_values(const SystemParams& p, double t);

/// Assembles A(t). The f functions are kept complex until the final Re/Im
/// projection so the entries stay auditable. For the RWA variant t is ignored
/// and the e^{+-2i omega_m t} factors are dropped (f1 -> -G+, f2,f3 -> -G-),
/// which equals the time average of the Full variant over one period.
Mat8 drift_matrix(const DriftSpec& spec, double t = 0.0);

/// Diagonal noise matrix
///   D = diag[kappa/2, kappa/2, gamma_m(2 n_th + 1)/2 (x2), gamma_1/2 (x2), gamma_2/2 (x2)].
struct NoiseMatrix {
    Vec8 diagonal = Vec8::Zero();
    Mat8 matrix() const { return diagonal.asDiagonal(); }
};
NoiseMatrix noise_matrix(const SystemParams& p);

/// Exact Fourier decomposition of the drift,
///   A(t) = a0 + a_plus e^{+2i omega_m t} + a_minus e^{-2i omega_m t},
/// obtained by discrete Fourier projection of drift_matrix over one period
/// (exact for this degree-one trigonometric dependence). For the RWA variant
/// a_plus = a_minus = 0.
struct DriftHarmonics {
    Mat8 a0 = Mat8::Zero();
    Mat8c a_plus = Mat8c::Zero();
    Mat8c a_minus = Mat8c::Zero();
};
DriftHarmonics drift_harmonics(const DriftSpec& spec);

} // namespace osq
