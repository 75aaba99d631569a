#pragma once

#include "hyperhs/goe/goe.hpp"
#include "hyperhs/goe/spectral.hpp"

#include <complex>

namespace hyperhs::goe {

struct SigmaRepOptions {
    // lambda and rho are truncated at radius * sigma with sigma = b / sqrt(2N),
    // the width of the Gaussian factor exp(-(N/2b^2) Tr R^2) per coordinate.
    double radius = 12.0;
    double tau_max = 50.0;
    double rel_tol = 1e-9;
    unsigned max_depth = 14;
    bool ablate_sign = false;  // both domains with +1
};

struct SigmaRepResult {
    std::complex<double> value;  // without the constant C'_{1,1}
    double error_estimate;
};

// sum_sigma sgn(sigma) int_{D_sigma} exp(-(N/2b^2) Tr R^2) det(z - R)^{-N/2} |dR|
// for p = q = 1 in coordinates (lambda, rho, tau): xi = rho e^-tau,
// eta = rho e^tau, det(z - R) = (z1 - lambda)(z2 - lambda) - rho^2
// + (z1 - z2) rho cosh(tau). Requires N even and N >= 2(p+q) + 2.
SigmaRepResult sigma_rep_F11(const SpectralArgs& args, const GOEConfig& cfg, const SigmaRepOptions& opt = {});

}  // namespace hyperhs::goe
