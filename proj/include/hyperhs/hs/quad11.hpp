#pragma once

#include "hyperhs/opq/bsym.hpp"

#include <complex>
#include <cstddef>

namespace hyperhs::hs {

// Tensor grid in (tau, t), where xi = rho e^-tau, eta = rho e^tau and
// rho = t / sqrt(2 + 4 eps sinh^2 tau) puts the Gaussian rho factor at unit
// width for every tau.
struct Quad11Grid {
    double t_max = 8.0;
    std::size_t t_panels = 16;        // over [-t_max, t_max]
    double tau_extra = 18.0;          // |tau| <= tau_extra + log(1/eps)/2
    double tau_panel_width = 0.5;
    double min_nodes_per_wavelength = 4.0;
    // Raise t_panels until every oscillation on the grid gets this many nodes.
    bool auto_refine = true;
    double refine_nodes_per_wavelength = 8.0;
};

struct Quad11Result {
    std::complex<double> value;       // THM-convention integral
    std::complex<double> normalized;  // C11 * value, tends to exp(-Tr A^2)
    double eps;
    bool ablated;
    std::size_t nodes;
    std::size_t t_panels;             // after refinement
    double tau_max;
    double nodes_per_wavelength;      // worst resolved oscillation on the t grid
};

// sum_sigma sgn(sigma) int_{D_sigma} exp(-Tr R^2 - 2i Tr AR) chi_eps(R) |dR|
// at (p,q) = (1,1). The lambda integral is Gaussian and done exactly. With
// ablate_sign both domains enter with +1. Throws GridTooCoarse when the t grid
// (after refinement, if enabled) puts fewer than min_nodes_per_wavelength nodes
// on the fastest oscillation.
Quad11Result quad_verify_11(const opq::SourceMatrix& a, double eps, const Quad11Grid& grid = {},
                            bool ablate_sign = false);

}  // namespace hyperhs::hs
