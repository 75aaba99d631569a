#pragma once

#include "hyperhs/opq/bsym.hpp"

#include <complex>
#include <string>
#include <vector>

namespace hyperhs::hs {

// int_R exp(-rho^2 - 2i rho beta) rho d rho = -i sqrt(pi) beta exp(-beta^2)
std::complex<double> gaussian_rho_integral(double beta);

// int_R beta exp(-beta^2) d tau with beta = (b0 e^tau + b1 e^-tau) / 2,
// equal to sqrt(pi) exp(-b0 b1). Requires b0, b1 > 0.
double gaussian_tau_integral(double b0, double b1);

// Light-cone evaluation of int_D exp(-1/2 Tr R^2 - i Tr AR) |dR| for p = q = 1,
// with the rho integral taken innermost.
struct ClosedFormTrace {
    double b0;
    double b1;
    std::complex<double> lambda_factor;
    std::complex<double> xi_eta_factor;
    std::complex<double> total;
    std::complex<double> normalized;  // C11 * total
    std::vector<std::string> order;   // integration order actually used
};

ClosedFormTrace closed_form_I11(const opq::SourceMatrix& a);

// b0 = (a11 - a22)/2 - a12,  b1 = (a11 - a22)/2 + a12
std::pair<double, double> lightcone_source(const opq::SourceMatrix& a);

}  // namespace hyperhs::hs
