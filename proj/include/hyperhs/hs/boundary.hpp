#pragma once

#include <complex>
#include <string>

namespace hyperhs::hs {

enum class BoundaryMethod { RealLine, ShiftedContour };

std::string to_string(BoundaryMethod m);

struct BoundaryOptions {
    // Above this value of b^2/eps the real-line integrand cancels to below
    // double resolution, and the contour is shifted to Im eta = -b/eps.
    double real_line_max_exponent = 8.0;
    unsigned max_depth = 30;
};

struct BoundaryEtaResult {
    double eps;
    double b;
    double analytic;  // exp(-b^2/eps) sqrt(pi/eps)
    std::complex<double> numeric;
    double error_estimate;
    BoundaryMethod method;

    double relative_discrepancy() const;
};

double boundary_eta_analytic(double eps, double b);

// int_R exp(-eps eta^2 - 2i b eta) d eta, analytically and by adaptive
// quadrature of the complex integrand.
BoundaryEtaResult boundary_eta_integral(double eps, double b, const BoundaryOptions& opt = {});

}  // namespace hyperhs::hs
