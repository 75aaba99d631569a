#include "hyperhs/hs/closed_form.hpp"

#include "hyperhs/error.hpp"
#include "hyperhs/hs/convention.hpp"

#include <cmath>
#include <numbers>

namespace hyperhs::hs {

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
}

std::complex<double> gaussian_rho_integral(double beta) {
    return {0.0, -kSqrtPi * beta * std::exp(-beta * beta)};
}

double gaussian_tau_integral(double b0, double b1) {
    if (!(b0 > 0.0) || !(b1 > 0.0)) throw InvalidArgument("gaussian_tau_integral: b0 and b1 must be positive");
    return kSqrtPi * std::exp(-b0 * b1);
}

std::pair<double, double> lightcone_source(const opq::SourceMatrix& a) {
    if (a.metric().p() != 1 || a.metric().q() != 1) throw InvalidArgument("expected signature (1,1)");
    const Eigen::MatrixXd& m = a.matrix();
    const double half_diff = 0.5 * (m(0, 0) - m(1, 1));
    return {half_diff - m(0, 1), half_diff + m(0, 1)};
}

ClosedFormTrace closed_form_I11(const opq::SourceMatrix& a) {
    const auto [b0, b1] = lightcone_source(a);
    const double trace_a = a.matrix()(0, 0) + a.matrix()(1, 1);

    ClosedFormTrace t;
    t.b0 = b0;
    t.b1 = b1;
    t.lambda_factor = kSqrtPi * std::exp(-0.25 * trace_a * trace_a);
    t.order.push_back("lambda: gaussian, exact");
    // d xi d eta = 2 rho d rho d tau with the sign of rho carrying the domain sign;
    // the rho integral is done first, giving -i sqrt(pi) beta exp(-beta^2).
    t.order.push_back("rho: inner, signed over R");
    t.order.push_back("tau: outer");
    // Pulling -i sqrt(pi) out of the rho integral leaves beta exp(-beta^2) for the tau integral.
    const std::complex<double> rho_prefactor(0.0, -kSqrtPi);
    t.xi_eta_factor = 2.0 * rho_prefactor * gaussian_tau_integral(b0, b1);
    t.total = t.lambda_factor * t.xi_eta_factor;
    t.normalized = c11() * t.total;
    return t;
}

}  // namespace hyperhs::hs
