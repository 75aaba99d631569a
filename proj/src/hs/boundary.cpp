#include "hyperhs/hs/boundary.hpp"

#include "hyperhs/error.hpp"
#include "hyperhs/util/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hyperhs::hs {

namespace {
// exp(-46) ~ 1e-20 of the peak: the truncated tails are invisible at the
// relative accuracy the comparison asks for.
constexpr double kTailExponent = 46.0;
}

std::string to_string(BoundaryMethod m) { return m == BoundaryMethod::RealLine ? "real_line" : "shifted_contour"; }

double BoundaryEtaResult::relative_discrepancy() const {
    if (analytic == 0.0) return std::abs(numeric) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return std::abs(numeric - analytic) / analytic;
}

double boundary_eta_analytic(double eps, double b) {
    if (!(eps > 0.0)) throw InvalidArgument("boundary integral: eps must be positive");
    return std::exp(-b * b / eps) * std::sqrt(std::numbers::pi / eps);
}

BoundaryEtaResult boundary_eta_integral(double eps, double b, const BoundaryOptions& opt) {
    if (b == 0.0) throw InvalidArgument("boundary integral: b must be nonzero");
    const double analytic = boundary_eta_analytic(eps, b);
    const double exponent = b * b / eps;
    const double half_width = std::sqrt(kTailExponent / eps);

    BoundaryEtaResult out{eps, b, analytic, {}, 0.0, BoundaryMethod::RealLine};
    util::AdaptiveOptions aopt;
    aopt.max_depth = opt.max_depth;

    if (exponent <= opt.real_line_max_exponent) {
        auto f = [&](double eta) {
            return std::exp(std::complex<double>(-eps * eta * eta, -2.0 * b * eta));
        };
        // Boost measures its tolerance against the L1 norm ~ sqrt(pi/eps); the
        // value is smaller by exp(-exponent).
        aopt.rel_tol = std::max(1e-15, 1e-11 * std::exp(-exponent));
        aopt.abs_tol = 1e-10 * analytic;
        const auto r = util::integrate_adaptive(f, -half_width, half_width, aopt);
        out.numeric = r.value;
        out.error_estimate = r.error;
        return out;
    }

    // The integrand is entire, so the line Im eta = -b/eps gives the same
    // integral; there the oscillation disappears.
    const std::complex<double> shift(0.0, -b / eps);
    auto g = [&](double x) {
        const std::complex<double> eta = x + shift;
        return std::exp(-eps * eta * eta - std::complex<double>(0.0, 2.0 * b) * eta);
    };
    aopt.rel_tol = 1e-13;
    const auto r = util::integrate_adaptive(g, -half_width, half_width, aopt);
    out.numeric = r.value;
    out.error_estimate = r.error;
    out.method = BoundaryMethod::ShiftedContour;
    return out;
}

}  // namespace hyperhs::hs
