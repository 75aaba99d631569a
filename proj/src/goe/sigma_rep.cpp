#include "hyperhs/goe/sigma_rep.hpp"

#include "hyperhs/error.hpp"
#include "hyperhs/util/quadrature.hpp"

#include <cmath>

namespace hyperhs::goe {

namespace {

std::complex<double> inverse_power(std::complex<double> x, int k) {
    std::complex<double> out(1.0, 0.0);
    for (int i = 0; i < k; ++i) out *= x;
    return 1.0 / out;
}

// rho below exp(-40) contributes at order rho^2 log(1/rho) ~ 1e-33
constexpr double kMaxLogInverseRho = 40.0;

}  // namespace

SigmaRepResult sigma_rep_F11(const SpectralArgs& args, const GOEConfig& cfg, const SigmaRepOptions& opt) {
    validate(cfg);
    if (args.p() != 1 || args.q() != 1) throw InvalidArgument("sigma_rep_F11: needs p = q = 1");
    if (cfg.N % 2 != 0) throw InvalidArgument("sigma_rep_F11: N must be even");
    if (cfg.N < 2 * (args.p() + args.q()) + 2) throw InvalidArgument("sigma_rep_F11: N too small to drop the cutoff");
    if (cfg.b == 0.0) throw InvalidArgument("sigma_rep_F11: b must be nonzero");

    const std::complex<double> z1 = args.z()[0];
    const std::complex<double> z2 = args.z()[1];
    const int half_n = cfg.N / 2;
    const double gauss = static_cast<double>(cfg.N) / (cfg.b * cfg.b);  // N/(2b^2) * 2
    const double extent = opt.radius * std::abs(cfg.b) / std::sqrt(2.0 * cfg.N);

    // Inner integrals are solved more tightly than the outer ones, so their
    // quadrature noise stays below what the outer rule can resolve.
    util::AdaptiveOptions outer_opt;
    outer_opt.rel_tol = opt.rel_tol;
    outer_opt.max_depth = opt.max_depth;
    util::AdaptiveOptions rho_opt = outer_opt;
    rho_opt.rel_tol = opt.rel_tol * 1e-1;
    // the two domains enter with opposite signs, so the rho integral cancels
    rho_opt.l1_relative = true;
    util::AdaptiveOptions tau_opt = outer_opt;
    tau_opt.rel_tol = opt.rel_tol * 1e-2;

    // Tr R^2 = 2 lambda^2 + 2 rho^2; measure 2 |rho| d rho d tau d lambda with
    // rho > 0 on D_{space,time} and rho < 0 on D_{time,space}, the second with
    // sign -1; the integrand is even in tau, so tau >= 0 is doubled.
    auto over_tau = [&](double lambda, double rho) {
        const std::complex<double> base = (z1 - lambda) * (z2 - lambda) - rho * rho;
        auto f = [&](double tau) {
            const std::complex<double> det = base + (z1 - z2) * rho * std::cosh(tau);
            return inverse_power(det, half_n);
        };
        auto r = util::integrate_adaptive(f, 0.0, opt.tau_max, tau_opt);
        return 2.0 * r.value;
    };
    // The tau integral grows like log(1/|rho|) as rho -> 0, which leaves a
    // rho log|rho| kink in the rho integrand. With rho = +-exp(-s) both signs
    // are integrated together and the integrand is smooth in s.
    const double second_sign = opt.ablate_sign ? 1.0 : -1.0;
    auto over_rho = [&](double lambda) {
        auto g = [&](double s) {
            const double rho = std::exp(-s);
            const double weight = 2.0 * rho * rho * std::exp(-gauss * rho * rho);
            return weight * (over_tau(lambda, rho) + second_sign * over_tau(lambda, -rho));
        };
        return util::integrate_adaptive(g, -std::log(extent), kMaxLogInverseRho, rho_opt).value;
    };
    auto h = [&](double lambda) { return std::exp(-gauss * lambda * lambda) * over_rho(lambda); };
    const auto outer = util::integrate_adaptive(h, -extent, extent, outer_opt);
    return {outer.value, outer.error};
}

}  // namespace hyperhs::goe
