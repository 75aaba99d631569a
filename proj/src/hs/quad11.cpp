#include "hyperhs/hs/quad11.hpp"

#include "hyperhs/error.hpp"
#include "hyperhs/hs/closed_form.hpp"
#include "hyperhs/hs/convention.hpp"
#include "hyperhs/util/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace hyperhs::hs {

Quad11Result quad_verify_11(const opq::SourceMatrix& a, double eps, const Quad11Grid& grid, bool ablate_sign) {
    if (!(eps > 0.0)) throw InvalidArgument("quad_verify_11: eps must be positive");
    if (grid.t_panels == 0 || !(grid.t_max > 0.0) || !(grid.tau_panel_width > 0.0))
        throw InvalidArgument("quad_verify_11: invalid grid");
    const auto [b0, b1] = lightcone_source(a);
    const double trace_a = a.matrix()(0, 0) + a.matrix()(1, 1);

    const double tau_max = grid.tau_extra + 0.5 * std::log(std::max(1.0, 1.0 / eps));
    const auto tau_panels = static_cast<std::size_t>(std::ceil(2.0 * tau_max / grid.tau_panel_width));
    const auto tau_nodes = util::composite_gauss_legendre(-tau_max, tau_max, tau_panels);

    // kappa(tau) is bounded by 2 max(b0, b1) / sqrt(eps) at large |tau|. Even
    // where exp(-kappa^2/4) is negligible the t rule has to resolve the
    // oscillation, or aliasing leaves a spurious remainder.
    std::vector<double> kappas(tau_nodes.size());
    double kappa_max = 0.0;
    for (std::size_t k = 0; k < tau_nodes.size(); ++k) {
        const double tau = tau_nodes[k].x;
        const double sh = std::sinh(tau);
        const double beta = b0 * std::exp(tau) + b1 * std::exp(-tau);
        kappas[k] = 2.0 * beta / std::sqrt(2.0 + 4.0 * eps * sh * sh);
        kappa_max = std::max(kappa_max, kappas[k]);
    }
    const double span = 2.0 * grid.t_max;
    std::size_t t_panels = grid.t_panels;
    if (grid.auto_refine && kappa_max > 0.0) {
        const double wanted = grid.refine_nodes_per_wavelength * kappa_max * span /
                              (2.0 * std::numbers::pi * util::kGaussLegendreOrder);
        t_panels = std::max(t_panels, static_cast<std::size_t>(std::ceil(wanted)));
    }
    const double t_step = span / (t_panels * util::kGaussLegendreOrder);
    const double npw = kappa_max > 0.0 ? 2.0 * std::numbers::pi / (kappa_max * t_step)
                                       : std::numeric_limits<double>::infinity();
    if (npw < grid.min_nodes_per_wavelength)
        throw GridTooCoarse("quad_verify_11: " + std::to_string(npw) + " nodes per wavelength, need " +
                            std::to_string(grid.min_nodes_per_wavelength));
    const auto t_nodes = util::composite_gauss_legendre(-grid.t_max, grid.t_max, t_panels);

    // Exponent on the (xi, eta) plane:
    //   -2 xi eta - 2i (b1 xi + b0 eta) - 4 eps r12^2,  r12 = (eta - xi)/2
    // = -a(tau) rho^2 - 2i beta'(tau) rho,  beta' = b0 e^tau + b1 e^-tau.
    std::complex<double> xi_eta(0.0, 0.0);
    for (std::size_t k = 0; k < tau_nodes.size(); ++k) {
        const auto& tn = tau_nodes[k];
        const double sh = std::sinh(tn.x);
        const double a_tau = 2.0 + 4.0 * eps * sh * sh;
        const double kappa = kappas[k];
        std::complex<double> inner(0.0, 0.0);
        for (const auto& n : t_nodes) {
            const double rho_weight = ablate_sign ? std::abs(n.x) : n.x;
            inner += n.w * rho_weight * std::exp(std::complex<double>(-n.x * n.x, -kappa * n.x));
        }
        // rho = t / sqrt(a), d xi d eta = 2 rho d rho d tau  (signed) -> 2 t dt / a
        xi_eta += tn.w * 2.0 * inner / a_tau;
    }

    // int exp(-2 lambda^2 - 2i lambda (a11 + a22)) d lambda
    const double lambda_factor = std::sqrt(0.5 * std::numbers::pi) * std::exp(-0.5 * trace_a * trace_a);

    Quad11Result out;
    out.value = lambda_factor * xi_eta;
    out.normalized = normalize_thm_11(out.value);
    out.eps = eps;
    out.ablated = ablate_sign;
    out.nodes = tau_nodes.size() * t_nodes.size();
    out.t_panels = t_panels;
    out.tau_max = tau_max;
    out.nodes_per_wavelength = npw;
    return out;
}

}  // namespace hyperhs::hs
