#pragma once

#include "hyperhs/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstdio>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace hyperhs::util {

struct QuadNode {
    double x;
    double w;
};

// Composite 16-point Gauss-Legendre rule on [a, b] with `panels` equal panels.
std::vector<QuadNode> composite_gauss_legendre(double a, double b, std::size_t panels);

inline constexpr std::size_t kGaussLegendreOrder = 16;

struct AdaptiveOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    unsigned max_depth = 18;
    // Measure rel_tol against the L1 norm of the integrand instead of the
    // value; for integrals that cancel by design.
    bool l1_relative = false;
};

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
};

// Adaptive Gauss-Kronrod (7/15) over [a, b]; either end may be infinite.
// Throws QuadratureError when the error estimate stays above
// max(abs_tol, rel_tol * |value|) (or rel_tol * L1 norm) after max_depth
// bisections.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, const AdaptiveOptions& opt = {})
    -> QuadResult<decltype(f(a))> {
    using T = decltype(f(a));
    double err = 0.0;
    double l1 = 0.0;
    const T value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, opt.max_depth, opt.rel_tol, &err, &l1);
    using std::abs;
    const double scale = opt.l1_relative ? l1 : abs(value);
    const double target = std::max(opt.abs_tol, opt.rel_tol * scale);
    // Boost bisects until err <= rel_tol * L1 norm; allow a factor 10 slack
    // against the value before declaring failure.
    if (!(err <= 10.0 * target)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "adaptive quadrature did not converge: error estimate %.3e vs target %.3e",
                      err, target);
        throw QuadratureError(msg);
    }
    return {value, err};
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace hyperhs::util
