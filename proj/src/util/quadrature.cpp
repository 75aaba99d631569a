#include "hyperhs/util/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace hyperhs::util {

namespace {

std::vector<QuadNode> reference_rule() {
    using rule = boost::math::quadrature::gauss<double, kGaussLegendreOrder>;
    const auto& abscissa = rule::abscissa();
    const auto& weights = rule::weights();
    std::vector<QuadNode> nodes;
    nodes.reserve(kGaussLegendreOrder);
    // Even order: abscissa() lists the positive half only.
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
        nodes.push_back({-abscissa[i], weights[i]});
        nodes.push_back({abscissa[i], weights[i]});
    }
    return nodes;
}

}  // namespace

std::vector<QuadNode> composite_gauss_legendre(double a, double b, std::size_t panels) {
    if (panels == 0) throw InvalidArgument("composite_gauss_legendre: need at least one panel");
    static const std::vector<QuadNode> ref = reference_rule();
    std::vector<QuadNode> out;
    out.reserve(panels * ref.size());
    const double h = (b - a) / static_cast<double>(panels);
    for (std::size_t k = 0; k < panels; ++k) {
        const double lo = a + h * static_cast<double>(k);
        const double mid = lo + 0.5 * h;
        for (const auto& node : ref) out.push_back({mid + 0.5 * h * node.x, 0.5 * h * node.w});
    }
    return out;
}

}  // namespace hyperhs::util
