#include "hyperhs/opq/lightcone.hpp"

#include "hyperhs/error.hpp"

namespace hyperhs::opq {

LightconeCoords lightcone(const BSymMatrix& r) {
    if (r.metric().p() != 1 || r.metric().q() != 1)
        throw InvalidArgument("lightcone coordinates need signature (1,1)");
    const double r11 = r(0, 0);
    const double r22 = r(1, 1);
    const double r12 = r(0, 1);
    const double half_diff = 0.5 * (r11 - r22);
    return {0.5 * (r11 + r22), half_diff - r12, half_diff + r12};
}

BSymMatrix from_lightcone(const LightconeCoords& c) {
    const double half_sum = 0.5 * (c.xi + c.eta);
    BSymBlocks blocks{Eigen::MatrixXd::Constant(1, 1, c.lambda + half_sum),
                      Eigen::MatrixXd::Constant(1, 1, c.lambda - half_sum),
                      Eigen::MatrixXd::Constant(1, 1, 0.5 * (c.eta - c.xi))};
    return make_bsym(make_metric(1, 1), blocks);
}

}  // namespace hyperhs::opq
