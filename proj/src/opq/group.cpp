#include "hyperhs/opq/group.hpp"

#include "hyperhs/error.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace hyperhs::opq {

Eigen::MatrixXd lie_algebra_element(const SignatureMetric& m, const Eigen::MatrixXd& rot_p,
                                    const Eigen::MatrixXd& rot_q, const Eigen::MatrixXd& boost) {
    const int p = m.p();
    const int q = m.q();
    if (rot_p.rows() != p || rot_p.cols() != p || rot_q.rows() != q || rot_q.cols() != q ||
        boost.rows() != p || boost.cols() != q)
        throw DimensionMismatch("lie_algebra_element: block shapes do not match signature");
    Eigen::MatrixXd x(p + q, p + q);
    x.topLeftCorner(p, p) = 0.5 * (rot_p - rot_p.transpose());
    x.bottomRightCorner(q, q) = 0.5 * (rot_q - rot_q.transpose());
    x.topRightCorner(p, q) = boost;
    x.bottomLeftCorner(q, p) = boost.transpose();
    return x;
}

double lie_algebra_residual(const Eigen::MatrixXd& x, const SignatureMetric& m) {
    const Eigen::MatrixXd s = m.matrix();
    return (x.transpose() + s * x * s).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd group_exp(const Eigen::MatrixXd& x) { return x.exp(); }

double group_residual(const Eigen::MatrixXd& g, const SignatureMetric& m) {
    const Eigen::MatrixXd s = m.matrix();
    return (g.transpose() * s * g - s).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd random_group_element(const SignatureMetric& m, double rapidity_bound, util::Rng& rng) {
    if (!(rapidity_bound > 0.0)) throw InvalidArgument("rapidity bound must be positive");
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto draw = [&](int rows, int cols) {
        Eigen::MatrixXd out(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) out(i, j) = unit(rng);
        return out;
    };
    const Eigen::MatrixXd rot_p = draw(m.p(), m.p());
    const Eigen::MatrixXd rot_q = draw(m.q(), m.q());
    Eigen::MatrixXd boost = draw(m.p(), m.q());
    const double rapidity = std::uniform_real_distribution<double>(0.0, rapidity_bound)(rng);
    const double smax = Eigen::JacobiSVD<Eigen::MatrixXd>(boost).singularValues()(0);
    if (smax > 0.0) boost *= rapidity / smax;
    return group_exp(lie_algebra_element(m, rot_p, rot_q, boost));
}

Eigen::MatrixXd boost_11(double rapidity) {
    Eigen::MatrixXd g(2, 2);
    g << std::cosh(rapidity), std::sinh(rapidity), std::sinh(rapidity), std::cosh(rapidity);
    return g;
}

}  // namespace hyperhs::opq
