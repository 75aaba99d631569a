#include "hyperhs/opq/random.hpp"

#include "hyperhs/error.hpp"
#include "hyperhs/opq/group.hpp"

#include <algorithm>

namespace hyperhs::opq {

BSymMatrix random_bsym(const SignatureMetric& m, util::Rng& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    auto symmetric = [&](int k) {
        Eigen::MatrixXd out(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) out(i, j) = out(j, i) = u(rng);
        return out;
    };
    BSymBlocks blocks{symmetric(m.p()), symmetric(m.q()), Eigen::MatrixXd(m.p(), m.q())};
    for (int i = 0; i < m.p(); ++i)
        for (int j = 0; j < m.q(); ++j) blocks.pq(i, j) = u(rng);
    return make_bsym(m, blocks);
}

SourceMatrix random_source(const SignatureMetric& m, util::Rng& rng, double scale, double floor) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Eigen::MatrixXd l(m.n(), m.n());
    for (int j = 0; j < m.n(); ++j)
        for (int i = 0; i < m.n(); ++i) l(i, j) = u(rng);
    Eigen::MatrixXd spd = l * l.transpose() + floor * Eigen::MatrixXd::Identity(m.n(), m.n());
    spd = 0.5 * (spd + spd.transpose());
    return make_source(m, spd * m.matrix());
}

BSymMatrix random_diagonalizable(const SignatureMetric& m, util::Rng& rng, double spread, double rapidity,
                                 double min_gap) {
    if (min_gap * m.n() >= 2.0 * spread) throw InvalidArgument("random_diagonalizable: gap too large for spread");
    std::uniform_real_distribution<double> u(-spread, spread);
    std::vector<double> lambda;
    while (static_cast<int>(lambda.size()) < m.n()) {
        const double x = u(rng);
        if (std::all_of(lambda.begin(), lambda.end(), [&](double y) { return std::abs(x - y) >= min_gap; }))
            lambda.push_back(x);
    }
    const Eigen::MatrixXd h = random_group_element(m, rapidity, rng);
    const Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(lambda.data(), m.n());
    const Eigen::MatrixXd s = m.matrix();
    return BSymMatrix::from_matrix(m, h * d.asDiagonal() * s * h.transpose() * s, 1e-9);
}

}  // namespace hyperhs::opq
