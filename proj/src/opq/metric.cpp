#include "hyperhs/opq/metric.hpp"

#include "hyperhs/error.hpp"

#include <string>

namespace hyperhs::opq {

SignatureMetric::SignatureMetric(int p, int q) : p_(p), q_(q) {
    if (p < 1 || q < 1)
        throw InvalidArgument("signature (" + std::to_string(p) + "," + std::to_string(q) +
                              ") is degenerate: need p >= 1 and q >= 1");
    signs_.resize(p + q);
    for (int i = 0; i < p + q; ++i) signs_[i] = sign(i);
}

SignatureMetric make_metric(int p, int q) { return SignatureMetric(p, q); }

double bform(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const SignatureMetric& m) {
    if (u.size() != m.n() || v.size() != m.n())
        throw DimensionMismatch("bform: vectors must have length " + std::to_string(m.n()));
    return (u.array() * m.signs().array() * v.array()).sum();
}

}  // namespace hyperhs::opq
