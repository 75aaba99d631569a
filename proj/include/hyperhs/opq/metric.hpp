#pragma once

#include <Eigen/Dense>

namespace hyperhs::opq {

// Signature (p, q) of the indefinite form B(u, v) = u^t s v with
// s = diag(Id_p, -Id_q).
class SignatureMetric {
public:
    SignatureMetric(int p, int q);

    int p() const { return p_; }
    int q() const { return q_; }
    int n() const { return p_ + q_; }

    // +1 for the first p indices, -1 for the rest.
    double sign(int i) const { return i < p_ ? 1.0 : -1.0; }
    const Eigen::VectorXd& signs() const { return signs_; }
    Eigen::MatrixXd matrix() const { return signs_.asDiagonal(); }

    bool operator==(const SignatureMetric& other) const { return p_ == other.p_ && q_ == other.q_; }

private:
    int p_;
    int q_;
    Eigen::VectorXd signs_;
};

// Rejects p < 1 or q < 1.
SignatureMetric make_metric(int p, int q);

double bform(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const SignatureMetric& m);

}  // namespace hyperhs::opq
