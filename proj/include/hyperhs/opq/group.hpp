#pragma once

#include "hyperhs/opq/metric.hpp"
#include "hyperhs/util/parallel.hpp"

#include <Eigen/Dense>

namespace hyperhs::opq {

// X = [[A, B], [B^t, C]] with A (p x p) and C (q x q) antisymmetric; these
// are exactly the X with X^t = -s X s.
Eigen::MatrixXd lie_algebra_element(const SignatureMetric& m, const Eigen::MatrixXd& rot_p,
                                    const Eigen::MatrixXd& rot_q, const Eigen::MatrixXd& boost);

// max |X^t + s X s|
double lie_algebra_residual(const Eigen::MatrixXd& x, const SignatureMetric& m);

Eigen::MatrixXd group_exp(const Eigen::MatrixXd& x);

// max |g^t s g - s|
double group_residual(const Eigen::MatrixXd& g, const SignatureMetric& m);

// g = exp(X) for a random Lie algebra element: rotation generators have
// entries uniform in [-1, 1]; the boost block is rescaled so that its largest
// singular value (the largest rapidity of the pure boost exp([[0,B],[B^t,0]]))
// is uniform in [0, rapidity_bound].
Eigen::MatrixXd random_group_element(const SignatureMetric& m, double rapidity_bound, util::Rng& rng);

// [[cosh t, sinh t], [sinh t, cosh t]]
Eigen::MatrixXd boost_11(double rapidity);

}  // namespace hyperhs::opq
