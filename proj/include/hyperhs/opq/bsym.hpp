#pragma once

#include "hyperhs/opq/metric.hpp"

#include <Eigen/Dense>

namespace hyperhs::opq {

struct BSymBlocks {
    Eigen::MatrixXd pp;  // symmetric p x p
    Eigen::MatrixXd qq;  // symmetric q x q
    Eigen::MatrixXd pq;  // arbitrary p x q
};

// Real matrix with R = s R^t s, i.e.
//   R = [[R_pp, R_pq], [-R_pq^t, R_qq]]  with R_pp, R_qq symmetric.
// The invariant holds exactly: storage is assembled from the upper blocks.
class BSymMatrix {
public:
    BSymMatrix(const SignatureMetric& metric, const BSymBlocks& blocks);

    // Validates |R - s R^t s| <= tol * max(1, |R|) and re-assembles R from its
    // upper blocks so that the symmetry is exact afterwards.
    static BSymMatrix from_matrix(const SignatureMetric& metric, const Eigen::MatrixXd& r, double tol = 1e-12);

    const SignatureMetric& metric() const { return metric_; }
    const Eigen::MatrixXd& matrix() const { return r_; }
    double operator()(int i, int j) const { return r_(i, j); }
    int n() const { return metric_.n(); }

    Eigen::MatrixXd block_pp() const { return r_.topLeftCorner(metric_.p(), metric_.p()); }
    Eigen::MatrixXd block_qq() const { return r_.bottomRightCorner(metric_.q(), metric_.q()); }
    Eigen::MatrixXd block_pq() const { return r_.topRightCorner(metric_.p(), metric_.q()); }

    double trace_sq() const;           // Tr R^2
    double frobenius_sq() const;       // Tr R^t R
    double offdiag_norm_sq() const;    // |R_pq|_F^2

    // g R g^{-1} for g in O(p,q), using g^{-1} = s g^t s. Rounding is
    // projected back onto the B-symmetric subspace.
    BSymMatrix conjugate(const Eigen::MatrixXd& g) const;

    friend BSymMatrix operator+(const BSymMatrix& a, const BSymMatrix& b);
    friend BSymMatrix operator-(const BSymMatrix& a, const BSymMatrix& b);
    friend BSymMatrix operator*(double c, const BSymMatrix& a);

private:
    BSymMatrix(const SignatureMetric& metric, Eigen::MatrixXd r) : metric_(metric), r_(std::move(r)) {}

    SignatureMetric metric_;
    Eigen::MatrixXd r_;
};

BSymMatrix make_bsym(const SignatureMetric& m, const BSymBlocks& blocks);

// max |R - s R^t s|
double bsym_residual(const Eigen::MatrixXd& r, const SignatureMetric& m);

// (1 - t) R0 + t R1
BSymMatrix lerp(const BSymMatrix& r0, const BSymMatrix& r1, double t);

// A = s A^t s with A s symmetric positive definite.
class SourceMatrix {
public:
    const BSymMatrix& bsym() const { return a_; }
    const Eigen::MatrixXd& matrix() const { return a_.matrix(); }
    const SignatureMetric& metric() const { return a_.metric(); }
    double positivity_margin() const { return margin_; }
    double trace_sq() const { return a_.trace_sq(); }

private:
    friend SourceMatrix make_source(const SignatureMetric&, const Eigen::MatrixXd&, double);
    SourceMatrix(BSymMatrix a, double margin) : a_(std::move(a)), margin_(margin) {}

    BSymMatrix a_;
    double margin_;
};

inline constexpr double kDefaultPositivityTol = 1e-12;

// Throws SymmetryViolation when A != s A^t s and NotPositive when the
// smallest eigenvalue of A s is <= tol.
SourceMatrix make_source(const SignatureMetric& m, const Eigen::MatrixXd& entries,
                         double tol = kDefaultPositivityTol);

// Smallest eigenvalue of the symmetric matrix A s.
double positivity_margin(const Eigen::MatrixXd& a, const SignatureMetric& m);

// chi_eps(R) = exp(-(eps/2) Tr (sR - Rs)^2) = exp(-4 eps |R_pq|_F^2).
double cutoff_chi(const BSymMatrix& r, double eps);

}  // namespace hyperhs::opq
