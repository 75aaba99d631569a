#include "hyperhs/opq/bsym.hpp"

#include "hyperhs/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <string>

namespace hyperhs::opq {

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Asymmetry allowed in a block that is meant to be symmetric: a few ulps of
// the block's scale, i.e. what survives a round trip through text.
bool nearly_symmetric(const Eigen::MatrixXd& b) {
    const double scale = std::max(1.0, max_abs(b));
    return max_abs(b - b.transpose()) <= 8.0 * std::numeric_limits<double>::epsilon() * scale;
}

Eigen::MatrixXd assemble(const SignatureMetric& m, const Eigen::MatrixXd& pp, const Eigen::MatrixXd& qq,
                         const Eigen::MatrixXd& pq) {
    const int p = m.p();
    const int q = m.q();
    Eigen::MatrixXd r(p + q, p + q);
    r.topLeftCorner(p, p) = pp;
    r.bottomRightCorner(q, q) = qq;
    r.topRightCorner(p, q) = pq;
    r.bottomLeftCorner(q, p) = -pq.transpose();
    return r;
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& b) { return 0.5 * (b + b.transpose()); }

// Copies the upper triangle onto the lower one.
Eigen::MatrixXd from_upper(const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out = b.triangularView<Eigen::Upper>();
    out.triangularView<Eigen::StrictlyLower>() = b.transpose().triangularView<Eigen::StrictlyLower>();
    return out;
}

}  // namespace

BSymMatrix::BSymMatrix(const SignatureMetric& metric, const BSymBlocks& blocks) : metric_(metric) {
    const int p = metric.p();
    const int q = metric.q();
    if (blocks.pp.rows() != p || blocks.pp.cols() != p || blocks.qq.rows() != q || blocks.qq.cols() != q ||
        blocks.pq.rows() != p || blocks.pq.cols() != q)
        throw DimensionMismatch("make_bsym: block shapes do not match signature (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
    if (!nearly_symmetric(blocks.pp)) throw SymmetryViolation("make_bsym: R_pp block is not symmetric");
    if (!nearly_symmetric(blocks.qq)) throw SymmetryViolation("make_bsym: R_qq block is not symmetric");
    r_ = assemble(metric, symmetrize(blocks.pp), symmetrize(blocks.qq), blocks.pq);
}

BSymMatrix BSymMatrix::from_matrix(const SignatureMetric& metric, const Eigen::MatrixXd& r, double tol) {
    const int n = metric.n();
    if (r.rows() != n || r.cols() != n)
        throw DimensionMismatch("BSymMatrix: expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    if (!r.allFinite()) throw InvalidArgument("BSymMatrix: non-finite entry");
    const double res = bsym_residual(r, metric);
    if (res > tol * std::max(1.0, max_abs(r)))
        throw SymmetryViolation("matrix violates R = s R^t s (residual " + std::to_string(res) + ")");
    const int p = metric.p();
    const int q = metric.q();
    return BSymMatrix(metric, assemble(metric, from_upper(r.topLeftCorner(p, p)), from_upper(r.bottomRightCorner(q, q)),
                                       r.topRightCorner(p, q)));
}

double BSymMatrix::trace_sq() const { return (r_.array() * r_.transpose().array()).sum(); }

double BSymMatrix::frobenius_sq() const { return r_.squaredNorm(); }

double BSymMatrix::offdiag_norm_sq() const { return r_.topRightCorner(metric_.p(), metric_.q()).squaredNorm(); }

BSymMatrix BSymMatrix::conjugate(const Eigen::MatrixXd& g) const {
    const auto& s = metric_.signs();
    const Eigen::MatrixXd g_inv = s.asDiagonal() * g.transpose() * s.asDiagonal();
    const Eigen::MatrixXd c = g * r_ * g_inv;
    const Eigen::MatrixXd projected = 0.5 * (c + s.asDiagonal() * c.transpose() * s.asDiagonal());
    return from_matrix(metric_, projected, std::numeric_limits<double>::infinity());
}

BSymMatrix operator+(const BSymMatrix& a, const BSymMatrix& b) {
    if (!(a.metric_ == b.metric_)) throw DimensionMismatch("BSymMatrix +: signatures differ");
    return BSymMatrix(a.metric_, Eigen::MatrixXd(a.r_ + b.r_));
}

BSymMatrix operator-(const BSymMatrix& a, const BSymMatrix& b) {
    if (!(a.metric_ == b.metric_)) throw DimensionMismatch("BSymMatrix -: signatures differ");
    return BSymMatrix(a.metric_, Eigen::MatrixXd(a.r_ - b.r_));
}

BSymMatrix operator*(double c, const BSymMatrix& a) { return BSymMatrix(a.metric_, Eigen::MatrixXd(c * a.r_)); }

BSymMatrix make_bsym(const SignatureMetric& m, const BSymBlocks& blocks) { return BSymMatrix(m, blocks); }

double bsym_residual(const Eigen::MatrixXd& r, const SignatureMetric& m) {
    const auto& s = m.signs();
    return max_abs(r - s.asDiagonal() * r.transpose() * s.asDiagonal());
}

BSymMatrix lerp(const BSymMatrix& r0, const BSymMatrix& r1, double t) { return (1.0 - t) * r0 + t * r1; }

double positivity_margin(const Eigen::MatrixXd& a, const SignatureMetric& m) {
    const Eigen::MatrixXd as = a * m.signs().asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (as + as.transpose()), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw EigenSolverFailure("positivity_margin: symmetric eigensolver failed");
    return es.eigenvalues().minCoeff();
}

SourceMatrix make_source(const SignatureMetric& m, const Eigen::MatrixXd& entries, double tol) {
    BSymMatrix a = BSymMatrix::from_matrix(m, entries);
    const double margin = positivity_margin(a.matrix(), m);
    if (!(margin > tol))
        throw NotPositive("source matrix violates A s > 0 (smallest eigenvalue of A s is " + std::to_string(margin) +
                          ")");
    return SourceMatrix(std::move(a), margin);
}

double cutoff_chi(const BSymMatrix& r, double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("cutoff_chi: eps must be positive");
    return std::exp(-4.0 * eps * r.offdiag_norm_sq());
}

}  // namespace hyperhs::opq
