#include "hyperhs/util/moments.hpp"

#include "hyperhs/error.hpp"

#include <cmath>

namespace hyperhs::util {

MomentAccumulator::MomentAccumulator(std::size_t dim)
    : mean_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim))),
      comoment_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim))),
      scratch_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim))) {}

void MomentAccumulator::add(std::span<const double> x) {
    if (x.size() != dim()) throw DimensionMismatch("MomentAccumulator::add: wrong dimension");
    ++count_;
    const double inv_n = 1.0 / static_cast<double>(count_);
    const Eigen::Index d = mean_.size();
    for (Eigen::Index i = 0; i < d; ++i) scratch_[i] = x[static_cast<std::size_t>(i)] - mean_[i];
    mean_ += scratch_ * inv_n;
    // comoment += delta_old * delta_new^t
    for (Eigen::Index j = 0; j < d; ++j) {
        const double dn = x[static_cast<std::size_t>(j)] - mean_[j];
        for (Eigen::Index i = 0; i < d; ++i) comoment_(i, j) += scratch_[i] * dn;
    }
}

void MomentAccumulator::add_complex(std::span<const std::complex<double>> z) {
    // std::complex<double> is layout-compatible with double[2].
    add(std::span<const double>(reinterpret_cast<const double*>(z.data()), 2 * z.size()));
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
        *this = other;
        return;
    }
    if (other.dim() != dim()) throw DimensionMismatch("MomentAccumulator::merge: wrong dimension");
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double n = na + nb;
    const Eigen::VectorXd delta = other.mean_ - mean_;
    comoment_ += other.comoment_ + delta * delta.transpose() * (na * nb / n);
    mean_ += delta * (nb / n);
    count_ += other.count_;
}

Eigen::MatrixXd MomentAccumulator::covariance_of_mean() const {
    if (count_ < 2) return Eigen::MatrixXd::Zero(mean_.size(), mean_.size());
    const double n = static_cast<double>(count_);
    return comoment_ / ((n - 1.0) * n);
}

std::complex<double> MomentAccumulator::complex_mean(std::size_t k) const {
    const auto i = static_cast<Eigen::Index>(2 * k);
    return {mean_[i], mean_[i + 1]};
}

double ComplexError::modulus() const { return std::hypot(re, im); }

ComplexError contrast_error(const Eigen::MatrixXd& cov, std::span<const double> c) {
    if (cov.rows() != static_cast<Eigen::Index>(2 * c.size()))
        throw DimensionMismatch("contrast_error: coefficient count does not match covariance");
    double var_re = 0.0;
    double var_im = 0.0;
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = 0; b < c.size(); ++b) {
            const auto ia = static_cast<Eigen::Index>(2 * a);
            const auto ib = static_cast<Eigen::Index>(2 * b);
            var_re += c[a] * c[b] * cov(ia, ib);
            var_im += c[a] * c[b] * cov(ia + 1, ib + 1);
        }
    }
    return {std::sqrt(std::max(0.0, var_re)), std::sqrt(std::max(0.0, var_im))};
}

ComplexError ratio_error(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov, std::size_t i, std::size_t j) {
    const auto ii = static_cast<Eigen::Index>(2 * i);
    const auto jj = static_cast<Eigen::Index>(2 * j);
    const std::complex<double> num(mean[ii], mean[ii + 1]);
    const std::complex<double> den(mean[jj], mean[jj + 1]);
    // r = num/den; dr = dnum/den - r dden/den. A complex factor k acting on
    // (dx + i dy) maps to the real 2x2 block [[Re k, -Im k], [Im k, Re k]].
    const std::complex<double> kn = 1.0 / den;
    const std::complex<double> kd = -(num / den) / den;
    Eigen::Matrix<double, 2, 4> jac;
    jac << kn.real(), -kn.imag(), kd.real(), -kd.imag(),
           kn.imag(), kn.real(), kd.imag(), kd.real();
    Eigen::Matrix4d sub;
    const Eigen::Index idx[4] = {ii, ii + 1, jj, jj + 1};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) sub(a, b) = cov(idx[a], idx[b]);
    const Eigen::Matrix2d v = jac * sub * jac.transpose();
    return {std::sqrt(std::max(0.0, v(0, 0))), std::sqrt(std::max(0.0, v(1, 1)))};
}

}  // namespace hyperhs::util
