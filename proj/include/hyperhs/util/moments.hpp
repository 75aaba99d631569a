#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>

namespace hyperhs::util {

// Running mean and centred co-moment matrix of a real random vector
// (Welford update, Chan et al. merge). Complex observables are stored as
// interleaved (re, im) pairs: component 2k is Re z_k, 2k+1 is Im z_k.
class MomentAccumulator {
public:
    MomentAccumulator() = default;
    explicit MomentAccumulator(std::size_t dim);

    void add(std::span<const double> x);
    void add_complex(std::span<const std::complex<double>> z);
    void merge(const MomentAccumulator& other);

    std::size_t dim() const { return static_cast<std::size_t>(mean_.size()); }
    std::size_t count() const { return count_; }
    const Eigen::VectorXd& mean() const { return mean_; }
    // Sample covariance of the mean, i.e. cov(x) / n.
    Eigen::MatrixXd covariance_of_mean() const;

    std::complex<double> complex_mean(std::size_t k) const;

private:
    std::size_t count_ = 0;
    Eigen::VectorXd mean_;
    Eigen::MatrixXd comoment_;
    Eigen::VectorXd scratch_;
};

// Error of a real-linear functional of a complex-valued mean vector.
struct ComplexError {
    double re = 0.0;
    double im = 0.0;
    double modulus() const;
};

// Standard error of sum_k c_k * mean_k for real coefficients c_k.
ComplexError contrast_error(const Eigen::MatrixXd& cov_of_mean, std::span<const double> coefficients);

// Standard error of mean_i / mean_j by the delta method.
ComplexError ratio_error(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov_of_mean,
                         std::size_t i, std::size_t j);

}  // namespace hyperhs::util
