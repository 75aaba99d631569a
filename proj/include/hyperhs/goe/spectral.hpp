#pragma once

#include "hyperhs/goe/goe.hpp"
#include "hyperhs/util/moments.hpp"

#include <complex>
#include <vector>

namespace hyperhs::goe {

// z_1..z_p in the upper half plane, z_{p+1}..z_{p+q} in the lower one.
// q = 0 (or p = 0) is allowed for single-sided probes.
class SpectralArgs {
public:
    SpectralArgs(std::vector<std::complex<double>> z, int p);

    const std::vector<std::complex<double>>& z() const { return z_; }
    int p() const { return p_; }
    int q() const { return static_cast<int>(z_.size()) - p_; }
    int sign(int j) const { return j < p_ ? 1 : -1; }

    // z -> conj(z) with the two half-plane groups swapped, so the result is
    // again a valid argument list.
    SpectralArgs conjugated() const;

private:
    std::vector<std::complex<double>> z_;
    int p_;
};

// prod_k (z - lambda_k)^{-1/2}, principal branch per factor
std::complex<double> det_inv_sqrt(std::complex<double> z, const Eigen::VectorXd& eigenvalues);

struct GOEEstimate {
    std::complex<double> value;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
};

struct FBatch {
    std::vector<GOEEstimate> estimates;
    Eigen::MatrixXd cov_of_mean;  // interleaved (re, im)

    // value_i / value_j and its delta-method error
    std::complex<double> ratio(std::size_t i, std::size_t j) const;
    util::ComplexError ratio_error(std::size_t i, std::size_t j) const;
};

// <prod_j Det^{-1/2}(z_j - H)> over the GOE for several argument lists, all
// from one sample stream.
FBatch F_mc_batch(const std::vector<SpectralArgs>& args, const GOEConfig& cfg, const StochasticOptions& opt);

GOEEstimate F_mc(const SpectralArgs& args, const GOEConfig& cfg, const StochasticOptions& opt);

}  // namespace hyperhs::goe
