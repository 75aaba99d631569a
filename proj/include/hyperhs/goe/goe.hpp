#pragma once

#include "hyperhs/opq/metric.hpp"
#include "hyperhs/util/parallel.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace hyperhs::goe {

// Matching <(Tr HK)^2> = (b^2/N) Tr K^2 over symmetric K fixes the entry
// variances: diagonal b^2/N, off-diagonal b^2/(2N).
struct GOEConfig {
    int N = 8;
    double b = 1.0;

    double diag_var() const { return b * b / N; }
    double offdiag_var() const { return b * b / (2.0 * N); }
};

void validate(const GOEConfig& cfg);

Eigen::MatrixXd goe_sample(const GOEConfig& cfg, util::Rng& rng);

struct StochasticOptions {
    std::size_t n_samples = 100'000;
    std::uint64_t seed = 0;
    std::size_t chunk_size = std::size_t{1} << 14;
    unsigned threads = 0;
};

struct FourierCheck {
    std::complex<double> empirical;
    double target;
    double stderr_re;
    double stderr_im;
    double z_score;
    std::size_t n_samples;
    std::uint64_t seed;
};

// Mean of exp(i Tr HK) against exp(-(b^2/2N) Tr K^2).
FourierCheck check_goe_fourier(const GOEConfig& cfg, const Eigen::MatrixXd& k, const StochasticOptions& opt);

struct FieldSource {
    Eigen::MatrixXd a;          // A_ij = sum_a phi_{i,a} phi_{j,a} s_j
    double positivity_margin;   // smallest eigenvalue of A s
    bool semidefinite;          // margin <= tolerance: not a valid source matrix
};

FieldSource build_A_from_fields(const Eigen::MatrixXd& phis, const opq::SignatureMetric& m,
                                double tol = 1e-12);

}  // namespace hyperhs::goe
