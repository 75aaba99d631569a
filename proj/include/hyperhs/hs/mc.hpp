#pragma once

#include "hyperhs/opq/bsym.hpp"
#include "hyperhs/opq/spectrum.hpp"
#include "hyperhs/util/moments.hpp"
#include "hyperhs/util/parallel.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperhs::hs {

struct MCOptions {
    double eps = 0.1;                   // in (0, 1)
    std::size_t n_samples = 1'000'000;
    std::uint64_t seed = 0;
    bool ablate_sign = false;
    double proposal_scale = 0.0;        // 0: max(1, 1/eps)
    std::size_t chunk_size = std::size_t{1} << 15;
    unsigned threads = 0;
    double classify_tol = opq::kDefaultClassifyTol;
    std::string stream = "hs.mc";       // sub-seed tag
};

struct MCEstimate {
    std::complex<double> value;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    std::size_t n_samples = 0;
    std::size_t n_accepted = 0;
    double eps = 0.0;
    double proposal_scale = 0.0;
    std::uint64_t seed = 0;
    bool ablated = false;
    double ess = 0.0;                   // Kish effective sample size of |w|
    std::size_t weight_bound_violations = 0;

    double acceptance_rate() const;
    double stderr_modulus() const;
};

struct MCObservable {
    opq::SourceMatrix a;
    bool ablate_sign = false;
};

// Several estimates from one common sample stream.
struct MCBatch {
    std::vector<MCEstimate> estimates;
    std::vector<double> trace_a_sq;
    Eigen::MatrixXd cov_of_mean;        // 2K x 2K, (re, im) interleaved per observable

    // value_k * exp(Tr A_k^2), constant in A by the theorem
    std::complex<double> compensated(std::size_t k) const;
};

// Importance sampling of
//   sum_sigma sgn(sigma) int_{D_sigma} exp(-Tr R^2 - 2i Tr AR) chi_eps(R) |dR|
// with R drawn from the density proportional to exp(-Tr(R^t R) / c). Samples
// outside D contribute zero. Deterministic in (seed, chunk_size).
MCBatch mc_estimate_batch(const opq::SignatureMetric& m, const std::vector<MCObservable>& observables,
                          const MCOptions& opt);

MCEstimate mc_estimate(const opq::SignatureMetric& m, const opq::SourceMatrix& a, const MCOptions& opt);

// mc_estimate with every domain weighted +1.
MCEstimate sign_ablation_estimate(const opq::SignatureMetric& m, const opq::SourceMatrix& a, MCOptions opt);

double default_proposal_scale(double eps);

// log of the normaliser of exp(-Tr(R^t R)/c) over B-symmetric R
double proposal_log_normalizer(const opq::SignatureMetric& m, double c);

// |d| / |stderr|, 0 when d == 0
double z_score(std::complex<double> d, const util::ComplexError& e);

struct Comparison {
    std::complex<double> difference;
    util::ComplexError error;
    double z_score;
};

// compensated(i) - compensated(j) with its joint standard error
Comparison compare_compensated(const MCBatch& batch, std::size_t i, std::size_t j);

struct DerivativeResult {
    std::complex<double> derivative;    // central difference of the compensated value
    util::ComplexError error;
    double z_score;
};

// Central differences of value(A) exp(Tr A^2) along each direction, all from
// one common sample stream. Throws StepTooLarge if some A +- h Adot is not a
// valid source matrix.
std::vector<DerivativeResult> directional_derivative_tests(const opq::SignatureMetric& m,
                                                           const opq::SourceMatrix& a,
                                                           const std::vector<Eigen::MatrixXd>& directions,
                                                           double h, const MCOptions& opt);

DerivativeResult directional_derivative_test(const opq::SignatureMetric& m, const opq::SourceMatrix& a,
                                             const Eigen::MatrixXd& direction, double h, const MCOptions& opt);

// One proposal draw, exposed for tests of the sampler.
opq::BSymMatrix draw_proposal(const opq::SignatureMetric& m, double c, util::Rng& rng);

}  // namespace hyperhs::hs
