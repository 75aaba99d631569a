#include "hyperhs/goe/spectral.hpp"

#include "hyperhs/error.hpp"

#include <Eigen/Eigenvalues>

namespace hyperhs::goe {

SpectralArgs::SpectralArgs(std::vector<std::complex<double>> z, int p) : z_(std::move(z)), p_(p) {
    if (z_.empty()) throw InvalidArgument("spectral arguments: empty list");
    if (p_ < 0 || p_ > static_cast<int>(z_.size())) throw InvalidArgument("spectral arguments: bad p");
    for (std::size_t j = 0; j < z_.size(); ++j) {
        const double im = z_[j].imag();
        const bool upper = static_cast<int>(j) < p_;
        if (upper ? !(im > 0.0) : !(im < 0.0))
            throw InvalidArgument("spectral arguments: Im z_j must be > 0 for j <= p and < 0 after");
    }
}

SpectralArgs SpectralArgs::conjugated() const {
    std::vector<std::complex<double>> out;
    for (std::size_t j = static_cast<std::size_t>(p_); j < z_.size(); ++j) out.push_back(std::conj(z_[j]));
    for (int j = 0; j < p_; ++j) out.push_back(std::conj(z_[static_cast<std::size_t>(j)]));
    return SpectralArgs(std::move(out), q());
}

std::complex<double> det_inv_sqrt(std::complex<double> z, const Eigen::VectorXd& eigenvalues) {
    std::complex<double> prod(1.0, 0.0);
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) prod *= 1.0 / std::sqrt(z - eigenvalues[k]);
    return prod;
}

std::complex<double> FBatch::ratio(std::size_t i, std::size_t j) const {
    return estimates.at(i).value / estimates.at(j).value;
}

util::ComplexError FBatch::ratio_error(std::size_t i, std::size_t j) const {
    Eigen::VectorXd mean(2 * estimates.size());
    for (std::size_t k = 0; k < estimates.size(); ++k) {
        mean[2 * k] = estimates[k].value.real();
        mean[2 * k + 1] = estimates[k].value.imag();
    }
    return util::ratio_error(mean, cov_of_mean, i, j);
}

FBatch F_mc_batch(const std::vector<SpectralArgs>& args, const GOEConfig& cfg, const StochasticOptions& opt) {
    validate(cfg);
    if (args.empty()) throw InvalidArgument("F_mc: no argument lists");
    if (opt.n_samples < 2) throw InvalidArgument("F_mc: need at least two samples");
    const std::size_t k_args = args.size();

    util::ChunkPlan plan{opt.n_samples, opt.chunk_size, opt.threads};
    std::function<util::MomentAccumulator(const util::Chunk&)> body = [&](const util::Chunk& chunk) {
        util::Rng rng(util::derive_seed(opt.seed, "goe.F", chunk.index));
        util::MomentAccumulator acc(2 * k_args);
        std::vector<std::complex<double>> v(k_args);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        for (std::size_t s = chunk.begin; s < chunk.end; ++s) {
            es.compute(goe_sample(cfg, rng), Eigen::EigenvaluesOnly);
            if (es.info() != Eigen::Success) throw EigenSolverFailure("GOE eigenvalues did not converge");
            const Eigen::VectorXd& lambda = es.eigenvalues();
            for (std::size_t k = 0; k < k_args; ++k) {
                std::complex<double> prod(1.0, 0.0);
                for (const auto& z : args[k].z()) prod *= det_inv_sqrt(z, lambda);
                v[k] = prod;
            }
            acc.add_complex(v);
        }
        return acc;
    };
    util::MomentAccumulator total(2 * k_args);
    for (const auto& acc : util::run_chunks(plan, body)) total.merge(acc);

    FBatch batch;
    batch.cov_of_mean = total.covariance_of_mean();
    for (std::size_t k = 0; k < k_args; ++k) {
        GOEEstimate e;
        e.value = total.complex_mean(k);
        e.stderr_re = std::sqrt(std::max(0.0, batch.cov_of_mean(2 * k, 2 * k)));
        e.stderr_im = std::sqrt(std::max(0.0, batch.cov_of_mean(2 * k + 1, 2 * k + 1)));
        e.n_samples = opt.n_samples;
        e.seed = opt.seed;
        batch.estimates.push_back(e);
    }
    return batch;
}

GOEEstimate F_mc(const SpectralArgs& args, const GOEConfig& cfg, const StochasticOptions& opt) {
    return F_mc_batch({args}, cfg, opt).estimates.front();
}

}  // namespace hyperhs::goe
