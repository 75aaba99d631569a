#include "hyperhs/goe/goe.hpp"

#include "hyperhs/error.hpp"
#include "hyperhs/opq/bsym.hpp"
#include "hyperhs/util/moments.hpp"

#include <cmath>

namespace hyperhs::goe {

void validate(const GOEConfig& cfg) {
    if (cfg.N < 2) throw InvalidArgument("GOE: N must be at least 2");
    if (!std::isfinite(cfg.b)) throw InvalidArgument("GOE: b must be finite");
}

Eigen::MatrixXd goe_sample(const GOEConfig& cfg, util::Rng& rng) {
    validate(cfg);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double sd_diag = std::sqrt(cfg.diag_var());
    const double sd_off = std::sqrt(cfg.offdiag_var());
    Eigen::MatrixXd h(cfg.N, cfg.N);
    for (int i = 0; i < cfg.N; ++i)
        for (int j = i; j < cfg.N; ++j) {
            h(i, j) = (i == j ? sd_diag : sd_off) * normal(rng);
            h(j, i) = h(i, j);
        }
    return h;
}

FourierCheck check_goe_fourier(const GOEConfig& cfg, const Eigen::MatrixXd& k, const StochasticOptions& opt) {
    validate(cfg);
    if (k.rows() != cfg.N || k.cols() != cfg.N) throw DimensionMismatch("Fourier variable has wrong size");
    if ((k - k.transpose()).cwiseAbs().maxCoeff() > 0.0) throw SymmetryViolation("Fourier variable must be symmetric");
    if (opt.n_samples < 2) throw InvalidArgument("need at least two samples");

    util::ChunkPlan plan{opt.n_samples, opt.chunk_size, opt.threads};
    std::function<util::MomentAccumulator(const util::Chunk&)> body = [&](const util::Chunk& chunk) {
        util::Rng rng(util::derive_seed(opt.seed, "goe.fourier", chunk.index));
        util::MomentAccumulator acc(2);
        for (std::size_t s = chunk.begin; s < chunk.end; ++s) {
            const Eigen::MatrixXd h = goe_sample(cfg, rng);
            const std::complex<double> v = std::exp(std::complex<double>(0.0, (h.array() * k.array()).sum()));
            acc.add_complex({&v, 1});
        }
        return acc;
    };
    util::MomentAccumulator total(2);
    for (const auto& acc : util::run_chunks(plan, body)) total.merge(acc);

    FourierCheck out;
    out.empirical = total.complex_mean(0);
    out.target = std::exp(-cfg.b * cfg.b / (2.0 * cfg.N) * (k * k).trace());
    const Eigen::MatrixXd cov = total.covariance_of_mean();
    out.stderr_re = std::sqrt(cov(0, 0));
    out.stderr_im = std::sqrt(cov(1, 1));
    const std::complex<double> d = out.empirical - out.target;
    out.z_score = d == std::complex<double>(0.0, 0.0) ? 0.0 : std::abs(d) / std::hypot(out.stderr_re, out.stderr_im);
    out.n_samples = opt.n_samples;
    out.seed = opt.seed;
    return out;
}

FieldSource build_A_from_fields(const Eigen::MatrixXd& phis, const opq::SignatureMetric& m, double tol) {
    if (phis.rows() != m.n()) throw DimensionMismatch("field array must have p + q rows");
    // Gram matrix times s on the right: (phi phi^t) s
    const Eigen::MatrixXd gram = phis * phis.transpose();
    FieldSource out;
    out.a = gram * m.signs().asDiagonal();
    // A s = phi phi^t exactly, so the margin is the Gram spectrum minimum.
    out.positivity_margin = opq::positivity_margin(out.a, m);
    out.semidefinite = !(out.positivity_margin > tol);
    return out;
}

}  // namespace hyperhs::goe
