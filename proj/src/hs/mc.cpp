#include "hyperhs/hs/mc.hpp"

#include "hyperhs/error.hpp"

#include <cmath>
#include <numbers>

namespace hyperhs::hs {

double MCEstimate::acceptance_rate() const {
    return n_samples == 0 ? 0.0 : static_cast<double>(n_accepted) / static_cast<double>(n_samples);
}

double MCEstimate::stderr_modulus() const { return std::hypot(stderr_re, stderr_im); }

std::complex<double> MCBatch::compensated(std::size_t k) const {
    return estimates.at(k).value * std::exp(trace_a_sq.at(k));
}

double default_proposal_scale(double eps) { return std::max(1.0, 1.0 / eps); }

double proposal_log_normalizer(const opq::SignatureMetric& m, double c) {
    const int n = m.n();
    // diagonal entries: exp(-x^2/c); independent off-diagonal ones: exp(-2x^2/c)
    const double n_diag = n;
    const double n_off = 0.5 * n * (n - 1);
    return 0.5 * n_diag * std::log(std::numbers::pi * c) + 0.5 * n_off * std::log(0.5 * std::numbers::pi * c);
}

opq::BSymMatrix draw_proposal(const opq::SignatureMetric& m, double c, util::Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double sd_diag = std::sqrt(0.5 * c);
    const double sd_off = std::sqrt(0.25 * c);
    auto symmetric = [&](int k) {
        Eigen::MatrixXd out(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                out(i, j) = (i == j ? sd_diag : sd_off) * normal(rng);
                out(j, i) = out(i, j);
            }
        return out;
    };
    opq::BSymBlocks blocks;
    blocks.pp = symmetric(m.p());
    blocks.qq = symmetric(m.q());
    blocks.pq.resize(m.p(), m.q());
    for (int i = 0; i < m.p(); ++i)
        for (int j = 0; j < m.q(); ++j) blocks.pq(i, j) = sd_off * normal(rng);
    return opq::make_bsym(m, blocks);
}

double z_score(std::complex<double> d, const util::ComplexError& e) {
    if (d == std::complex<double>(0.0, 0.0)) return 0.0;
    return std::abs(d) / e.modulus();
}

namespace {

struct ChunkTally {
    util::MomentAccumulator moments;
    std::size_t n_accepted = 0;
    std::vector<std::size_t> violations;
    std::vector<double> sum_abs;
    std::vector<double> sum_abs_sq;
};

void validate(const MCOptions& opt) {
    if (!(opt.eps > 0.0 && opt.eps < 1.0)) throw InvalidArgument("mc: eps must lie in (0, 1)");
    if (opt.n_samples < 1) throw InvalidArgument("mc: need at least one sample");
    if (opt.chunk_size < 1) throw InvalidArgument("mc: chunk size must be positive");
    if (opt.proposal_scale < 0.0) throw InvalidArgument("mc: proposal scale must be positive");
}

}  // namespace

MCBatch mc_estimate_batch(const opq::SignatureMetric& m, const std::vector<MCObservable>& observables,
                          const MCOptions& opt) {
    validate(opt);
    if (observables.empty()) throw InvalidArgument("mc: no observables");
    for (const auto& o : observables)
        if (!(o.a.metric() == m)) throw DimensionMismatch("mc: source matrix signature differs");

    const std::size_t k_obs = observables.size();
    const double c = opt.proposal_scale > 0.0 ? opt.proposal_scale : default_proposal_scale(opt.eps);
    const double log_z = proposal_log_normalizer(m, c);
    const double z_norm = std::exp(log_z);

    util::ChunkPlan plan{opt.n_samples, opt.chunk_size, opt.threads};
    std::function<ChunkTally(const util::Chunk&)> body = [&](const util::Chunk& chunk) {
        util::Rng rng(util::derive_seed(opt.seed, opt.stream, chunk.index));
        ChunkTally tally{util::MomentAccumulator(2 * k_obs), 0, std::vector<std::size_t>(k_obs, 0),
                         std::vector<double>(k_obs, 0.0), std::vector<double>(k_obs, 0.0)};
        std::vector<std::complex<double>> w(k_obs);
        for (std::size_t s = chunk.begin; s < chunk.end; ++s) {
            const opq::BSymMatrix r = draw_proposal(m, c, rng);
            const auto cls = opq::spectral_classify(r, opt.classify_tol);
            const auto* d = std::get_if<opq::Diagonalizable>(&cls);
            std::fill(w.begin(), w.end(), std::complex<double>(0.0, 0.0));
            if (d) {
                ++tally.n_accepted;
                const double tr_sq = r.trace_sq();
                const double q_sq = r.offdiag_norm_sq();
                // |w| / Z = exp(-Tr R^2 + Tr(R^t R)/c - 4 eps |R_pq|^2)
                const double log_mag = -tr_sq + r.frobenius_sq() / c - 4.0 * opt.eps * q_sq;
                double lambda_sq = 0.0;
                for (double l : d->eigenvalues) lambda_sq += l * l;
                const double bound = std::exp(-lambda_sq * (1.0 - 1.0 / c));
                const double mag = z_norm * std::exp(log_mag);
                const int sign = d->motif.sign();
                for (std::size_t k = 0; k < k_obs; ++k) {
                    const double tr_ar = (observables[k].a.matrix().array() * r.matrix().transpose().array()).sum();
                    const double sk = observables[k].ablate_sign ? 1.0 : static_cast<double>(sign);
                    w[k] = sk * mag * std::exp(std::complex<double>(0.0, -2.0 * tr_ar));
                    if (mag / z_norm > bound * (1.0 + 1e-9) + 1e-300) ++tally.violations[k];
                    tally.sum_abs[k] += mag;
                    tally.sum_abs_sq[k] += mag * mag;
                }
            }
            tally.moments.add_complex(w);
        }
        return tally;
    };
    const std::vector<ChunkTally> tallies = util::run_chunks(plan, body);

    util::MomentAccumulator total(2 * k_obs);
    std::size_t n_accepted = 0;
    std::vector<std::size_t> violations(k_obs, 0);
    std::vector<double> sum_abs(k_obs, 0.0), sum_abs_sq(k_obs, 0.0);
    for (const auto& t : tallies) {
        total.merge(t.moments);
        n_accepted += t.n_accepted;
        for (std::size_t k = 0; k < k_obs; ++k) {
            violations[k] += t.violations[k];
            sum_abs[k] += t.sum_abs[k];
            sum_abs_sq[k] += t.sum_abs_sq[k];
        }
    }

    MCBatch batch;
    batch.cov_of_mean = total.count() > 1 ? total.covariance_of_mean()
                                          : Eigen::MatrixXd::Zero(2 * k_obs, 2 * k_obs);
    for (std::size_t k = 0; k < k_obs; ++k) {
        MCEstimate e;
        e.value = total.complex_mean(k);
        e.stderr_re = std::sqrt(std::max(0.0, batch.cov_of_mean(2 * k, 2 * k)));
        e.stderr_im = std::sqrt(std::max(0.0, batch.cov_of_mean(2 * k + 1, 2 * k + 1)));
        e.n_samples = opt.n_samples;
        e.n_accepted = n_accepted;
        e.eps = opt.eps;
        e.proposal_scale = c;
        e.seed = opt.seed;
        e.ablated = observables[k].ablate_sign;
        e.ess = sum_abs_sq[k] > 0.0 ? sum_abs[k] * sum_abs[k] / sum_abs_sq[k] : 0.0;
        e.weight_bound_violations = violations[k];
        batch.estimates.push_back(e);
        batch.trace_a_sq.push_back(observables[k].a.trace_sq());
    }
    return batch;
}

MCEstimate mc_estimate(const opq::SignatureMetric& m, const opq::SourceMatrix& a, const MCOptions& opt) {
    return mc_estimate_batch(m, {MCObservable{a, opt.ablate_sign}}, opt).estimates.front();
}

MCEstimate sign_ablation_estimate(const opq::SignatureMetric& m, const opq::SourceMatrix& a, MCOptions opt) {
    opt.ablate_sign = true;
    return mc_estimate(m, a, opt);
}

namespace {

util::ComplexError pair_error(const MCBatch& batch, std::size_t i, std::size_t j, double ci, double cj) {
    std::vector<double> coeffs(batch.estimates.size(), 0.0);
    coeffs[i] += ci;
    coeffs[j] += cj;
    return util::contrast_error(batch.cov_of_mean, coeffs);
}

}  // namespace

Comparison compare_compensated(const MCBatch& batch, std::size_t i, std::size_t j) {
    const double ci = std::exp(batch.trace_a_sq.at(i));
    const double cj = std::exp(batch.trace_a_sq.at(j));
    Comparison out;
    out.difference = batch.compensated(i) - batch.compensated(j);
    out.error = pair_error(batch, i, j, ci, -cj);
    out.z_score = z_score(out.difference, out.error);
    return out;
}

std::vector<DerivativeResult> directional_derivative_tests(const opq::SignatureMetric& m,
                                                           const opq::SourceMatrix& a,
                                                           const std::vector<Eigen::MatrixXd>& directions,
                                                           double h, const MCOptions& opt) {
    if (!(h > 0.0)) throw InvalidArgument("derivative test: step must be positive");
    std::vector<MCObservable> obs;
    for (const Eigen::MatrixXd& dir : directions) {
        if (dir.rows() != m.n() || dir.cols() != m.n()) throw DimensionMismatch("direction has wrong size");
        if (opq::bsym_residual(dir, m) > 1e-12 * std::max(1.0, dir.cwiseAbs().maxCoeff()))
            throw SymmetryViolation("direction is not B-symmetric");
        for (double sgn : {1.0, -1.0}) {
            try {
                obs.push_back({opq::make_source(m, a.matrix() + sgn * h * dir), opt.ablate_sign});
            } catch (const NotPositive&) {
                throw StepTooLarge("A +- h Adot leaves the region where A s > 0");
            }
        }
    }
    const MCBatch batch = mc_estimate_batch(m, obs, opt);
    std::vector<DerivativeResult> out;
    for (std::size_t k = 0; k < directions.size(); ++k) {
        const std::size_t ip = 2 * k;
        const std::size_t im = 2 * k + 1;
        DerivativeResult r;
        r.derivative = (batch.compensated(ip) - batch.compensated(im)) / (2.0 * h);
        r.error = pair_error(batch, ip, im, std::exp(batch.trace_a_sq[ip]) / (2.0 * h),
                             -std::exp(batch.trace_a_sq[im]) / (2.0 * h));
        r.z_score = z_score(r.derivative, r.error);
        out.push_back(r);
    }
    return out;
}

DerivativeResult directional_derivative_test(const opq::SignatureMetric& m, const opq::SourceMatrix& a,
                                             const Eigen::MatrixXd& direction, double h, const MCOptions& opt) {
    return directional_derivative_tests(m, a, {direction}, h, opt).front();
}

}  // namespace hyperhs::hs
