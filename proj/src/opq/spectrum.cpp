#include "hyperhs/opq/spectrum.hpp"

#include "hyperhs/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyperhs::opq {

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::vector<double> permuted(const std::vector<double>& v, const std::vector<int>& order) {
    std::vector<double> out;
    out.reserve(order.size());
    for (int k : order) out.push_back(v[static_cast<std::size_t>(k)]);
    return out;
}

}  // namespace

SpectrumClassification spectral_classify(const BSymMatrix& r, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("spectral_classify: tol must be positive");
    const SignatureMetric& m = r.metric();
    const int n = m.n();
    const Eigen::MatrixXd& rm = r.matrix();
    const double scale = std::max(1.0, max_abs(rm));

    Eigen::EigenSolver<Eigen::MatrixXd> es(rm, true);
    if (es.info() != Eigen::Success) throw EigenSolverFailure("eigensolver did not converge");

    const Eigen::VectorXcd evals = es.eigenvalues();
    int n_complex = 0;
    for (int k = 0; k < n; ++k)
        if (std::abs(evals[k].imag()) >= tol * scale) ++n_complex;
    if (n_complex > 0) {
        std::vector<std::complex<double>> ev(evals.data(), evals.data() + n);
        std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
            return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
        });
        return NonDiagonalizable{std::max(1, n_complex / 2), std::move(ev)};
    }

    Eigen::MatrixXd vecs = es.eigenvectors().real();
    std::vector<double> lambda(static_cast<std::size_t>(n));
    std::vector<double> bn(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        lambda[k] = evals[k].real();
        vecs.col(k).normalize();
        bn[k] = bform(vecs.col(k), vecs.col(k), m);
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lambda[a] > lambda[b]; });
    std::vector<double> abs_bn(bn.size());
    std::transform(bn.begin(), bn.end(), abs_bn.begin(), [](double x) { return std::abs(x); });
    const std::vector<double> sorted_lambda = permuted(lambda, order);
    const std::vector<double> sorted_bn = permuted(abs_bn, order);

    auto boundary = [&](BoundaryReason why, std::string detail) -> SpectrumClassification {
        return Boundary{why, std::move(detail), sorted_lambda, sorted_bn};
    };

    for (int k = 0; k < n; ++k)
        if (abs_bn[k] <= tol) return boundary(BoundaryReason::NullEigenvector, "eigenvector B-norm below tolerance");

    std::vector<EigenType> type(static_cast<std::size_t>(n));
    int n_space = 0;
    for (int k = 0; k < n; ++k) {
        type[k] = bn[k] > 0.0 ? EigenType::Space : EigenType::Time;
        n_space += type[k] == EigenType::Space;
    }
    if (n_space != m.p()) return boundary(BoundaryReason::TypeCount, "space/time counts differ from signature");

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (type[a] != type[b] && std::abs(lambda[a] - lambda[b]) < tol * scale)
                return boundary(BoundaryReason::CrossTypeTie, "space-like and time-like eigenvalues coincide");

    // Eigenvectors of distinct eigenvalues are B-orthogonal already. Inside a
    // cluster of (nearly) equal same-type eigenvalues the solver basis is
    // arbitrary, so orthogonalise it with respect to B, which is definite there.
    const double cluster_gap = std::sqrt(tol) * scale;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const int k = order[pos];
        for (std::size_t prev = 0; prev < pos; ++prev) {
            const int j = order[prev];
            if (type[j] != type[k] || std::abs(lambda[j] - lambda[k]) >= cluster_gap) continue;
            const double sj = type[j] == EigenType::Space ? 1.0 : -1.0;
            vecs.col(k) -= sj * bform(vecs.col(j), vecs.col(k), m) * vecs.col(j);
        }
        const double norm = bform(vecs.col(k), vecs.col(k), m);
        const double expected = type[k] == EigenType::Space ? 1.0 : -1.0;
        if (!(norm * expected > tol * vecs.col(k).squaredNorm()))
            return boundary(BoundaryReason::IllConditioned, "degenerate eigenspace is not B-definite");
        vecs.col(k) /= std::sqrt(std::abs(norm));
        Eigen::Index imax = 0;
        vecs.col(k).cwiseAbs().maxCoeff(&imax);
        if (vecs(imax, k) < 0.0) vecs.col(k) = -vecs.col(k);
    }

    std::vector<EigenType> sorted_types;
    for (int k : order) sorted_types.push_back(type[k]);

    Eigen::MatrixXd g(n, n);
    Eigen::VectorXd diag(n);
    int col = 0;
    for (EigenType want : {EigenType::Space, EigenType::Time})
        for (int k : order)
            if (type[k] == want) {
                g.col(col) = vecs.col(k);
                diag[col] = lambda[k];
                ++col;
            }

    const Eigen::MatrixXd s = m.matrix();
    const double gscale = std::max(1.0, max_abs(g));
    if (max_abs(g.transpose() * s * g - s) > 1e-8 * gscale * gscale)
        return boundary(BoundaryReason::IllConditioned, "B-normalised eigenvectors do not form an O(p,q) element");
    const Eigen::MatrixXd recon = g * diag.asDiagonal() * s * g.transpose() * s;
    if (max_abs(recon - rm) > 1e-8 * scale)
        return boundary(BoundaryReason::IllConditioned, "eigen-decomposition does not reconstruct R");

    return Diagonalizable{sorted_lambda, sorted_types, Motif(sorted_types, m.p(), m.q()), std::move(g), sorted_bn};
}

std::string to_string(SpectrumStatus status) {
    switch (status) {
        case SpectrumStatus::Diagonalizable: return "diagonalizable";
        case SpectrumStatus::Boundary: return "boundary";
        case SpectrumStatus::NonDiagonalizable: return "non_diagonalizable";
    }
    return "unknown";
}

std::string to_string(BoundaryReason reason) {
    switch (reason) {
        case BoundaryReason::NullEigenvector: return "null_eigenvector";
        case BoundaryReason::CrossTypeTie: return "cross_type_tie";
        case BoundaryReason::TypeCount: return "type_count";
        case BoundaryReason::IllConditioned: return "ill_conditioned";
    }
    return "unknown";
}

ClassificationSummary summarize(const SpectrumClassification& c) {
    ClassificationSummary out;
    if (const auto* d = std::get_if<Diagonalizable>(&c)) {
        out.status = SpectrumStatus::Diagonalizable;
        out.motif = d->motif;
        out.sign = d->motif.sign();
        out.eigenvalues = d->eigenvalues;
        out.bnorms = d->bnorms;
    } else if (const auto* b = std::get_if<Boundary>(&c)) {
        out.status = SpectrumStatus::Boundary;
        out.eigenvalues = b->eigenvalues;
        out.bnorms = b->bnorms;
        out.detail = to_string(b->reason);
    } else {
        const auto& nd = std::get<NonDiagonalizable>(c);
        out.status = SpectrumStatus::NonDiagonalizable;
        out.complex_pair_count = nd.complex_pair_count;
        for (auto z : nd.eigenvalues) out.eigenvalues.push_back(z.real());
        out.detail = "complex_pairs=" + std::to_string(nd.complex_pair_count);
    }
    return out;
}

int domain_sign(const SpectrumClassification& c) {
    const auto* d = std::get_if<Diagonalizable>(&c);
    return d ? d->motif.sign() : 0;
}

}  // namespace hyperhs::opq
