// One line per acceptance criterion; exit status 1 if any of them fails.
#include "hyperhs/goe/goe.hpp"
#include "hyperhs/goe/sigma_rep.hpp"
#include "hyperhs/goe/spectral.hpp"
#include "hyperhs/hs/boundary.hpp"
#include "hyperhs/hs/closed_form.hpp"
#include "hyperhs/hs/convention.hpp"
#include "hyperhs/hs/mc.hpp"
#include "hyperhs/hs/quad11.hpp"
#include "hyperhs/opq/group.hpp"
#include "hyperhs/opq/jacobian.hpp"
#include "hyperhs/opq/motif.hpp"
#include "hyperhs/opq/random.hpp"
#include "hyperhs/opq/spectrum.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

using namespace hyperhs;
using cd = std::complex<double>;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

char buf[512];

template <class... Args>
std::string fmt(const char* f, Args... args) {
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

opq::SourceMatrix source11(double a11, double a12, double a22) {
    Eigen::MatrixXd m(2, 2);
    m << a11, a12, -a12, a22;
    return opq::make_source(opq::make_metric(1, 1), m);
}

Verdict closed_form() {
    util::Rng rng(1001);
    const auto m = opq::make_metric(1, 1);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const opq::SourceMatrix a = opq::random_source(m, rng, 1.0);
        const Eigen::MatrixXd& x = a.matrix();
        const double tr_sq = x(0, 0) * x(0, 0) + x(1, 1) * x(1, 1) - 2.0 * x(0, 1) * x(0, 1);
        const double target = std::pow(2.0, 1.5) * std::exp(-0.5 * tr_sq);
        worst = std::max(worst, std::abs(hs::closed_form_I11(a).normalized - target) / target);
    }
    return {worst <= 1e-12, fmt("max relative error %.2e over 100 sources (threshold 1e-12)", worst)};
}

Verdict boundary_decay() {
    double worst = 0.0;
    for (int i = 0; i <= 19; ++i)
        for (double b : {-3.0, -2.0, -1.0, -0.5, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0}) {
            const double eps = 0.05 + i * 0.05;
            worst = std::max(worst, hs::boundary_eta_integral(eps, b).relative_discrepancy());
        }
    // halvings eps -> eps/2 that stay inside [0.05, 1]
    double min_factor = std::numeric_limits<double>::infinity();
    double at = 0.0;
    for (double eps = 1.0; eps / 2.0 >= 0.05 - 1e-12; eps *= 0.9) {
        const double factor = hs::boundary_eta_analytic(eps, 1.0) / hs::boundary_eta_analytic(eps / 2.0, 1.0);
        if (factor < min_factor) {
            min_factor = factor;
            at = eps;
        }
    }
    const bool pass = worst <= 1e-8 && min_factor >= 10.0;
    return {pass, fmt("numeric vs analytic max %.2e (threshold 1e-8); smallest decay per halving %.3g at "
                      "eps %.3g -> %.3g (threshold 10)",
                      worst, min_factor, at, at / 2.0)};
}

Verdict quad_convergence() {
    const opq::SourceMatrix a = source11(1, 0, -1);
    const double target = std::exp(-2.0);
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    std::string errs;
    for (double eps : {0.2, 0.1, 0.05, 0.02}) {
        const double err = std::abs(hs::quad_verify_11(a, eps).normalized - target) / target;
        monotone = monotone && err <= prev;
        prev = err;
        errs += fmt("%s%.4f", errs.empty() ? "" : ", ", err);
    }
    return {monotone && prev < 0.02,
            fmt("relative errors %s (%s); %.4f at eps 0.02 (threshold 0.02)", errs.c_str(),
                monotone ? "non-increasing" : "not monotone", prev)};
}

hs::MCOptions mc_options(std::uint64_t seed) {
    hs::MCOptions o;
    o.eps = 0.1;
    o.n_samples = 1'000'000;
    o.seed = seed;
    return o;
}

Verdict sign_necessity() {
    const auto m = opq::make_metric(1, 1);
    const opq::SourceMatrix a1 = source11(1, 0, -1);
    const opq::SourceMatrix a2 = source11(1.5, 0, -1);
    const hs::MCBatch b = hs::mc_estimate_batch(m, {{a1, false}, {a2, false}, {a1, true}, {a2, true}},
                                                mc_options(1004));
    const double z_signed = hs::compare_compensated(b, 0, 1).z_score;
    const double z_ablated = hs::compare_compensated(b, 2, 3).z_score;
    return {z_signed < 3.0 && z_ablated > 5.0,
            fmt("signed z %.2f (threshold < 3), ablated z %.2f (threshold > 5)", z_signed, z_ablated)};
}

Eigen::MatrixXd random_direction(const opq::SignatureMetric& m, util::Rng& rng) {
    const Eigen::MatrixXd d = opq::random_bsym(m, rng, 1.0).matrix();
    return d / d.norm();
}

Verdict a_independence() {
    std::string detail;
    bool pass = true;
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}}) {
        const auto m = opq::make_metric(p, q);
        util::Rng rng(1005 + p + q);
        std::vector<Eigen::MatrixXd> dirs;
        for (int k = 0; k < 5; ++k) dirs.push_back(random_direction(m, rng));
        const auto res =
            hs::directional_derivative_tests(m, opq::make_source(m, m.matrix()), dirs, 0.05, mc_options(1005));
        double worst = 0.0;
        for (const auto& r : res) worst = std::max(worst, r.z_score);
        pass = pass && worst < 3.0;
        detail += fmt("%s(%d,%d) max z %.2f", detail.empty() ? "" : ", ", p, q, worst);
    }
    return {pass, detail + " over 5 directions each (threshold 3)"};
}

Verdict motif_parity() {
    std::size_t checked = 0, mismatched = 0;
    for (int n = 2; n <= 8; ++n)
        for (int p = 1; p < n; ++p) {
            const auto m = opq::make_metric(p, n - p);
            for (const opq::Motif& mo : opq::enumerate_motifs(p, n - p)) {
                std::vector<double> ordered;
                for (opq::EigenType t : {opq::EigenType::Space, opq::EigenType::Time})
                    for (int i = 0; i < n; ++i)
                        if (mo.symbols()[i] == t) ordered.push_back(static_cast<double>(n - i));
                ++checked;
                if (opq::eigenvalue_sign(ordered, m) != mo.sign()) ++mismatched;
            }
        }
    return {mismatched == 0, fmt("%zu motifs with p+q <= 8, %zu mismatches", checked, mismatched)};
}

Verdict classification_invariance() {
    util::Rng rng(1007);
    std::size_t pairs = 0, failures = 0;
    double worst = 0.0;
    const std::vector<std::pair<int, int>> sigs{{1, 1}, {1, 2}, {2, 2}};
    for (int k = 0; k < 1000; ++k) {
        const auto [p, q] = sigs[k % 3];
        const auto m = opq::make_metric(p, q);
        const opq::BSymMatrix r = opq::random_diagonalizable(m, rng);
        const opq::BSymMatrix rg = r.conjugate(opq::random_group_element(m, 2.0, rng));
        const auto c0 = opq::spectral_classify(r);
        const auto c1 = opq::spectral_classify(rg);
        const auto* d0 = std::get_if<opq::Diagonalizable>(&c0);
        const auto* d1 = std::get_if<opq::Diagonalizable>(&c1);
        ++pairs;
        if (!d0 || !d1 || !(d0->motif == d1->motif)) {
            ++failures;
            continue;
        }
        double diff = 0.0;
        for (int i = 0; i < m.n(); ++i) diff = std::max(diff, std::abs(d0->eigenvalues[i] - d1->eigenvalues[i]));
        worst = std::max(worst, diff);
        if (diff > 1e-8) ++failures;
    }
    return {failures == 0,
            fmt("%zu pairs, %zu failures, max eigenvalue shift %.2e (threshold 1e-8)", pairs, failures, worst)};
}

Eigen::MatrixXd random_symmetric(int n, util::Rng& rng, double norm) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) k(i, j) = k(j, i) = g(rng);
    return k * (norm / k.norm());
}

Verdict goe_fourier() {
    util::Rng rng(1008);
    std::uniform_real_distribution<double> norm(0.5, 3.0);
    double worst = 0.0;
    int count = 0;
    for (int n : {4, 8})
        for (int i = 0; i < 20; ++i) {
            goe::StochasticOptions o;
            o.n_samples = 100'000;
            o.seed = util::derive_seed(1008, "acceptance.fourier", count++);
            worst = std::max(worst,
                             goe::check_goe_fourier(goe::GOEConfig{n, 1.0}, random_symmetric(n, rng, norm(rng)), o)
                                 .z_score);
        }
    return {worst < 3.0, fmt("max z %.2f over %d random K at N in {4, 8} (threshold 3)", worst, count)};
}

Verdict sigma_ratio() {
    const goe::GOEConfig cfg{8, 1.0};
    const std::vector<goe::SpectralArgs> args{goe::SpectralArgs({cd(0.5, 1), cd(0.5, -1)}, 1),
                                              goe::SpectralArgs({cd(-0.5, 1), cd(-0.5, -1)}, 1),
                                              goe::SpectralArgs({cd(0.3, 0.8), cd(-0.2, -1.2)}, 1)};
    goe::StochasticOptions o;
    o.n_samples = 100'000;
    o.seed = 1009;
    const goe::FBatch mc = goe::F_mc_batch(args, cfg, o);
    std::vector<cd> rep;
    for (const auto& a : args) rep.push_back(goe::sigma_rep_F11(a, cfg).value);
    double z[2];
    for (std::size_t j : {1u, 2u}) z[j - 1] = std::abs(rep[j] / rep[0] - mc.ratio(j, 0)) / mc.ratio_error(j, 0).modulus();
    return {z[0] < 3.0 && z[1] < 3.0,
            fmt("z %.2f for (-0.5+-i)/(0.5+-i), z %.2f for (0.3+0.8i, -0.2-1.2i)/(0.5+-i) (threshold 3)", z[0],
                z[1])};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"closed-form reproduction", closed_form},
        {"boundary decay", boundary_decay},
        {"quadrature convergence", quad_convergence},
        {"sign necessity", sign_necessity},
        {"A-independence", a_independence},
        {"motif sign oracle", motif_parity},
        {"O(p,q) invariance of classification", classification_invariance},
        {"GOE Fourier characterization", goe_fourier},
        {"sigma-model ratio", sigma_ratio},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Verdict v = criteria[i].second();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !v.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
