#include "hyperhs/error.hpp"
#include "hyperhs/util/moments.hpp"
#include "hyperhs/util/parallel.hpp"
#include "hyperhs/util/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

using namespace hyperhs;
using namespace hyperhs::util;

TEST_CASE("splitmix64 and fnv1a reproduce their reference values") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("derived seeds separate streams and chunks") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t chunk = 0; chunk < 64; ++chunk) {
        seen.insert(derive_seed(42, "one", chunk));
        seen.insert(derive_seed(42, "two", chunk));
        seen.insert(derive_seed(43, "one", chunk));
    }
    CHECK(seen.size() == 3 * 64);
    CHECK(derive_seed(5, "x", 3) == derive_seed(5, "x", 3));
}

TEST_CASE("run_chunks returns chunk results in order for any thread count") {
    ChunkPlan plan{1000, 64, 1};
    std::function<std::size_t(const Chunk&)> body = [](const Chunk& c) {
        Rng rng(derive_seed(9, "t", c.index));
        std::size_t acc = c.begin * 31 + c.end;
        for (std::size_t i = c.begin; i < c.end; ++i) acc ^= rng();
        return acc;
    };
    const auto serial = run_chunks(plan, body);
    CHECK(serial.size() == 16);
    plan.threads = 4;
    CHECK(run_chunks(plan, body) == serial);
}

TEST_CASE("run_chunks covers the sample range exactly once") {
    ChunkPlan plan{1001, 100, 3};
    std::function<std::pair<std::size_t, std::size_t>(const Chunk&)> body = [](const Chunk& c) {
        return std::make_pair(c.begin, c.end);
    };
    const auto ranges = run_chunks(plan, body);
    REQUIRE(ranges.size() == 11);
    std::size_t expect = 0;
    for (const auto& [b, e] : ranges) {
        CHECK(b == expect);
        expect = e;
    }
    CHECK(expect == 1001);
}

TEST_CASE("exceptions inside workers reach the caller") {
    ChunkPlan plan{100, 10, 4};
    std::function<int(const Chunk&)> body = [](const Chunk& c) -> int {
        if (c.index == 7) throw std::runtime_error("boom");
        return 0;
    };
    CHECK_THROWS_AS(run_chunks(plan, body), std::runtime_error);
}

TEST_CASE("moment accumulator matches a two-pass computation") {
    Rng rng(1);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Eigen::Vector3d> xs;
    for (int i = 0; i < 500; ++i) xs.push_back({n(rng), 2.0 + n(rng), n(rng) + 0.5 * xs.size() * 1e-3});
    MomentAccumulator acc(3);
    for (const auto& x : xs) acc.add({x.data(), 3});

    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& x : xs) mean += x;
    mean /= xs.size();
    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (const auto& x : xs) cov += (x - mean) * (x - mean).transpose();
    cov /= (xs.size() - 1.0) * xs.size();

    CHECK((acc.mean() - mean).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((acc.covariance_of_mean() - cov).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("merging accumulators equals a single pass") {
    Rng rng(2);
    std::normal_distribution<double> n(1.0, 3.0);
    MomentAccumulator all(2), left(2), right(2);
    for (int i = 0; i < 300; ++i) {
        const double x[2] = {n(rng), n(rng)};
        all.add(x);
        (i < 120 ? left : right).add(x);
    }
    left.merge(right);
    CHECK(left.count() == all.count());
    CHECK((left.mean() - all.mean()).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((left.covariance_of_mean() - all.covariance_of_mean()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("complex means are stored as interleaved pairs") {
    MomentAccumulator acc(4);
    const std::complex<double> z[2] = {{1.0, 2.0}, {-3.0, 0.5}};
    acc.add_complex(z);
    CHECK(acc.complex_mean(0) == std::complex<double>(1.0, 2.0));
    CHECK(acc.complex_mean(1) == std::complex<double>(-3.0, 0.5));
}

TEST_CASE("contrast error is the standard deviation of the linear combination") {
    Eigen::MatrixXd cov(4, 4);
    cov << 4, 0.1, 1, 0,
           0.1, 9, 0, 2,
           1, 0, 1, 0,
           0, 2, 0, 16;
    const double c[2] = {1.0, -2.0};
    const ComplexError e = contrast_error(cov, c);
    CHECK(e.re == doctest::Approx(std::sqrt(4 + 4 * 1 - 2 * 2 * 1)));
    CHECK(e.im == doctest::Approx(std::sqrt(9 + 4 * 16 - 2 * 2 * 2)));
    const double wrong[3] = {1, 1, 1};
    CHECK_THROWS_AS(contrast_error(cov, wrong), DimensionMismatch);
}

TEST_CASE("ratio error agrees with a finite-difference Jacobian") {
    Eigen::VectorXd mean(4);
    mean << 1.5, -0.3, 0.7, 0.9;
    Eigen::MatrixXd cov = Eigen::MatrixXd::Identity(4, 4) * 0.01;
    cov(0, 2) = cov(2, 0) = 0.004;
    cov(1, 3) = cov(3, 1) = -0.002;
    auto ratio = [](const Eigen::VectorXd& m) {
        return std::complex<double>(m[0], m[1]) / std::complex<double>(m[2], m[3]);
    };
    Eigen::Matrix<double, 2, 4> jac;
    for (int k = 0; k < 4; ++k) {
        Eigen::VectorXd up = mean, dn = mean;
        up[k] += 1e-6;
        dn[k] -= 1e-6;
        const auto d = (ratio(up) - ratio(dn)) / 2e-6;
        jac(0, k) = d.real();
        jac(1, k) = d.imag();
    }
    const Eigen::Matrix2d var = jac * cov * jac.transpose();
    const ComplexError e = ratio_error(mean, cov, 0, 1);
    CHECK(e.re == doctest::Approx(std::sqrt(var(0, 0))).epsilon(1e-6));
    CHECK(e.im == doctest::Approx(std::sqrt(var(1, 1))).epsilon(1e-6));
}

TEST_CASE("composite Gauss-Legendre is exact for polynomials up to degree 31") {
    const auto nodes = composite_gauss_legendre(-1.0, 2.0, 3);
    CHECK(nodes.size() == 3 * kGaussLegendreOrder);
    for (int deg : {0, 1, 7, 20, 31}) {
        double sum = 0.0;
        for (const auto& n : nodes) sum += n.w * std::pow(n.x, deg);
        const double exact = (std::pow(2.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
        CHECK(sum == doctest::Approx(exact).epsilon(1e-13));
    }
}

TEST_CASE("adaptive quadrature on finite and infinite ranges") {
    const auto g = integrate_adaptive([](double x) { return std::exp(-x * x); }, -kInf, kInf);
    CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    const auto c = integrate_adaptive(
        [](double x) { return std::exp(std::complex<double>(-x * x, 2.0 * x)); }, -kInf, kInf);
    // int exp(-x^2 + 2ix) dx = sqrt(pi) e^{-1}
    CHECK(std::abs(c.value - std::sqrt(std::numbers::pi) * std::exp(-1.0)) < 1e-11);
}

TEST_CASE("adaptive quadrature reports non-convergence") {
    AdaptiveOptions opt;
    opt.max_depth = 1;
    opt.rel_tol = 1e-14;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(200.0 * x) + 1.0; }, 0.0, 10.0, opt),
                    QuadratureError);
}
