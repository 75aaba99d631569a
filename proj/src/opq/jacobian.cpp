#include "hyperhs/opq/jacobian.hpp"

#include "hyperhs/error.hpp"

#include <cmath>

namespace hyperhs::opq {

double jacobian_J(std::span<const double> lambdas) {
    double j = 1.0;
    for (std::size_t a = 0; a < lambdas.size(); ++a)
        for (std::size_t b = a + 1; b < lambdas.size(); ++b) j *= std::abs(lambdas[a] - lambdas[b]);
    return j;
}

int eigenvalue_sign(std::span<const double> lambdas, const SignatureMetric& m) {
    if (static_cast<int>(lambdas.size()) != m.n())
        throw DimensionMismatch("eigenvalue list length does not match signature");
    const auto p = static_cast<std::size_t>(m.p());
    int sign = 1;
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = p; j < lambdas.size(); ++j) {
            const double d = lambdas[i] - lambdas[j];
            if (d == 0.0) return 0;
            if (d < 0.0) sign = -sign;
        }
    }
    return sign;
}

double jacobian_Jprime(std::span<const double> lambdas, const SignatureMetric& m) {
    return jacobian_J(lambdas) * eigenvalue_sign(lambdas, m);
}

}  // namespace hyperhs::opq
