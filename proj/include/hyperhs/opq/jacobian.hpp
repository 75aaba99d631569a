#pragma once

#include "hyperhs/opq/metric.hpp"

#include <span>

namespace hyperhs::opq {

// J(λ) = Π_{i<j} |λ_i - λ_j|
double jacobian_J(std::span<const double> lambdas);

// Π_{i<=p<j} sign(λ_i - λ_j), with the first p entries space-like and the
// last q time-like. Equals sgn(σ(λ)) for distinct cross-type pairs.
int eigenvalue_sign(std::span<const double> lambdas, const SignatureMetric& m);

// J'(λ) = J(λ) · eigenvalue_sign(λ)
double jacobian_Jprime(std::span<const double> lambdas, const SignatureMetric& m);

}  // namespace hyperhs::opq
