#pragma once

#include "hyperhs/opq/bsym.hpp"
#include "hyperhs/util/parallel.hpp"

namespace hyperhs::opq {

// Block entries uniform in [-scale, scale].
BSymMatrix random_bsym(const SignatureMetric& m, util::Rng& rng, double scale = 1.0);

// A = M s with M = L L^t + floor * Id, L entries uniform in [-scale, scale];
// then A s = M is positive definite with margin at least floor.
SourceMatrix random_source(const SignatureMetric& m, util::Rng& rng, double scale = 1.0, double floor = 0.2);

// h diag(lambda) h^{-1} with h = random_group_element(m, rapidity, rng) and
// distinct eigenvalues uniform in [-spread, spread]: O(p,q)-diagonalizable by
// construction. The eigenvalues are kept at least min_gap apart.
BSymMatrix random_diagonalizable(const SignatureMetric& m, util::Rng& rng, double spread = 2.0,
                                 double rapidity = 1.0, double min_gap = 0.05);

}  // namespace hyperhs::opq
