#pragma once

#include "hyperhs/opq/spectrum.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hyperhs::opq {

struct PathPoint {
    double t;
    ClassificationSummary summary;
};

struct NormApproach {
    double t;
    std::array<double, 2> smallest_bnorms;  // ascending
};

struct CollisionReport {
    std::vector<PathPoint> points;                         // t = k / steps, k = 0..steps
    std::optional<std::array<double, 2>> crossing;         // first grid interval leaving D_sigma(R0)
    std::optional<double> refined_t;                        // bisection estimate of the exit point
    std::vector<NormApproach> approach;                     // diagnostics on the inside, increasing t
};

// Classifies R(t) = (1 - t) R0 + t R1 on a uniform grid and locates the first
// exit from the Pruisken-Schafer domain of R0. Leaving means a classification
// that is not Diagonalizable or carries a different motif; same-type
// eigenvalue collisions are not exits.
CollisionReport trace_collision_path(const BSymMatrix& r0, const BSymMatrix& r1, int steps,
                                     double tol = kDefaultClassifyTol);

}  // namespace hyperhs::opq
