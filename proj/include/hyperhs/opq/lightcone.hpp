#pragma once

#include "hyperhs/opq/bsym.hpp"

namespace hyperhs::opq {

// Coordinates of a 2x2 B-symmetric matrix in the null basis e+ = (1,1),
// e- = (1,-1):  R e+ = lambda e+ + eta e-,  R e- = lambda e- + xi e+.
// O(1,1)-diagonalizable iff xi * eta > 0.
struct LightconeCoords {
    double lambda;
    double xi;
    double eta;
};

LightconeCoords lightcone(const BSymMatrix& r);
BSymMatrix from_lightcone(const LightconeCoords& c);

}  // namespace hyperhs::opq
