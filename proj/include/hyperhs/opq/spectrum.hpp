#pragma once

#include "hyperhs/opq/bsym.hpp"
#include "hyperhs/opq/motif.hpp"

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hyperhs::opq {

inline constexpr double kDefaultClassifyTol = 1e-9;

struct Diagonalizable {
    std::vector<double> eigenvalues;  // descending
    std::vector<EigenType> types;     // parallel to eigenvalues
    Motif motif;
    // Columns: space-like eigenvectors (descending eigenvalue), then time-like
    // (descending). B-normalised, so g^t s g = s.
    Eigen::MatrixXd transform;
    // |B(v, v)| of each unit-Euclidean eigenvector, parallel to eigenvalues.
    std::vector<double> bnorms;
};

enum class BoundaryReason { NullEigenvector, CrossTypeTie, TypeCount, IllConditioned };

struct Boundary {
    BoundaryReason reason;
    std::string detail;
    std::vector<double> eigenvalues;  // real parts, descending
    std::vector<double> bnorms;       // parallel to eigenvalues
};

struct NonDiagonalizable {
    int complex_pair_count;
    std::vector<std::complex<double>> eigenvalues;
};

using SpectrumClassification = std::variant<Diagonalizable, Boundary, NonDiagonalizable>;

// Full eigensystem of R, classified by a single tolerance applied to the
// imaginary parts, the eigenvector B-norms and cross-type eigenvalue gaps
// (the first and last relative to max(1, max|R|)). Throws
// EigenSolverFailure if the eigensolver itself does not converge.
SpectrumClassification spectral_classify(const BSymMatrix& r, double tol = kDefaultClassifyTol);

enum class SpectrumStatus { Diagonalizable, Boundary, NonDiagonalizable };

std::string to_string(SpectrumStatus status);
std::string to_string(BoundaryReason reason);

// Flat view of a classification for tables and path diagnostics.
struct ClassificationSummary {
    SpectrumStatus status;
    std::optional<Motif> motif;
    int sign = 0;                     // motif sign, 0 off the domain
    std::vector<double> eigenvalues;  // real parts, descending
    std::vector<double> bnorms;       // empty for NonDiagonalizable
    int complex_pair_count = 0;
    std::string detail;
};

ClassificationSummary summarize(const SpectrumClassification& c);

// sgn(sigma(R)) for R in D, 0 otherwise.
int domain_sign(const SpectrumClassification& c);

}  // namespace hyperhs::opq
