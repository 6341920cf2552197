#pragma once

#include "simplexeig/eigenstructure.hpp"

#include <optional>

namespace simplexeig {

// Contraction norms below this floor make the power map undefined; this
// happens exactly near the zero-eigenvalue directions of odd d.
inline constexpr double kContractionFloor = 1e-14;

// phi(x) = T . x^{d-1} / ||T . x^{d-1}||; nullopt when the norm is below
// the floor.
std::optional<Eigen::VectorXd> phi(const SimplexTensor& t, const Eigen::VectorXd& x);

enum class TpiStatus { Converged, MaxIterations, MapUndefined };

struct TpiOptions {
    double tol = 1e-12;
    int max_iter = 10000;
};

struct TpiResult {
    TpiStatus status = TpiStatus::MaxIterations;
    Eigen::VectorXd limit; // last iterate
    int iterations = 0;
    int matched_eigenpair = -1; // index into EigenStructure::pairs
};

// Iterates phi from a unit start vector. Convergence is tested on the
// line, min(||v' - v||, ||v' + v||) < tol, which absorbs the odd-d sign
// alternation at negative eigenvalues. When `match` is given, the limit is
// matched to the nearest eigenvector direction within 10 * tol.
TpiResult tpi_run(const SimplexTensor& t, const Eigen::VectorXd& x0, const TpiOptions& opts = {},
                  const EigenStructure* match = nullptr);

// Jacobian of phi at x:
//   (d-1)/||F|| (I - F F^T/||F||^2) T . x^{d-2},  F = T . x^{d-1}.
// At a normalized eigenvector this reduces to the symmetric matrix
// (d-1)/|mu| (T . x^{d-2} - mu x x^T) with phi'(x) x = 0; away from
// eigenvectors the product is generally not symmetric. nullopt when the
// contraction norm is below the floor.
std::optional<Eigen::MatrixXd> jacobian(const SimplexTensor& t, const Eigen::VectorXd& x);

// Largest absolute eigenvalue of a symmetric matrix via cyclic Jacobi
// rotations (closed forms for n <= 2). Throws std::invalid_argument when
// the input is asymmetric beyond 1e-10.
double spectral_radius_sym(const Eigen::MatrixXd& m);

enum class RobustnessClass { Robust, NonRobust, Marginal, Undefined };

const char* to_string(RobustnessClass c);

inline constexpr double kRobustnessMargin = 1e-9;
inline constexpr double kZeroEigenvalueTol = 1e-12;

struct RobustnessRecord {
    BarycentricSolution solution; // canonical barycentric label
    EigenPair pair;
    double spectral_radius = 0.0; // NaN when Undefined
    RobustnessClass robustness = RobustnessClass::Undefined;
};

struct ClassificationReport {
    int n = 0;
    int d = 0;
    // d = 2 and (n, d) = (2, 4): the Jacobian spectral radius equals 1 at
    // every point of the sphere, reported as a continuum instead of rows.
    bool continuum = false;
    double mu = 0.0;
    std::vector<RobustnessRecord> records; // one per canonical solution
};

ClassificationReport classify_all(int n, int d);

enum class RadiusFamily { Vertex, Mixed };

// n = 2 closed forms: 3(d-1)/(2^{d-1}+1) for the vertex family at even d,
// 3(d-1)/(2^{d-1}-1) at odd d, (d-1)/3 for the mixed family (even d >= 6).
double closed_form_radius_n2(int d, RadiusFamily family);

} // namespace simplexeig
