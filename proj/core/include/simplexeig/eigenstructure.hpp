#pragma once

#include "simplexeig/scalar_functions.hpp"
#include "simplexeig/tensor.hpp"

#include <string>
#include <vector>

namespace simplexeig {

// A structured zero of the barycentric system h(s) = 0 on the unit
// simplex: either one uniform level 1/|K| on a support K, or two distinct
// levels s_low/s_high on disjoint supports. Indices are 0-based; canonical
// solutions live on {0, ..., n-1}, symmetry-expanded ones on {0, ..., n}.
struct BarycentricSolution {
    enum class Kind { UniformOnK, TwoLevel };

    Kind kind = Kind::UniformOnK;
    std::vector<int> support_low;  // K for uniform, K1 for two-level
    std::vector<int> support_high; // empty for uniform, K2 for two-level
    double level_low = 0.0;        // 1/|K| or s_low
    double level_high = 0.0;       // unused or s_high

    // Full coordinate vector (s_1, ..., s_n); canonical solutions only.
    Eigen::VectorXd coordinates(int n) const;
    // The free coordinates (s_1, ..., s_{n-1}) used as the point in the
    // (n-1)-dimensional unit simplex.
    Eigen::VectorXd barycentric_point(int n) const;
    std::string label(int n) const;
};

struct BarycentricEnumeration {
    int n = 0;
    int d = 0;
    // d = 2 (any n) and (n, d) = (2, 4): h is the zero polynomial, so the
    // whole simplex solves the system.
    bool whole_simplex = false;
    std::vector<BarycentricSolution> solutions;
};

// Every canonical zero of h on the unit simplex: all uniform supports
// K subset of {1..n} for any d >= 3, plus the two-level solutions built
// from roots_of_r for even d >= 4. Throws std::invalid_argument for
// n < 2 or d < 2.
BarycentricEnumeration enumerate_barycentric(int n, int d);

// Closed-form normalized eigenvalue of a uniform support of size kSize;
// odd d uses the minus form, even d the plus form.
double eigenvalue_uniform(int n, int d, int k_size);

// Closed-form normalized eigenvalue of a two-level solution.
double eigenvalue_two_level(int n, int d, int k1, int k2, double s_low, double s_high);

struct EigenPair {
    Eigen::VectorXd vector; // unit; first nonzero component positive
    double mu = 0.0;
    double residual = 0.0;  // || T . v^{d-1} - mu v ||
    // Support after permutation, for the representative stored here.
    BarycentricSolution source;
};

// Either a whole-sphere continuum (d = 2 and (n, d) = (2, 4)) or the
// discrete, collinear-merged list of eigenpairs. Each merged record stands
// for the two normalized eigenpairs (v, mu) and (-v, (-1)^d mu).
struct EigenStructure {
    int n = 0;
    int d = 0;
    bool whole_sphere = false;
    double sphere_mu = 0.0;
    std::vector<EigenPair> pairs; // sorted by (mu descending, vector lex)

    int normalized_count() const { return 2 * static_cast<int>(pairs.size()); }
};

// Assembles the normalized eigenpair of one (possibly permuted) solution:
// v = sum_{k in K} v_k / ||...|| with the closed-form norms, mu from the
// closed-form eigenvalue, residual verified against contract_pow.
EigenPair assemble_eigenpair(const BarycentricSolution& solution, const SimplexTensor& t);

// Applies all support permutations of {1, ..., n+1} to the canonical
// solutions, deduplicates collinear vectors and verifies every residual.
EigenStructure expand_symmetry(const BarycentricEnumeration& canonical, int n, int d);

// enumerate_barycentric + eigenvalue formulas + expand_symmetry.
EigenStructure enumerate_eigenpairs(int n, int d);

} // namespace simplexeig
