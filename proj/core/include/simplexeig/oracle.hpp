#pragma once

#include "simplexeig/eigenstructure.hpp"

namespace simplexeig {

struct OracleZeroSet {
    int n = 0;
    int d = 0;
    bool continuum = false;             // h identically zero (d = 2, (2,4))
    std::vector<Eigen::VectorXd> zeros; // points in the unit simplex, ||h|| <= 1e-12
    int dropped = 0;                    // grid candidates Newton failed to refine
};

// Brute-force zero set of h over the (n-1)-simplex: uniform grid scan for
// local minima of ||h||, damped Newton refinement with a finite-difference
// Jacobian, deduplication within 1e-8. Requires n in {2, 3, 4} and
// grid >= 100.
OracleZeroSet brute_force_zeros(int n, int d, int grid);

struct ZeroMatchReport {
    bool continuum_oracle = false;
    bool continuum_enumeration = false;
    int matched = 0;
    std::vector<Eigen::VectorXd> unmatched_oracle;
    std::vector<Eigen::VectorXd> unmatched_enumeration;

    bool clean() const
    {
        if (continuum_oracle || continuum_enumeration)
            return continuum_oracle == continuum_enumeration;
        return unmatched_oracle.empty() && unmatched_enumeration.empty();
    }
};

// One-to-one matching of oracle zeros against the canonical enumeration at
// distance <= 1e-6.
ZeroMatchReport compare_with_enumeration(const OracleZeroSet& oracle,
                                         const BarycentricEnumeration& canonical);

} // namespace simplexeig
