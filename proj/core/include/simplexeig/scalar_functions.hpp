#pragma once

#include <vector>

namespace simplexeig {

// Scalar auxiliaries of the barycentric eigenvector system:
//   g(s) = ((n+1)s - 1)^{d-1} - (-1)^{d-1}
//   p(s) = g(s)/s, a polynomial of degree d-2.
class ScalarFunctions {
public:
    // Throws std::invalid_argument unless n >= 2 and d >= 2; checks the
    // construction identities g(0) = 0 and g(1) = n^{d-1} + (-1)^d.
    ScalarFunctions(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }

    double g(double s) const;
    double g_prime(double s) const;
    double p(double s) const;
    double p_prime(double s) const;

    // Monomial coefficients of p, index = power of s. Integer valued.
    const std::vector<double>& p_coefficients() const { return p_coeffs_; }

private:
    int n_;
    int d_;
    std::vector<double> p_coeffs_;
};

// Unique minimizer of p on (0, inf), located in [1/n, 2/(n+1)). Bisection
// on p' over [1/(n+1), 2/(n+1)] to 1e-14; requires even d >= 4
// (std::domain_error otherwise).
double s_star(const ScalarFunctions& f);

struct RootsOfR {
    // r identically zero; happens exactly for (n, d) = (2, 4), k1 = k2 = 1.
    bool degenerate = false;
    std::vector<double> roots; // ascending, inside (0, s_star)
};

// Real roots in the open interval (0, s_star) of the two-level matching
// polynomial r(s) = g(s)/s - k2 g((1 - k1 s)/k2) / (1 - k1 s). The caller
// filters roots by the companion level (1 - k1 s)/k2. Requires even
// d >= 4, k1, k2 >= 1, k1 + k2 <= n.
RootsOfR roots_of_r(const ScalarFunctions& f, int k1, int k2);

} // namespace simplexeig
