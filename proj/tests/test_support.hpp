#pragma once

#include "simplexeig/dynamics.hpp"
#include "simplexeig/rng.hpp"
#include "simplexeig/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace test_support {

using namespace simplexeig;

// Central finite-difference Jacobian of phi; the independent oracle for
// the analytic formula.
inline Eigen::MatrixXd fd_jacobian_of_phi(const SimplexTensor& t, const Eigen::VectorXd& x,
                                          double step = 1e-6)
{
    const int n = t.dimension();
    Eigen::MatrixXd j(n, n);
    for (int c = 0; c < n; ++c) {
        Eigen::VectorXd xp = x, xm = x;
        xp[c] += step;
        xm[c] -= step;
        const auto fp = phi(t, xp);
        const auto fm = phi(t, xm);
        if (!fp || !fm) throw std::runtime_error("phi undefined at a finite-difference stencil point");
        j.col(c) = (*fp - *fm) / (2.0 * step);
    }
    return j;
}

inline Eigen::VectorXd fd_gradient_of_energy(const SimplexTensor& t, const Eigen::VectorXd& x)
{
    const double step = 1e-5 * std::max(1.0, x.norm());
    const int n = t.dimension();
    Eigen::VectorXd grad(n);
    for (int c = 0; c < n; ++c) {
        Eigen::VectorXd xp = x, xm = x;
        xp[c] += step;
        xm[c] -= step;
        grad[c] = (energy(t, xp) - energy(t, xm)) / (2.0 * step);
    }
    return grad;
}

inline Eigen::MatrixXd fd_hessian_of_energy(const SimplexTensor& t, const Eigen::VectorXd& x,
                                            double step = 1e-4)
{
    const int n = t.dimension();
    Eigen::MatrixXd hess(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Eigen::VectorXd xpp = x, xpm = x, xmp = x, xmm = x;
            xpp[a] += step; xpp[b] += step;
            xpm[a] += step; xpm[b] -= step;
            xmp[a] -= step; xmp[b] += step;
            xmm[a] -= step; xmm[b] -= step;
            hess(a, b) =
                (energy(t, xpp) - energy(t, xpm) - energy(t, xmp) + energy(t, xmm)) / (4.0 * step * step);
        }
    }
    return hess;
}

inline double line_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    return std::min((a - b).norm(), (a + b).norm());
}

// Random unit vector staying clear of every eigenvector line and of the
// undefined set of phi.
inline Eigen::VectorXd random_non_eigenvector(Rng& rng, const SimplexTensor& t,
                                              const EigenStructure& structure, double clearance = 5e-2)
{
    while (true) {
        Eigen::VectorXd x = rng.unit_vector(t.dimension());
        if (contract_pow(t, x).norm() < 1e-3) continue;
        bool clear = true;
        for (const EigenPair& pair : structure.pairs) {
            if (line_dist(x, pair.vector) < clearance) {
                clear = false;
                break;
            }
        }
        if (clear) return x;
    }
}

} // namespace test_support
