#include "simplexeig/rng.hpp"

#include <cmath>
#include <numbers>

namespace simplexeig {

double Rng::next_gaussian()
{
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

Eigen::VectorXd Rng::unit_vector(int n)
{
    Eigen::VectorXd v(n);
    while (true) {
        for (int i = 0; i < n; ++i) v[i] = next_gaussian();
        const double norm = v.norm();
        if (norm > 1e-8) return v / norm;
    }
}

} // namespace simplexeig
