#include "simplexeig/frame.hpp"

#include <cmath>
#include <stdexcept>

namespace simplexeig {

SimplexFrame build_simplex_frame(int n)
{
    if (n < 2) throw std::invalid_argument("simplex frame needs dimension n >= 2");

    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n + 1);
    const double dn = static_cast<double>(n);
    const double head = std::sqrt(1.0 + 1.0 / dn);
    const double shift = (std::sqrt(dn + 1.0) - 1.0) / (dn * std::sqrt(dn));
    for (int k = 0; k < n; ++k) {
        v.col(k).setConstant(-shift);
        v(k, k) += head;
    }
    v.col(n).setConstant(-1.0 / std::sqrt(dn));
    return SimplexFrame(n, std::move(v));
}

Eigen::MatrixXd gramian(const SimplexFrame& frame)
{
    const int r = frame.count();
    Eigen::MatrixXd g(r, r);
    for (int j = 0; j < r; ++j) {
        g(j, j) = frame.vectors().col(j).squaredNorm();
        for (int k = j + 1; k < r; ++k) {
            const double inner = frame.vectors().col(j).dot(frame.vectors().col(k));
            g(j, k) = inner;
            g(k, j) = inner;
        }
    }
    return g;
}

FrameCheck check_frame(const SimplexFrame& frame)
{
    const int n = frame.dimension();
    const Eigen::MatrixXd& v = frame.vectors();

    FrameCheck out{0.0, 0.0, 0.0, 0.0};
    const Eigen::MatrixXd g = gramian(frame);
    for (int j = 0; j <= n; ++j) {
        out.unit_norm_error = std::max(out.unit_norm_error, std::abs(v.col(j).norm() - 1.0));
        for (int k = 0; k <= n; ++k) {
            if (j == k) continue;
            out.gramian_error = std::max(out.gramian_error, std::abs(g(j, k) + 1.0 / n));
        }
    }
    out.vector_sum_error = v.rowwise().sum().cwiseAbs().maxCoeff();

    Eigen::MatrixXd op = v * v.transpose();
    op.diagonal().array() -= (n + 1.0) / n;
    out.frame_operator_error = op.cwiseAbs().maxCoeff();
    return out;
}

} // namespace simplexeig
