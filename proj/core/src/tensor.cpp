#include "simplexeig/tensor.hpp"

#include "simplexeig/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace simplexeig {

SimplexTensor make_simplex_tensor(int n, int d)
{
    if (d < 2) throw std::invalid_argument("simplex tensor needs order d >= 2");
    SimplexFrame frame = build_simplex_frame(n);
    return SimplexTensor{std::move(frame), d, Eigen::VectorXd::Ones(n + 1)};
}

Eigen::VectorXd contract_pow(const SimplexTensor& t, const Eigen::VectorXd& x)
{
    const Eigen::MatrixXd& v = t.frame.vectors();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(t.dimension());
    for (int k = 0; k < t.frame.count(); ++k) {
        const double c = t.weights[k] * powi(v.col(k).dot(x), t.order - 1);
        out += c * v.col(k);
    }
    return out;
}

Eigen::MatrixXd contract_matrix(const SimplexTensor& t, const Eigen::VectorXd& x)
{
    const int n = t.dimension();
    const Eigen::MatrixXd& v = t.frame.vectors();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < t.frame.count(); ++k) {
        const double c = t.weights[k] * powi(v.col(k).dot(x), t.order - 2);
        for (int i = 0; i < n; ++i) {
            out(i, i) += c * v(i, k) * v(i, k);
            for (int j = i + 1; j < n; ++j) {
                const double e = c * v(i, k) * v(j, k);
                out(i, j) += e;
                out(j, i) += e;
            }
        }
    }
    return out;
}

double energy(const SimplexTensor& t, const Eigen::VectorXd& x)
{
    double out = 0.0;
    for (int k = 0; k < t.frame.count(); ++k)
        out += t.weights[k] * powi(t.frame.vectors().col(k).dot(x), t.order);
    return out;
}

std::vector<double> dense_tensor(const SimplexTensor& t)
{
    const int n = t.dimension();
    const int d = t.order;
    double entries = 1.0;
    for (int j = 0; j < d; ++j) entries *= n;
    if (entries > 1e7) throw std::length_error("dense_tensor: n^d exceeds the 10^7 entry guard");

    const auto size = static_cast<std::size_t>(entries);
    std::vector<double> dense(size, 0.0);
    std::vector<int> idx(d, 0);
    const Eigen::MatrixXd& v = t.frame.vectors();
    for (std::size_t flat = 0; flat < size; ++flat) {
        double entry = 0.0;
        for (int k = 0; k < t.frame.count(); ++k) {
            double prod = t.weights[k];
            for (int j = 0; j < d; ++j) prod *= v(idx[j], k);
            entry += prod;
        }
        dense[flat] = entry;
        for (int j = d - 1; j >= 0; --j) {
            if (++idx[j] < n) break;
            idx[j] = 0;
        }
    }
    return dense;
}

Eigen::VectorXd dense_contract_pow(const SimplexTensor& t, const std::vector<double>& dense,
                                   const Eigen::VectorXd& x)
{
    const int n = t.dimension();
    const int d = t.order;
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    std::vector<int> idx(d, 0);
    for (std::size_t flat = 0; flat < dense.size(); ++flat) {
        double prod = dense[flat];
        for (int j = 0; j < d - 1; ++j) prod *= x[idx[j]];
        out[idx[d - 1]] += prod;
        for (int j = d - 1; j >= 0; --j) {
            if (++idx[j] < n) break;
            idx[j] = 0;
        }
    }
    return out;
}

} // namespace simplexeig
