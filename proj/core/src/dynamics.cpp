#include "simplexeig/dynamics.hpp"

#include "simplexeig/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace simplexeig {

std::optional<Eigen::VectorXd> phi(const SimplexTensor& t, const Eigen::VectorXd& x)
{
    Eigen::VectorXd f = contract_pow(t, x);
    const double norm = f.norm();
    if (norm <= kContractionFloor) return std::nullopt;
    return f / norm;
}

TpiResult tpi_run(const SimplexTensor& t, const Eigen::VectorXd& x0, const TpiOptions& opts,
                  const EigenStructure* match)
{
    if (std::abs(x0.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("tpi_run needs a unit start vector");

    TpiResult result;
    result.limit = x0;
    Eigen::VectorXd v = x0;
    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        auto next = phi(t, v);
        if (!next) {
            result.status = TpiStatus::MapUndefined;
            result.iterations = iter - 1;
            result.limit = v;
            return result;
        }
        const double step = std::min((*next - v).norm(), (*next + v).norm());
        v = std::move(*next);
        if (step < opts.tol) {
            result.status = TpiStatus::Converged;
            result.iterations = iter;
            result.limit = v;
            if (match && !match->whole_sphere) {
                double best = std::numeric_limits<double>::infinity();
                int best_idx = -1;
                for (int i = 0; i < static_cast<int>(match->pairs.size()); ++i) {
                    const double dist = std::min((v - match->pairs[i].vector).norm(),
                                                 (v + match->pairs[i].vector).norm());
                    if (dist < best) {
                        best = dist;
                        best_idx = i;
                    }
                }
                if (best <= 10.0 * opts.tol) result.matched_eigenpair = best_idx;
            }
            return result;
        }
    }
    result.status = TpiStatus::MaxIterations;
    result.iterations = opts.max_iter;
    result.limit = v;
    return result;
}

std::optional<Eigen::MatrixXd> jacobian(const SimplexTensor& t, const Eigen::VectorXd& x)
{
    Eigen::VectorXd f = contract_pow(t, x);
    const double norm = f.norm();
    if (norm <= kContractionFloor) return std::nullopt;
    f /= norm;
    const Eigen::MatrixXd m = contract_matrix(t, x);
    const double c = (t.order - 1) / norm;
    return c * (m - f * (m * f).transpose());
}

double spectral_radius_sym(const Eigen::MatrixXd& m)
{
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw std::invalid_argument("spectral_radius_sym needs a square matrix");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("spectral_radius_sym needs a symmetric matrix");

    if (n == 1) return std::abs(m(0, 0));
    if (n == 2) {
        const double a = m(0, 0), b = 0.5 * (m(0, 1) + m(1, 0)), c = m(1, 1);
        const double mean = 0.5 * (a + c);
        const double r = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
        return std::max(std::abs(mean + r), std::abs(mean - r));
    }

    Eigen::MatrixXd a = 0.5 * (m + m.transpose());
    const double target = 1e-14 * a.norm();
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
        if (std::sqrt(off) <= target) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double sign = tau >= 0.0 ? 1.0 : -1.0;
                const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a(p, i), aqi = a(q, i);
                    a(p, i) = c * api - s * aqi;
                    a(q, i) = s * api + c * aqi;
                }
            }
        }
    }
    return a.diagonal().cwiseAbs().maxCoeff();
}

const char* to_string(RobustnessClass c)
{
    switch (c) {
    case RobustnessClass::Robust: return "robust";
    case RobustnessClass::NonRobust: return "not robust";
    case RobustnessClass::Marginal: return "marginal";
    case RobustnessClass::Undefined: return "undefined";
    }
    return "?";
}

ClassificationReport classify_all(int n, int d)
{
    const BarycentricEnumeration canonical = enumerate_barycentric(n, d);
    ClassificationReport report;
    report.n = n;
    report.d = d;
    if (canonical.whole_simplex) {
        report.continuum = true;
        report.mu = (d == 2) ? 1.0 + 1.0 / n : 9.0 / 8.0;
        return report;
    }

    const SimplexTensor t = make_simplex_tensor(n, d);
    for (const BarycentricSolution& solution : canonical.solutions) {
        RobustnessRecord record;
        record.solution = solution;
        record.pair = assemble_eigenpair(solution, t);
        if (std::abs(record.pair.mu) <= kZeroEigenvalueTol) {
            record.robustness = RobustnessClass::Undefined;
            record.spectral_radius = std::numeric_limits<double>::quiet_NaN();
        } else {
            const auto j = jacobian(t, record.pair.vector);
            if (!j) throw std::logic_error("Jacobian undefined at a nonzero-eigenvalue eigenvector");
            const double rho = spectral_radius_sym(*j);
            record.spectral_radius = rho;
            if (rho < 1.0 - kRobustnessMargin)
                record.robustness = RobustnessClass::Robust;
            else if (rho > 1.0 + kRobustnessMargin)
                record.robustness = RobustnessClass::NonRobust;
            else
                record.robustness = RobustnessClass::Marginal;
        }
        report.records.push_back(std::move(record));
    }
    return report;
}

double closed_form_radius_n2(int d, RadiusFamily family)
{
    if (d < 3) throw std::domain_error("closed_form_radius_n2 needs d >= 3");
    const double dd = d;
    if (family == RadiusFamily::Vertex) {
        if (d % 2 == 0) return 3.0 * (dd - 1.0) / (powi(2.0, d - 1) + 1.0);
        return 3.0 * (dd - 1.0) / (powi(2.0, d - 1) - 1.0);
    }
    if (d % 2 != 0 || d < 6)
        throw std::domain_error("the mixed eigenvector family exists for even d >= 6 only");
    return (dd - 1.0) / 3.0;
}

} // namespace simplexeig
