#include "simplexeig/oracle.hpp"

#include "simplexeig/numeric.hpp"
#include "simplexeig/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simplexeig {

namespace {

// h over the free coordinates (s_1, ..., s_{n-1}); the refinement runs in
// long double because the residual target of 1e-12 sits below the double
// cancellation floor of g near s = 1 for the largest (n, d).
template <typename Real>
void eval_h(int n, int d, const Real* s, Real* out)
{
    const Real sign = (d % 2 == 0) ? Real(1) : Real(-1);
    auto g = [&](Real x) { return powi(Real(n + 1) * x - Real(1), d - 1) + sign; };

    Real last = Real(1);
    for (int i = 0; i < n - 1; ++i) last -= s[i];
    Real total = g(last);
    for (int i = 0; i < n - 1; ++i) total += g(s[i]);
    for (int k = 0; k < n - 1; ++k) out[k] = s[k] * total - g(s[k]);
}

template <typename Real>
Real h_norm(int n, int d, const Real* s)
{
    Real out[3];
    eval_h(n, d, s, out);
    Real acc = Real(0);
    for (int k = 0; k < n - 1; ++k) acc += out[k] * out[k];
    return std::sqrt(static_cast<double>(acc));
}

// Damped Newton with a central finite-difference Jacobian. Returns true
// when ||h|| <= 1e-12.
bool newton_refine(int n, int d, Eigen::VectorXd& point)
{
    const int m = n - 1;
    long double s[3];
    for (int i = 0; i < m; ++i) s[i] = point[i];

    const long double step = 1e-7L;
    long double h[3], hp[3], hm[3];
    for (int iter = 0; iter < 100; ++iter) {
        eval_h<long double>(n, d, s, h);
        long double norm = 0;
        for (int k = 0; k < m; ++k) norm += h[k] * h[k];
        norm = std::sqrt(static_cast<double>(norm));
        if (norm <= 1e-12L) {
            for (int i = 0; i < m; ++i) point[i] = static_cast<double>(s[i]);
            return true;
        }

        long double jac[3][3];
        long double sp[3];
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i) sp[i] = s[i];
            sp[j] += step;
            eval_h<long double>(n, d, sp, hp);
            sp[j] -= 2 * step;
            eval_h<long double>(n, d, sp, hm);
            for (int k = 0; k < m; ++k) jac[k][j] = (hp[k] - hm[k]) / (2 * step);
        }

        // solve jac * delta = h by Gaussian elimination with partial pivoting
        long double a[3][4];
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) a[r][c] = jac[r][c];
            a[r][m] = h[r];
        }
        for (int col = 0; col < m; ++col) {
            int pivot = col;
            for (int r = col + 1; r < m; ++r)
                if (std::abs(static_cast<double>(a[r][col])) > std::abs(static_cast<double>(a[pivot][col])))
                    pivot = r;
            if (a[pivot][col] == 0.0L) return false;
            if (pivot != col)
                for (int c = col; c <= m; ++c) std::swap(a[pivot][c], a[col][c]);
            for (int r = col + 1; r < m; ++r) {
                const long double factor = a[r][col] / a[col][col];
                for (int c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
            }
        }
        long double delta[3];
        for (int r = m - 1; r >= 0; --r) {
            long double acc = a[r][m];
            for (int c = r + 1; c < m; ++c) acc -= a[r][c] * delta[c];
            delta[r] = acc / a[r][r];
        }

        // halve the step until the residual decreases
        long double lambda = 1.0L;
        bool moved = false;
        for (int halving = 0; halving <= 60; ++halving) {
            long double trial[3];
            for (int i = 0; i < m; ++i) trial[i] = s[i] - lambda * delta[i];
            if (h_norm<long double>(n, d, trial) < norm) {
                for (int i = 0; i < m; ++i) s[i] = trial[i];
                moved = true;
                break;
            }
            lambda *= 0.5L;
        }
        if (!moved) return false;
    }
    return false;
}

bool inside_closed_simplex(const Eigen::VectorXd& point, double tol)
{
    double sum = 0.0;
    for (int i = 0; i < point.size(); ++i) {
        if (point[i] < -tol) return false;
        sum += point[i];
    }
    return sum <= 1.0 + tol;
}

} // namespace

OracleZeroSet brute_force_zeros(int n, int d, int grid)
{
    if (n < 2 || n > 4) throw std::invalid_argument("brute_force_zeros supports n in {2, 3, 4}");
    if (d < 2) throw std::invalid_argument("brute_force_zeros needs d >= 2");
    if (grid < 100) throw std::invalid_argument("brute_force_zeros needs grid >= 100");

    OracleZeroSet out;
    out.n = n;
    out.d = d;

    // continuum detection: h vanishing at 50 random interior points
    {
        Rng rng(0x5eedc0ffeeULL);
        bool flat = true;
        for (int trial = 0; trial < 50 && flat; ++trial) {
            double w[4];
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                w[i] = -std::log(1.0 - rng.next_unit());
                sum += w[i];
            }
            double s[3];
            for (int i = 0; i < n - 1; ++i) s[i] = w[i] / sum;
            if (h_norm<double>(n, d, s) >= 1e-13) flat = false;
        }
        if (flat) {
            out.continuum = true;
            return out;
        }
    }

    const int g = grid;
    std::vector<Eigen::VectorXd> candidates;
    const auto push_candidate = [&](std::initializer_list<int> idx) {
        Eigen::VectorXd point(n - 1);
        int i = 0;
        for (int v : idx) point[i++] = static_cast<double>(v) / g;
        candidates.push_back(point);
    };

    if (n == 2) {
        std::vector<double> val(g + 1);
        double s[1];
        for (int i = 0; i <= g; ++i) {
            s[0] = static_cast<double>(i) / g;
            val[i] = h_norm<double>(2, d, s);
        }
        for (int i = 0; i <= g; ++i) {
            const bool left = i == 0 || val[i] <= val[i - 1];
            const bool right = i == g || val[i] <= val[i + 1];
            if (left && right) push_candidate({i});
        }
    } else if (n == 3) {
        const auto flat_index = [g](int i, int j) { return i * (g + 1) + j; };
        std::vector<double> val((g + 1) * (g + 1), -1.0);
        double s[2];
        for (int i = 0; i <= g; ++i) {
            for (int j = 0; i + j <= g; ++j) {
                s[0] = static_cast<double>(i) / g;
                s[1] = static_cast<double>(j) / g;
                val[flat_index(i, j)] = h_norm<double>(3, d, s);
            }
        }
        const int di[6] = {1, -1, 0, 0, 1, -1};
        const int dj[6] = {0, 0, 1, -1, -1, 1};
        for (int i = 0; i <= g; ++i) {
            for (int j = 0; i + j <= g; ++j) {
                const double v0 = val[flat_index(i, j)];
                bool is_min = true;
                for (int k = 0; k < 6 && is_min; ++k) {
                    const int ii = i + di[k], jj = j + dj[k];
                    if (ii < 0 || jj < 0 || ii + jj > g) continue;
                    if (val[flat_index(ii, jj)] < v0) is_min = false;
                }
                if (is_min) push_candidate({i, j});
            }
        }
    } else {
        // n = 4: stream slabs in the first coordinate; a slab holds the
        // (j, k) triangle for fixed i.
        const auto slab_index = [g](int j, int k) { return j * (g + 1) + k; };
        const std::size_t slab_size = static_cast<std::size_t>(g + 1) * (g + 1);
        std::vector<double> slabs[3];
        for (auto& sl : slabs) sl.assign(slab_size, -1.0);
        const auto fill_slab = [&](std::vector<double>& slab, int i) {
            std::fill(slab.begin(), slab.end(), -1.0);
            if (i < 0 || i > g) return;
            double s[3];
            s[0] = static_cast<double>(i) / g;
            for (int j = 0; i + j <= g; ++j) {
                s[1] = static_cast<double>(j) / g;
                for (int k = 0; i + j + k <= g; ++k) {
                    s[2] = static_cast<double>(k) / g;
                    slab[slab_index(j, k)] = h_norm<double>(4, d, s);
                }
            }
        };
        fill_slab(slabs[1], -1);
        fill_slab(slabs[2], 0);
        const int dij[12][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
                                {1, -1, 0}, {-1, 1, 0}, {1, 0, -1}, {-1, 0, 1}, {0, 1, -1}, {0, -1, 1}};
        for (int i = 0; i <= g; ++i) {
            std::swap(slabs[0], slabs[1]);
            std::swap(slabs[1], slabs[2]);
            fill_slab(slabs[2], i + 1);
            for (int j = 0; i + j <= g; ++j) {
                for (int k = 0; i + j + k <= g; ++k) {
                    const double v0 = slabs[1][slab_index(j, k)];
                    bool is_min = true;
                    for (int q = 0; q < 12 && is_min; ++q) {
                        const int ii = i + dij[q][0], jj = j + dij[q][1], kk = k + dij[q][2];
                        if (ii < 0 || jj < 0 || kk < 0 || ii + jj + kk > g) continue;
                        const double vn = slabs[1 + dij[q][0]][slab_index(jj, kk)];
                        if (vn >= 0.0 && vn < v0) is_min = false;
                    }
                    if (is_min) push_candidate({i, j, k});
                }
            }
        }
    }

    for (Eigen::VectorXd& candidate : candidates) {
        Eigen::VectorXd point = candidate;
        if (!newton_refine(n, d, point)) {
            ++out.dropped;
            continue;
        }
        if (!inside_closed_simplex(point, 1e-12)) continue;
        bool fresh = true;
        for (const Eigen::VectorXd& existing : out.zeros) {
            if ((existing - point).norm() <= 1e-8) {
                fresh = false;
                break;
            }
        }
        if (fresh) out.zeros.push_back(std::move(point));
    }

    std::sort(out.zeros.begin(), out.zeros.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        for (int i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (a[i] > b[i]) return false;
        }
        return false;
    });
    return out;
}

ZeroMatchReport compare_with_enumeration(const OracleZeroSet& oracle,
                                         const BarycentricEnumeration& canonical)
{
    if (oracle.n != canonical.n || oracle.d != canonical.d)
        throw std::invalid_argument("compare_with_enumeration needs matching (n, d)");

    ZeroMatchReport report;
    report.continuum_oracle = oracle.continuum;
    report.continuum_enumeration = canonical.whole_simplex;
    if (oracle.continuum || canonical.whole_simplex) return report;

    std::vector<Eigen::VectorXd> enumerated;
    enumerated.reserve(canonical.solutions.size());
    for (const BarycentricSolution& s : canonical.solutions)
        enumerated.push_back(s.barycentric_point(canonical.n));

    std::vector<bool> used(enumerated.size(), false);
    for (const Eigen::VectorXd& zero : oracle.zeros) {
        int best = -1;
        double best_dist = 1e-6;
        for (std::size_t i = 0; i < enumerated.size(); ++i) {
            if (used[i]) continue;
            const double dist = (enumerated[i] - zero).norm();
            if (dist <= best_dist) {
                best = static_cast<int>(i);
                best_dist = dist;
            }
        }
        if (best >= 0) {
            used[best] = true;
            ++report.matched;
        } else {
            report.unmatched_oracle.push_back(zero);
        }
    }
    for (std::size_t i = 0; i < enumerated.size(); ++i)
        if (!used[i]) report.unmatched_enumeration.push_back(enumerated[i]);
    return report;
}

} // namespace simplexeig
