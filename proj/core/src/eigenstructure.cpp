#include "simplexeig/eigenstructure.hpp"

#include "simplexeig/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>

namespace simplexeig {

namespace {

// Visits every size-k subset of {0, ..., pool-1} in lexicographic order.
template <class Fn>
void for_each_combination(int pool, int k, Fn&& fn)
{
    if (k > pool || k <= 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == pool - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <class Fn>
void for_each_disjoint_pair(int pool, int k1, int k2, Fn&& fn)
{
    for_each_combination(pool, k1, [&](const std::vector<int>& a) {
        std::vector<int> rest;
        rest.reserve(pool - k1);
        for (int i = 0; i < pool; ++i)
            if (!std::binary_search(a.begin(), a.end(), i)) rest.push_back(i);
        for_each_combination(static_cast<int>(rest.size()), k2, [&](const std::vector<int>& bidx) {
            std::vector<int> b(bidx.size());
            for (std::size_t i = 0; i < bidx.size(); ++i) b[i] = rest[bidx[i]];
            fn(a, b);
        });
    });
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

double line_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    return std::min((a - b).norm(), (a + b).norm());
}

} // namespace

Eigen::VectorXd BarycentricSolution::coordinates(int n) const
{
    Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
    for (int k : support_low) s[k] = level_low;
    for (int k : support_high) s[k] = level_high;
    return s;
}

Eigen::VectorXd BarycentricSolution::barycentric_point(int n) const
{
    return coordinates(n).head(n - 1);
}

std::string BarycentricSolution::label(int n) const
{
    const Eigen::VectorXd pt = barycentric_point(n);
    std::string out = "(";
    char buf[32];
    for (int i = 0; i < pt.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g", pt[i]);
        if (i) out += ", ";
        out += buf;
    }
    return out + ")";
}

BarycentricEnumeration enumerate_barycentric(int n, int d)
{
    if (n < 2 || d < 2) throw std::invalid_argument("enumerate_barycentric needs n >= 2 and d >= 2");

    BarycentricEnumeration out;
    out.n = n;
    out.d = d;
    if (d == 2 || (n == 2 && d == 4)) {
        out.whole_simplex = true;
        return out;
    }

    for (int size = 1; size <= n; ++size) {
        for_each_combination(n, size, [&](const std::vector<int>& k) {
            BarycentricSolution s;
            s.kind = BarycentricSolution::Kind::UniformOnK;
            s.support_low = k;
            s.level_low = 1.0 / size;
            out.solutions.push_back(std::move(s));
        });
    }

    if (d % 2 == 0) {
        const ScalarFunctions f(n, d);
        const double sstar = s_star(f);
        for (int k1 = 1; k1 < n; ++k1) {
            for (int k2 = 1; k1 + k2 <= n; ++k2) {
                const RootsOfR rr = roots_of_r(f, k1, k2);
                if (rr.degenerate) continue; // only (2,4), already a continuum
                for (double s_low : rr.roots) {
                    const double s_high = (1.0 - k1 * s_low) / k2;
                    if (s_high <= sstar + 1e-12 || s_high > 1.0 + 1e-12) continue;
                    for_each_disjoint_pair(n, k1, k2, [&](const std::vector<int>& a, const std::vector<int>& b) {
                        BarycentricSolution s;
                        s.kind = BarycentricSolution::Kind::TwoLevel;
                        s.support_low = a;
                        s.support_high = b;
                        s.level_low = s_low;
                        s.level_high = s_high;
                        out.solutions.push_back(std::move(s));
                    });
                }
            }
        }
    }
    return out;
}

double eigenvalue_uniform(int n, int d, int k_size)
{
    if (k_size < 1 || k_size > n) throw std::invalid_argument("eigenvalue_uniform needs 1 <= |K| <= n");
    const double sign = (d % 2 == 0) ? 1.0 : -1.0;
    const double num = powi(static_cast<double>(n + 1 - k_size), d - 1) +
                       sign * powi(static_cast<double>(k_size), d - 1);
    const double den =
        std::sqrt(powi(static_cast<double>(n), d) * powi(static_cast<double>(k_size) * (n + 1 - k_size), d - 2));
    return num / den;
}

double eigenvalue_two_level(int n, int d, int k1, int k2, double s_low, double s_high)
{
    if (d % 2 != 0) throw std::invalid_argument("two-level eigenpairs exist for even d only");
    const double num = k1 * powi((n + 1) * s_low - 1.0, d) + k2 * powi((n + 1) * s_high - 1.0, d) +
                       (n + 1 - k1 - k2);
    const double q = (n + 1) * (s_low * s_low * k1 + s_high * s_high * k2) - 1.0;
    return num / (powi(static_cast<double>(n), d / 2) * powi(q, d / 2));
}

EigenPair assemble_eigenpair(const BarycentricSolution& solution, const SimplexTensor& t)
{
    const int n = t.dimension();
    const int d = t.order;
    const Eigen::MatrixXd& v = t.frame.vectors();

    Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
    double norm = 0.0;
    double mu = 0.0;
    if (solution.kind == BarycentricSolution::Kind::UniformOnK) {
        const int k = static_cast<int>(solution.support_low.size());
        for (int idx : solution.support_low) z += v.col(idx);
        z *= solution.level_low;
        norm = solution.level_low * std::sqrt(static_cast<double>(k) * (n + 1 - k) / n);
        mu = eigenvalue_uniform(n, d, k);
    } else {
        const int k1 = static_cast<int>(solution.support_low.size());
        const int k2 = static_cast<int>(solution.support_high.size());
        for (int idx : solution.support_low) z += solution.level_low * v.col(idx);
        for (int idx : solution.support_high) z += solution.level_high * v.col(idx);
        const double q = (n + 1) * (solution.level_low * solution.level_low * k1 +
                                    solution.level_high * solution.level_high * k2) -
                         1.0;
        norm = std::sqrt(q / n);
        mu = eigenvalue_two_level(n, d, k1, k2, solution.level_low, solution.level_high);
    }

    EigenPair pair;
    pair.vector = z / norm;
    pair.mu = mu;
    pair.source = solution;

    // canonical sign: first nonzero component positive
    for (int i = 0; i < n; ++i) {
        if (std::abs(pair.vector[i]) <= 1e-12) continue;
        if (pair.vector[i] < 0.0) {
            pair.vector = -pair.vector;
            if (d % 2 != 0) pair.mu = -pair.mu;
        }
        break;
    }

    pair.residual = (contract_pow(t, pair.vector) - pair.mu * pair.vector).norm();
    if (pair.residual > 1e-10)
        throw std::logic_error("assembled eigenpair violates the residual bound");
    return pair;
}

EigenStructure expand_symmetry(const BarycentricEnumeration& canonical, int n, int d)
{
    EigenStructure out;
    out.n = n;
    out.d = d;
    if (canonical.whole_simplex) {
        out.whole_sphere = true;
        out.sphere_mu = (d == 2) ? 1.0 + 1.0 / n : 9.0 / 8.0;
        return out;
    }

    // Unique solution classes; supports of equal size share levels and
    // eigenvalue, so one expansion per class covers the whole orbit of
    // support permutations.
    std::set<int> uniform_sizes;
    std::set<std::tuple<int, int, double, double>> two_level_classes;
    for (const BarycentricSolution& s : canonical.solutions) {
        if (s.kind == BarycentricSolution::Kind::UniformOnK) {
            uniform_sizes.insert(static_cast<int>(s.support_low.size()));
        } else {
            two_level_classes.emplace(static_cast<int>(s.support_low.size()),
                                      static_cast<int>(s.support_high.size()), s.level_low,
                                      s.level_high);
        }
    }

    const SimplexTensor t = make_simplex_tensor(n, d);
    std::vector<EigenPair> pairs;
    auto add_pair = [&pairs](EigenPair&& pair) {
        for (const EigenPair& existing : pairs) {
            if (line_distance(existing.vector, pair.vector) <= 1e-10) return;
        }
        pairs.push_back(std::move(pair));
    };

    for (int size : uniform_sizes) {
        for_each_combination(n + 1, size, [&](const std::vector<int>& k) {
            BarycentricSolution s;
            s.kind = BarycentricSolution::Kind::UniformOnK;
            s.support_low = k;
            s.level_low = 1.0 / size;
            add_pair(assemble_eigenpair(s, t));
        });
    }
    for (const auto& [k1, k2, s_low, s_high] : two_level_classes) {
        for_each_disjoint_pair(n + 1, k1, k2, [&](const std::vector<int>& a, const std::vector<int>& b) {
            BarycentricSolution s;
            s.kind = BarycentricSolution::Kind::TwoLevel;
            s.support_low = a;
            s.support_high = b;
            s.level_low = s_low;
            s.level_high = s_high;
            add_pair(assemble_eigenpair(s, t));
        });
    }

    std::sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
        if (a.mu != b.mu) return a.mu > b.mu;
        return lex_less(a.vector, b.vector);
    });
    out.pairs = std::move(pairs);
    return out;
}

EigenStructure enumerate_eigenpairs(int n, int d)
{
    return expand_symmetry(enumerate_barycentric(n, d), n, d);
}

} // namespace simplexeig
