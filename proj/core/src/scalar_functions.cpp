#include "simplexeig/scalar_functions.hpp"

#include "simplexeig/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace simplexeig {

namespace {

std::vector<std::vector<unsigned long long>> binomial_table(int rows)
{
    std::vector<std::vector<unsigned long long>> c(rows + 1);
    for (int i = 0; i <= rows; ++i) {
        c[i].assign(i + 1, 1ull);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

long double horner(const std::vector<double>& coeffs, long double s)
{
    long double acc = 0.0L;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
    return acc;
}

std::vector<double> derivative(const std::vector<double>& coeffs)
{
    std::vector<double> out;
    for (std::size_t i = 1; i < coeffs.size(); ++i) out.push_back(coeffs[i] * static_cast<double>(i));
    return out;
}

double bisect(const std::vector<double>& coeffs, double lo, double hi)
{
    long double flo = horner(coeffs, lo);
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const long double fmid = horner(coeffs, mid);
        if (fmid == 0.0L) return mid;
        if ((flo < 0) == (fmid < 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// All real roots of the polynomial inside (lo, hi), found by recursive
// monotone splitting: the roots of the derivative partition the interval
// into monotone pieces, each holding at most one sign change. Tangential
// zeros are picked up at the derivative roots.
void poly_roots_in(const std::vector<double>& coeffs, double lo, double hi,
                   std::vector<double>& out)
{
    std::vector<double> c = coeffs;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1) return;
    if (c.size() == 2) {
        const double root = -c[0] / c[1];
        if (root > lo && root < hi) out.push_back(root);
        return;
    }

    std::vector<double> crit;
    poly_roots_in(derivative(c), lo, hi, crit);
    std::sort(crit.begin(), crit.end());

    double scale = 0.0;
    for (double ci : c) scale += std::abs(ci);

    std::vector<double> cuts;
    cuts.push_back(lo);
    for (double s : crit) cuts.push_back(s);
    cuts.push_back(hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        if (b - a < 1e-15) continue;
        const long double fa = horner(c, a);
        const long double fb = horner(c, b);
        if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
            out.push_back(bisect(c, a, b));
        } else if (i + 1 < cuts.size() - 1 && std::abs(static_cast<double>(fb)) <= 1e-12 * scale) {
            // monotone piece ends exactly on a zero of the derivative: a
            // tangential root
            out.push_back(b);
        }
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-13; }),
              out.end());
}

} // namespace

ScalarFunctions::ScalarFunctions(int n, int d) : n_(n), d_(d)
{
    if (n < 2 || d < 2) throw std::invalid_argument("ScalarFunctions needs n >= 2 and d >= 2");

    const auto binom = binomial_table(d - 1);
    p_coeffs_.assign(d - 1, 0.0);
    for (int m = 1; m <= d - 1; ++m) {
        const double c =
            static_cast<double>(binom[d - 1][m]) * powi(static_cast<double>(n + 1), m) * alt_sign(d - 1 - m);
        p_coeffs_[m - 1] = c;
    }

    if (g(0.0) != 0.0) throw std::logic_error("g(0) != 0");
    const double g1 = powi(static_cast<double>(n), d - 1) + alt_sign(d);
    if (std::abs(g(1.0) - g1) > 1e-9 * std::abs(g1))
        throw std::logic_error("g(1) != n^{d-1} + (-1)^d");
}

double ScalarFunctions::g(double s) const
{
    const double y = (n_ + 1) * s - 1.0;
    return powi(y, d_ - 1) + alt_sign(d_);
}

double ScalarFunctions::g_prime(double s) const
{
    const double y = (n_ + 1) * s - 1.0;
    return (n_ + 1) * (d_ - 1) * powi(y, d_ - 2);
}

double ScalarFunctions::p(double s) const
{
    return static_cast<double>(horner(p_coeffs_, s));
}

double ScalarFunctions::p_prime(double s) const
{
    return static_cast<double>(horner(derivative(p_coeffs_), s));
}

double s_star(const ScalarFunctions& f)
{
    if (f.d() % 2 != 0 || f.d() < 4)
        throw std::domain_error("s_star is defined for even d >= 4 only");

    // p' has exactly one sign change in [1/(n+1), 2/(n+1)]; its numerator
    // g'(s) s - g(s) evaluates to -1 and 2d-4 at the endpoints.
    const auto num = [&f](double s) { return f.g_prime(s) * s - f.g(s); };
    double lo = 1.0 / (f.n() + 1);
    double hi = 2.0 / (f.n() + 1);
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        const double v = num(mid);
        if (v == 0.0) return mid;
        (v < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

RootsOfR roots_of_r(const ScalarFunctions& f, int k1, int k2)
{
    const int n = f.n();
    const int d = f.d();
    if (d % 2 != 0 || d < 4) throw std::domain_error("roots_of_r is defined for even d >= 4 only");
    if (k1 < 1 || k2 < 1 || k1 + k2 > n)
        throw std::invalid_argument("roots_of_r needs k1, k2 >= 1 and k1 + k2 <= n");

    // Monomial coefficients of R(s) = k2^{d-2} (p(s) - p((1 - k1 s)/k2)),
    // assembled with exact integer arithmetic. The k2 power clears the
    // denominators introduced by the substituted argument.
    const auto binom = binomial_table(d - 1);
    std::vector<__int128> coeff(d - 1, 0);
    for (int m = 1; m <= d - 1; ++m) {
        // k2^{d-2} * coefficient of s^{m-1} in p
        __int128 lead = static_cast<__int128>(binom[d - 1][m]);
        for (int q = 0; q < m; ++q) lead *= (n + 1);
        for (int q = 0; q < d - 2; ++q) lead *= k2;
        if ((d - 1 - m) % 2 != 0) lead = -lead;
        coeff[m - 1] += lead;

        // k2^{d-2} * coefficient block of p((1 - k1 s)/k2): the term of
        // degree m-1 in the substituted argument expands binomially.
        __int128 base = static_cast<__int128>(binom[d - 1][m]);
        for (int q = 0; q < m; ++q) base *= (n + 1);
        for (int q = 0; q < d - 1 - m; ++q) base *= k2;
        if ((d - 1 - m) % 2 != 0) base = -base;
        __int128 k1pow = 1;
        for (int i = 0; i <= m - 1; ++i) {
            __int128 term = base * static_cast<__int128>(binom[m - 1][i]) * k1pow;
            if (i % 2 != 0) term = -term;
            coeff[i] -= term;
            k1pow *= k1;
        }
    }

    RootsOfR out;
    std::vector<double> rc(coeff.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        rc[i] = static_cast<double>(coeff[i]);
        if (coeff[i] != 0) all_zero = false;
    }
    if (all_zero) {
        out.degenerate = true;
        return out;
    }

    const double sstar = s_star(f);
    std::vector<double> roots;
    poly_roots_in(rc, 1e-13, sstar, roots);
    for (double root : roots) {
        if (root < sstar - 1e-12) out.roots.push_back(root);
    }
    return out;
}

} // namespace simplexeig
