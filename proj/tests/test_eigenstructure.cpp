#include "simplexeig/eigenstructure.hpp"

#include "simplexeig/numeric.hpp"
#include "simplexeig/rng.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace simplexeig;

namespace {

bool contains_point(const BarycentricEnumeration& e, std::initializer_list<double> coords,
                    double tol = 1e-12)
{
    Eigen::VectorXd target(static_cast<int>(coords.size()));
    int i = 0;
    for (double c : coords) target[i++] = c;
    return std::any_of(e.solutions.begin(), e.solutions.end(), [&](const BarycentricSolution& s) {
        return (s.barycentric_point(e.n) - target).norm() <= tol;
    });
}

int count_mu(const EigenStructure& s, double mu, double tol = 1e-10)
{
    return static_cast<int>(std::count_if(s.pairs.begin(), s.pairs.end(), [&](const EigenPair& p) {
        return std::abs(p.mu - mu) <= tol;
    }));
}

} // namespace

TEST_CASE("canonical zeros for n=3, odd d", "[eigenstructure]")
{
    for (int d : {3, 5, 7}) {
        const BarycentricEnumeration e = enumerate_barycentric(3, d);
        INFO("d = " << d);
        REQUIRE_FALSE(e.whole_simplex);
        CHECK(e.solutions.size() == 7);
        const double half = 0.5, third = 1.0 / 3.0;
        CHECK(contains_point(e, {0.0, 0.0}));
        CHECK(contains_point(e, {1.0, 0.0}));
        CHECK(contains_point(e, {0.0, 1.0}));
        CHECK(contains_point(e, {half, 0.0}));
        CHECK(contains_point(e, {0.0, half}));
        CHECK(contains_point(e, {half, half}));
        CHECK(contains_point(e, {third, third}));
    }
}

TEST_CASE("canonical zeros for n=3, d=4", "[eigenstructure]")
{
    const BarycentricEnumeration e = enumerate_barycentric(3, 4);
    CHECK(e.solutions.size() == 10);
    CHECK(contains_point(e, {0.25, 0.25}, 1e-12));
    CHECK(contains_point(e, {0.25, 0.5}, 1e-12));
    CHECK(contains_point(e, {0.5, 0.25}, 1e-12));

    int two_level = 0;
    for (const BarycentricSolution& s : e.solutions)
        if (s.kind == BarycentricSolution::Kind::TwoLevel) ++two_level;
    CHECK(two_level == 3);
}

TEST_CASE("canonical zeros for n=2, d=6", "[eigenstructure]")
{
    const BarycentricEnumeration e = enumerate_barycentric(2, 6);
    REQUIRE(e.solutions.size() == 5);
    std::vector<double> points;
    for (const BarycentricSolution& s : e.solutions) points.push_back(s.barycentric_point(2)[0]);
    std::sort(points.begin(), points.end());
    const double expected[5] = {0.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0};
    for (int i = 0; i < 5; ++i) CHECK(points[i] == Catch::Approx(expected[i]).margin(1e-12));
}

TEST_CASE("whole-simplex cases", "[eigenstructure]")
{
    CHECK(enumerate_barycentric(2, 2).whole_simplex);
    CHECK(enumerate_barycentric(7, 2).whole_simplex);
    CHECK(enumerate_barycentric(2, 4).whole_simplex);
    CHECK_FALSE(enumerate_barycentric(3, 4).whole_simplex);
    CHECK_THROWS_AS(enumerate_barycentric(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_barycentric(3, 1), std::invalid_argument);
}

TEST_CASE("uniform eigenvalues", "[eigenstructure]")
{
    for (int d : {3, 5, 7})
        CHECK(eigenvalue_uniform(2, d, 1) == Catch::Approx(1.0 - powi(2.0, 1 - d)).margin(1e-15));
    for (int d : {3, 5, 7}) CHECK(eigenvalue_uniform(3, d, 2) == 0.0);
    CHECK(eigenvalue_uniform(3, 4, 1) == Catch::Approx(28.0 / 27.0).margin(1e-15));
    CHECK(eigenvalue_uniform(3, 4, 2) == Catch::Approx(4.0 / 9.0).margin(1e-15));
}

TEST_CASE("two-level eigenvalues", "[eigenstructure]")
{
    CHECK(eigenvalue_two_level(3, 4, 2, 1, 0.25, 0.5) == Catch::Approx(8.0 / 9.0).margin(1e-15));
    // the (v_k + 2 v_j)/sqrt(3) family for n=2, even d: mu = 3^{d/2} 2^{1-d}
    for (int d : {6, 8}) {
        const double mu = eigenvalue_two_level(2, d, 1, 1, 1.0 / 3.0, 2.0 / 3.0);
        CHECK(mu == Catch::Approx(powi(std::sqrt(3.0), d) * powi(2.0, 1 - d)).epsilon(1e-13));
    }
}

TEST_CASE("assembled two-level eigenpair has a tiny residual", "[eigenstructure]")
{
    const SimplexTensor t = make_simplex_tensor(3, 4);
    BarycentricSolution s;
    s.kind = BarycentricSolution::Kind::TwoLevel;
    s.support_low = {1, 2};
    s.support_high = {0};
    s.level_low = 0.25;
    s.level_high = 0.5;
    const EigenPair pair = assemble_eigenpair(s, t);
    CHECK(pair.residual <= 1e-10);
    CHECK(std::abs(pair.vector.norm() - 1.0) <= 1e-13);
    CHECK(pair.mu == Catch::Approx(8.0 / 9.0).margin(1e-13));
}

TEST_CASE("eigenpair counts for n=2", "[eigenstructure]")
{
    for (int d : {6, 8, 10}) {
        const EigenStructure s = enumerate_eigenpairs(2, d);
        INFO("d = " << d);
        CHECK(s.pairs.size() == 6);
        CHECK(s.normalized_count() == 12);
    }
    for (int d : {3, 5, 7, 9}) {
        const EigenStructure s = enumerate_eigenpairs(2, d);
        INFO("d = " << d);
        CHECK(s.pairs.size() == 3);
        CHECK(s.normalized_count() == 6);
    }
}

TEST_CASE("eigenvalues for n=2, d=3 are +-3/4", "[eigenstructure]")
{
    const EigenStructure s = enumerate_eigenpairs(2, 3);
    REQUIRE(s.pairs.size() == 3);
    for (const EigenPair& pair : s.pairs) CHECK(std::abs(std::abs(pair.mu) - 0.75) <= 1e-13);
}

TEST_CASE("zero-eigenvalue directions for n=3, odd d", "[eigenstructure]")
{
    for (int d : {3, 5, 7}) {
        const EigenStructure s = enumerate_eigenpairs(3, d);
        int zero_count = 0;
        for (const EigenPair& pair : s.pairs)
            if (std::abs(pair.mu) <= 1e-12) ++zero_count;
        INFO("d = " << d);
        CHECK(zero_count == 3);
    }
}

TEST_CASE("n=3 d=4 eigenstructure", "[eigenstructure]")
{
    const EigenStructure s = enumerate_eigenpairs(3, 4);
    REQUIRE(s.pairs.size() == 13);
    CHECK(count_mu(s, 28.0 / 27.0) == 4);
    CHECK(count_mu(s, 4.0 / 9.0) == 3);
    CHECK(count_mu(s, 8.0 / 9.0) == 6);

    // no two stored directions are collinear
    for (std::size_t i = 0; i < s.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < s.pairs.size(); ++j)
            CHECK(test_support::line_dist(s.pairs[i].vector, s.pairs[j].vector) > 1e-6);
}

TEST_CASE("n even means no zero eigenvalues", "[eigenstructure]")
{
    for (auto [n, d] : {std::pair{4, 3}, std::pair{6, 5}}) {
        const EigenStructure s = enumerate_eigenpairs(n, d);
        for (const EigenPair& pair : s.pairs) CHECK(std::abs(pair.mu) > 1e-12);
    }
}

TEST_CASE("whole-sphere eigenvalues", "[eigenstructure]")
{
    for (int n : {2, 3, 5}) {
        const EigenStructure s = enumerate_eigenpairs(n, 2);
        CHECK(s.whole_sphere);
        CHECK(s.sphere_mu == Catch::Approx(1.0 + 1.0 / n).margin(1e-15));
    }
    const EigenStructure s24 = enumerate_eigenpairs(2, 4);
    CHECK(s24.whole_sphere);
    CHECK(s24.sphere_mu == Catch::Approx(9.0 / 8.0).margin(1e-15));
}

TEST_CASE("residual bound and output ordering", "[eigenstructure]")
{
    for (auto [n, d] : {std::pair{2, 7}, std::pair{3, 4}, std::pair{4, 6}, std::pair{5, 3}}) {
        const EigenStructure s = enumerate_eigenpairs(n, d);
        INFO("n = " << n << ", d = " << d);
        for (const EigenPair& pair : s.pairs) {
            CHECK(pair.residual <= 1e-10);
            CHECK(std::abs(pair.vector.norm() - 1.0) <= 1e-13);
        }
        for (std::size_t i = 1; i < s.pairs.size(); ++i) CHECK(s.pairs[i - 1].mu >= s.pairs[i].mu);
    }
}

TEST_CASE("permutation closure of emitted supports", "[eigenstructure]")
{
    Rng rng(41);
    for (auto [n, d] : {std::pair{3, 4}, std::pair{3, 5}, std::pair{4, 6}}) {
        const SimplexTensor t = make_simplex_tensor(n, d);
        const EigenStructure s = enumerate_eigenpairs(n, d);
        for (int trial = 0; trial < 20; ++trial) {
            const EigenPair& pair = s.pairs[rng.next_u64() % s.pairs.size()];

            std::vector<int> perm(n + 1);
            for (int i = 0; i <= n; ++i) perm[i] = i;
            for (int i = n; i > 0; --i) std::swap(perm[i], perm[rng.next_u64() % (i + 1)]);

            BarycentricSolution shuffled = pair.source;
            for (int& idx : shuffled.support_low) idx = perm[idx];
            for (int& idx : shuffled.support_high) idx = perm[idx];
            std::sort(shuffled.support_low.begin(), shuffled.support_low.end());
            std::sort(shuffled.support_high.begin(), shuffled.support_high.end());

            const EigenPair image = assemble_eigenpair(shuffled, t);
            double best = 1.0;
            for (const EigenPair& other : s.pairs)
                best = std::min(best, test_support::line_dist(image.vector, other.vector));
            CHECK(best <= 1e-10);
        }
    }
}

TEST_CASE("odd-d zero eigenvalues occur exactly at 2|K| = n+1", "[eigenstructure]")
{
    for (auto [n, d] : {std::pair{3, 3}, std::pair{3, 5}, std::pair{5, 3}}) {
        const EigenStructure s = enumerate_eigenpairs(n, d);
        for (const EigenPair& pair : s.pairs) {
            REQUIRE(pair.source.kind == BarycentricSolution::Kind::UniformOnK);
            const int k = static_cast<int>(pair.source.support_low.size());
            const bool zero = std::abs(pair.mu) <= 1e-12;
            INFO("n = " << n << ", d = " << d << ", |K| = " << k);
            CHECK(zero == (2 * k == n + 1));
        }
    }
}

TEST_CASE("two-level solutions satisfy the level constraints", "[eigenstructure]")
{
    for (auto [n, d] : {std::pair{3, 4}, std::pair{4, 6}, std::pair{5, 8}}) {
        const ScalarFunctions f(n, d);
        const EigenStructure s = enumerate_eigenpairs(n, d);
        const double star = s_star(f);
        bool saw_two_level = false;
        for (const EigenPair& pair : s.pairs) {
            if (pair.source.kind != BarycentricSolution::Kind::TwoLevel) continue;
            saw_two_level = true;
            const auto k1 = static_cast<double>(pair.source.support_low.size());
            const auto k2 = static_cast<double>(pair.source.support_high.size());
            const double lo = pair.source.level_low;
            const double hi = pair.source.level_high;
            CHECK(std::abs(k1 * lo + k2 * hi - 1.0) <= 1e-12);
            CHECK(std::abs(f.p(lo) - f.p(hi)) <= 1e-10 * std::max(1.0, std::abs(f.p(lo))));
            CHECK(lo > 0.0);
            CHECK(lo < star);
            CHECK(hi > star);
            CHECK(hi <= 1.0 + 1e-12);
        }
        INFO("n = " << n << ", d = " << d);
        CHECK(saw_two_level);
    }
}
