#include "parahoric/error.hpp"
#include "parahoric/newton.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parahoric;

namespace {

PadicPoly poly(std::int64_t p, std::vector<long> c, std::int64_t A = 20) {
    std::vector<Rational> q;
    for (long v : c) q.emplace_back(v);
    return PadicPoly::from_rational(p, q, A);
}

// Oracle: multiply out prod (X - r_i).
std::vector<Rational> from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = next;
    }
    return c;
}

} // namespace

TEST(Newton, WorkedExamples) {
    auto np = newton_polygon(poly(3, {3, 1, 1}));
    EXPECT_EQ(root_slopes(np), (std::vector<Rational>{0, 1}));
    EXPECT_EQ(slope_le_h_dim(np, Rational(0)), 1);
    EXPECT_EQ(slope_le_h_dim(np, Rational(1)), 2);
    EXPECT_EQ(slope_le_h_dim(np, std::nullopt), 2);
    EXPECT_EQ(slope_le_h_dim(np, Rational(-1)), 0);
    auto np2 = newton_polygon(poly(2, {4, 2, 1}));
    EXPECT_EQ(root_slopes(np2), (std::vector<Rational>{1, 1}));
    ASSERT_EQ(np2.segments.size(), 1u);
}

TEST(Newton, HenselRootsConfirmSlopes) {
    // X^2 + X + 3 over Z_3: residue roots 0 and 2
    std::vector<Rational> f{3, 1, 1};
    auto roots = unit_roots(f, 3, 12);
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_EQ(*roots[0].valuation(), 0);
    auto fp = PadicPoly::from_rational(3, f, 14);
    EXPECT_TRUE(fp.evaluate(roots[0]).is_zero());
    auto other = PadicScalar::exact(3, 3) / roots[0];
    EXPECT_EQ(*other.valuation(), 1);
}

TEST(Newton, DegenerateMonomial) {
    auto np = newton_polygon(poly(5, {0, 0, 0, 1}));
    EXPECT_TRUE(root_slopes(np).empty());
    EXPECT_FALSE(np.diagnostics.empty());
    EXPECT_THROW(newton_polygon(poly(5, {0, 0})), PrecisionError);
}

TEST(Newton, AmbiguousSlopeQuery) {
    auto np = newton_polygon(poly(5, {0, 0, 0, 1}, 6));
    ASSERT_EQ(np.segments.size(), 1u);
    EXPECT_TRUE(np.segments[0].ambiguous);
    EXPECT_THROW(slope_le_h_dim(np, Rational(2)), AmbiguityError);
}

TEST(Newton, FredholmConventionMirrors) {
    std::vector<Rational> cp = from_roots({Rational(9), Rational(2), Rational(6)});
    auto f = PadicPoly::from_rational(3, cp, 20);
    auto a = root_slopes(newton_polygon(f));
    auto b = root_slopes(newton_polygon(fredholm_from_charpoly(f), SlopeConvention::Fredholm));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, (std::vector<Rational>{0, 1, 2}));
}

TEST(Newton, RandomRootMultisets) {
    std::mt19937_64 rng(99);
    for (std::int64_t p : {2, 3, 5}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::uniform_int_distribution<int> len(1, 6), e(0, 4), u(1, 50);
            std::vector<Rational> roots, expect;
            int n = len(rng);
            for (int i = 0; i < n; ++i) {
                int k = e(rng);
                long unit = u(rng);
                while (unit % p == 0) ++unit;
                roots.emplace_back(ipow(Integer(static_cast<long>(p)), k) * unit);
                expect.emplace_back(k);
            }
            std::sort(expect.begin(), expect.end());
            auto np = newton_polygon(PadicPoly::from_rational(p, from_roots(roots), 40));
            EXPECT_EQ(root_slopes(np), expect);
            EXPECT_EQ(static_cast<int>(root_slopes(np).size()), n);
            std::int64_t prev = -1;
            for (int h = -1; h <= 6; ++h) {
                auto d = slope_le_h_dim(np, Rational(h));
                EXPECT_GE(d, prev);
                prev = d;
            }
            for (std::size_t i = 1; i < np.segments.size(); ++i)
                EXPECT_LT(np.segments[i - 1].slope, np.segments[i].slope);
        }
    }
}

TEST(Charpoly, RationalExamples) {
    EXPECT_EQ(charpoly(identity_matrix(2)), (std::vector<Rational>{1, -2, 1}));
    RationalMatrix d(2, 2, Rational(0));
    d(0, 0) = Rational(3, 2);
    d(1, 1) = -5;
    EXPECT_EQ(charpoly(d), from_roots({Rational(3, 2), Rational(-5)}));
    RationalMatrix comp(2, 2, Rational(0));
    comp(1, 0) = 1;
    comp(0, 1) = -3;
    comp(1, 1) = -1;
    EXPECT_EQ(charpoly(comp), (std::vector<Rational>{3, 1, 1}));
}

TEST(Charpoly, RandomMatchesConjugationInvariance) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> v(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 6;
        RationalMatrix a(n, n, Rational(0)), s(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = v(rng);
                s(i, j) = (i == j ? 1 : 0) + (j > i ? v(rng) : 0);
            }
        // unitriangular s is invertible; similar matrices share charpolys
        auto b = inverse(s) * a * s;
        EXPECT_EQ(charpoly(a), charpoly(b));
        // oracle: Cayley-Hamilton, sum c_i a^i = 0
        auto c = charpoly(a);
        RationalMatrix acc(n, n, Rational(0)), pw = identity_matrix(n);
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t q = 0; q < n; ++q) acc(r, q) += c[i] * pw(r, q);
            pw = pw * a;
        }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t q = 0; q < n; ++q) EXPECT_EQ(acc(r, q), 0);
    }
}

TEST(Charpoly, PadicAgreesWithRational) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> v(-20, 20);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 7;
        RationalMatrix a(n, n, Rational(0));
        Matrix<PadicScalar> ap(n, n, PadicScalar::zero(3, 30));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = v(rng) * (i > j ? 3 : 1);
                ap(i, j) = PadicScalar::from_rational(3, a(i, j), 30);
            }
        auto exact = charpoly(a);
        auto approx = charpoly(ap);
        ASSERT_EQ(approx.coeffs.size(), exact.size());
        for (std::size_t i = 0; i < exact.size(); ++i) {
            const auto& c = approx.coeffs[i];
            EXPECT_GE(c.absprec(), 20);
            Rational diff = c.lift() - exact[i];
            if (diff != 0) EXPECT_GE(*valuation(diff, 3), c.absprec());
        }
    }
}

TEST(Charpoly, DiagonalSlopes) {
    Matrix<PadicScalar> d(4, 4, PadicScalar::zero(5, 20));
    std::vector<int> s{0, 2, 2, 5};
    for (int i = 0; i < 4; ++i) d(i, i) = PadicScalar::from_integer(5, ipow(5, s[i]) * (i + 1), 20);
    auto f = fredholm_from_charpoly(charpoly(d));
    EXPECT_EQ(root_slopes(newton_polygon(f, SlopeConvention::Fredholm)), (std::vector<Rational>{0, 2, 2, 5}));
}

TEST(Charpoly, DivisionFreeMatchesRational) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> e(-30, 30);
    const std::int64_t p = 3;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 9;
        RationalMatrix q(n, n);
        Matrix<PadicScalar> m(n, n, PadicScalar::zero(p, PadicScalar::kExactPrecision));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // column j divisible by p^j, the shape where pivoting loses digits
                q(i, j) = Rational(e(rng)) * Rational(ipow(Integer(p), j));
                if (trial % 3 == 0 && i == j) q(i, j) += Rational(1, 3);
                m(i, j) = PadicScalar::exact(p, q(i, j));
            }
        const auto f = fredholm_division_free(m);
        const auto c = charpoly(q);  // ascending, monic
        ASSERT_EQ(f.size(), n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            const PadicScalar want = PadicScalar::exact(p, c[n - i]);
            EXPECT_TRUE((f.coeffs[i] - want).is_zero()) << trial << " coefficient " << i;
            EXPECT_GE(f.coeffs[i].absprec(), 30 - static_cast<std::int64_t>(i));
        }
    }
}
