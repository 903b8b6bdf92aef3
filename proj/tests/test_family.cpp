#include "parahoric/error.hpp"
#include "parahoric/family.hpp"
#include "parahoric/ocsymbol.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parahoric;

namespace {

WSeries random_series(std::int64_t p, std::size_t order, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> digit(-500, 500);
    WSeries x(p, order);
    for (std::size_t i = 0; i < order; ++i) x[i] = PadicScalar::exact(p, digit(rng));
    return x;
}

bool series_equal(const WSeries& a, const WSeries& b) {
    for (std::size_t i = 0; i < a.order(); ++i)
        if (!(a[i] - b[i]).is_zero()) return false;
    return true;
}

bool agrees_mod(const PadicScalar& a, const PadicScalar& b, std::int64_t digits) {
    const PadicScalar d = (a - b).capped(digits);
    return d.is_zero();
}

} // namespace

TEST(WSeries, RingLaws) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_series(5, 4, rng), b = random_series(5, 4, rng), c = random_series(5, 4, rng);
        EXPECT_TRUE(series_equal(a * b, b * a));
        EXPECT_TRUE(series_equal(a * (b + c), a * b + a * c));
        EXPECT_TRUE(series_equal((a * b) * c, a * (b * c)));
        EXPECT_TRUE(series_equal(a - a, WSeries(5, 4)));
        if (!a[0].is_zero()) {
            const auto one = WSeries::constant(PadicScalar::exact(5, 1), 4);
            EXPECT_TRUE(series_equal(a * a.inverse(), one));
        }
    }
}

TEST(WSeries, VariableAndEvaluation) {
    const auto w = WSeries::variable(3, 4);
    const auto x = (w + WSeries::constant(PadicScalar::exact(3, 2), 4)) * w;  // 2w + w^2
    const auto v = x.evaluate(PadicScalar::exact(3, 9));
    EXPECT_TRUE((v - PadicScalar::exact(3, 18 + 81)).is_zero());
    EXPECT_TRUE(series_equal(x.divided_by_w(1), (w + WSeries::constant(PadicScalar::exact(3, 2), 4)).truncated(3)));
    EXPECT_THROW(x.divided_by_w(2), ArgumentError);
    EXPECT_THROW(WSeries(3, 4).inverse(), PreconditionError);
}

TEST(LogTeichmullerFree, MatchesDirectSeries) {
    // log<1+p> = log(1+p), summed directly over the rationals
    for (std::int64_t p : {3, 5, 7}) {
        Rational sum = 0, power = 1;
        for (int n = 1; n <= 60; ++n) {
            power *= p;
            sum += Rational(n % 2 ? 1 : -1) * power / n;
        }
        const auto got = log_teichmuller_free(1 + p, p, 25);
        EXPECT_TRUE(agrees_mod(got, PadicScalar::from_rational(p, sum, 25), 25)) << p;
    }
}

TEST(LogTeichmullerFree, Homomorphism) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> pick(1, 400);
    for (std::int64_t p : {3, 5, 11}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::int64_t a = pick(rng), b = pick(rng);
            if (a % p == 0 || b % p == 0) continue;
            const auto la = log_teichmuller_free(a, p, 20), lb = log_teichmuller_free(b, p, 20);
            const auto lab = log_teichmuller_free(a * b, p, 20);
            EXPECT_TRUE(agrees_mod(la + lb, lab, 20));
            EXPECT_GE(la.valuation_bound(), 1);
            // <-a> = <a>
            EXPECT_TRUE(agrees_mod(log_teichmuller_free(-a, p, 20), la, 20));
        }
    }
    EXPECT_THROW(log_teichmuller_free(6, 3, 10), ArgumentError);
    EXPECT_THROW(log_teichmuller_free(3, 2, 10), UnsupportedError);
}

TEST(FamilyWeight, SpecializesToIntegerWeight) {
    // w1 = (p-1)p^2 makes z^{w1} = <z>^{w1}, so weight k0 + w1 is a classical weight
    const std::int64_t p = 3, k0 = 2, w1 = (p - 1) * p * p;
    WeightDiscFamily disc;
    disc.p = p;
    disc.k0 = k0;
    disc.order = 10;
    FamilyWeight fam(disc);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> entry(-9, 9);
    int checked = 0;
    while (checked < 25) {
        Mat2 g{entry(rng), entry(rng), p * entry(rng), entry(rng)};
        if (!in_sigma0(g, p)) continue;
        const std::size_t rows = 6, cols = 8;
        const auto a = fam.matrix(g, rows, cols);
        const auto exact = moment_action_matrix(g, k0 + w1, rows, cols);
        for (std::size_t j = 0; j < rows; ++j)
            for (std::size_t i = 0; i < cols; ++i) {
                const auto got = (*a)(j, i).evaluate(PadicScalar::exact(p, w1));
                EXPECT_TRUE(agrees_mod(got, PadicScalar::exact(p, exact(j, i)), 12))
                    << g.to_string() << " " << j << "," << i;
            }
        ++checked;
    }
    EXPECT_THROW(fam.matrix({1, 0, 1, 1}, 2, 2), ArgumentError);
}

TEST(FamilyFredholm, ConstantMatricesMatchScalarDeterminant) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> entry(-30, 30);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 5;
        Matrix<PadicScalar> m(n, n, PadicScalar::zero(3, PadicScalar::kExactPrecision));
        Matrix<WSeries> mw(n, n, WSeries(3, 2));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = PadicScalar::from_integer(3, entry(rng), 20);
                mw(i, j) = WSeries::constant(m(i, j), 2);
            }
        const auto f = fredholm_division_free(m);
        const auto fw = fredholm_division_free(mw);
        ASSERT_EQ(f.size(), fw.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            EXPECT_TRUE(agrees_mod(f.coeffs[i], fw[i][0], 15));
            EXPECT_TRUE(fw[i][1].is_zero());
        }
    }
}

TEST(FamilyFredholm, ZeroOperatorGivesOne) {
    for (std::size_t n : {1u, 3u, 6u}) {
        const auto f = fredholm_division_free(Matrix<WSeries>(n, n, WSeries(3, 4)));
        ASSERT_GE(f.size(), 1u);
        EXPECT_TRUE((f[0][0] - PadicScalar::exact(3, 1)).is_zero());
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t t = 0; t < 4; ++t)
                if (i != 0 || t != 0) EXPECT_TRUE(f[i][t].is_zero()) << n << " " << i << " " << t;
    }
}

TEST(FamilyFredholm, LinearFamily) {
    // diag(1 + w, 3w): det(1 - UX) = 1 - (1 + 4w)X + (3w + 3w^2)X^2
    Matrix<WSeries> m(2, 2, WSeries(3, 3));
    const auto w = WSeries::variable(3, 3);
    const auto one = WSeries::constant(PadicScalar::exact(3, 1), 3);
    m(0, 0) = (one + w).capped(20);
    m(1, 1) = w.scaled(PadicScalar::exact(3, 3)).capped(20);
    const auto f = fredholm_division_free(m);
    const std::vector<std::vector<std::int64_t>> expect{{1, 0, 0}, {-1, -4, 0}, {0, 3, 3}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t t = 0; t < 3; ++t)
            EXPECT_TRUE(agrees_mod(f[i][t], PadicScalar::exact(3, expect[i][t]), 15)) << i << " " << t;
}

TEST(FamilyCharpoly, CentreMatchesSingleWeightUpToBoundaryFactor) {
    // weight zero puts no condition on total measure; the family does, which
    // removes one factor 1 - lambda X from the weight-zero series
    const ManinBasis manin(11, 3);
    WeightDiscFamily disc;
    const auto fam = family_charpoly(manin, disc, 6, 10);
    EXPECT_EQ(fam.order_used, disc.order - 1);
    const auto centre = specialize_fredholm(fam, PadicScalar::zero(3, PadicScalar::kExactPrecision));
    const auto single = charpoly_up(manin, 0, 6, 10).fredholm;
    const PadicScalar lambda = centre.coeffs[1] - single.coeffs[1];
    EXPECT_GE(lambda.valuation_bound(), 1);
    for (std::size_t i = 1; i < single.size(); ++i) {
        const auto predicted = centre.coeffs[i] - lambda * centre.coeffs[i - 1];
        const std::int64_t digits = std::min(single.coeffs[i].absprec(), predicted.absprec());
        EXPECT_TRUE(agrees_mod(predicted, single.coeffs[i], digits)) << i;
    }
}

TEST(FamilyCharpoly, OrdinaryPartIsAdapted) {
    const ManinBasis manin(11, 3);
    const auto fam = family_charpoly(manin, WeightDiscFamily{}, 6, 10);
    const auto rep = slope_adapted(fam, Rational(0), PadicScalar::exact(3, 18));
    EXPECT_EQ(rep.verdict, AdaptedVerdict::Adapted) << rep.reason;
    ASSERT_TRUE(rep.breakpoint.has_value());
    const ClassicalSpace classical(33, 0);
    const auto classical_np = newton_polygon(charpoly(classical.hecke(3)), 3);
    // the family drops the weight-zero boundary direction, which is not ordinary
    EXPECT_EQ(*rep.breakpoint, slope_le_h_dim(classical_np, Rational(0)));
    for (const auto& [label, count] : rep.specializations) EXPECT_EQ(count, *rep.breakpoint) << label;
    EXPECT_THROW(specialize_fredholm(fam, PadicScalar::exact(3, 2)), ArgumentError);
}

TEST(FamilyCharpoly, CentreMatchesSingleWeightAtPositiveWeight) {
    const ManinBasis manin(11, 3);
    WeightDiscFamily disc;
    disc.k0 = 2;
    const auto fam = family_charpoly(manin, disc, 6, 8);
    EXPECT_EQ(fam.order_used, disc.order);
    const auto centre = specialize_fredholm(fam, PadicScalar::zero(3, PadicScalar::kExactPrecision));
    const auto single = charpoly_up(manin, 2, 6, 8).fredholm;
    ASSERT_EQ(centre.size(), single.size());
    for (std::size_t i = 0; i < single.size(); ++i) {
        const std::int64_t digits = std::min(single.coeffs[i].absprec(), centre.coeffs[i].absprec());
        EXPECT_GE(digits, 2) << i;
        EXPECT_TRUE(agrees_mod(centre.coeffs[i], single.coeffs[i], digits)) << i;
    }
}
