#include "parahoric/error.hpp"
#include "parahoric/induction.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parahoric;

namespace {

Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int d) {
    std::uniform_int_distribution<int> coef(-9, 9), keep(0, 2);
    Polynomial f(nvars);
    for (const auto& e : monomials_up_to(nvars, d))
        if (keep(rng) == 0) f.add_term(e, coef(rng));
    return f;
}

} // namespace

TEST(LeftTranslation, GL2) {
    GLInduction gl2(2);
    auto field = gl2.left_translation_field(0);
    ASSERT_EQ(field.coeffs.size(), 1u);
    EXPECT_EQ(field.coeffs[0], Polynomial::constant(1, -1));
}

TEST(LeftTranslation, GL3ByRowOperations) {
    GLInduction gl3(3);
    const auto& c = gl3.coords();
    const std::size_t z12 = c.index(0, 1), z13 = c.index(0, 2), z23 = c.index(1, 2);
    auto a1 = gl3.left_translation_field(0);
    EXPECT_EQ(a1.coeffs[z12], Polynomial::constant(3, -1));
    EXPECT_EQ(a1.coeffs[z13], -Polynomial::variable(3, z23));
    EXPECT_TRUE(a1.coeffs[z23].is_zero());
    auto a2 = gl3.left_translation_field(1);
    EXPECT_EQ(a2.coeffs[z23], Polynomial::constant(3, -1));
    EXPECT_TRUE(a2.coeffs[z12].is_zero());
    EXPECT_TRUE(a2.coeffs[z13].is_zero());
}

TEST(Theta, GL2IsSignedDerivativePower) {
    GLInduction gl2(2);
    for (int k = 0; k < 5; ++k) {
        for (int m = 0; m < 9; ++m) {
            Polynomial f = Polynomial::monomial({m});
            Polynomial expect(1);
            if (m > k) {
                Integer falling = 1;
                for (int i = 0; i <= k; ++i) falling *= m - i;
                expect = Polynomial::monomial({m - k - 1}, Rational((k % 2 == 0 ? -1 : 1) * falling));
            }
            EXPECT_EQ(gl2.theta(Weight{{k, 0}}, 0, f), expect);
        }
    }
    EXPECT_EQ(gl2.theta(Weight{{0, 0}}, 0, Polynomial::monomial({3})), Polynomial::monomial({2}, -3));
    EXPECT_THROW(gl2.theta(Weight{{0, 2}}, 0, Polynomial::monomial({1})), ArgumentError);
    EXPECT_TRUE(gl2.theta(Weight{{3, 1}}, 0, Polynomial::constant(1, 7)).is_zero());
}

TEST(Theta, MatrixMatchesPolynomialAction) {
    GLInduction gl3(3);
    auto b = gl3.basis(3);
    auto m = gl3.theta_operator(Weight{{2, 1, 0}}, 0, 3);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(rng, 3, 3);
        auto v = gl3.to_vector(b, f);
        EXPECT_EQ(gl3.from_vector(b, m.apply(v)), gl3.theta(Weight{{2, 1, 0}}, 0, f));
    }
}

TEST(RestrictRn, Examples) {
    GLInduction gl3(3);
    auto gl3d = gl3.datum();
    ParabolicType q(gl3d, {0});
    const auto& c = gl3.coords();
    const std::size_t z12 = c.index(0, 1), z13 = c.index(0, 2), z23 = c.index(1, 2);
    std::vector<Polynomial> identity(3, Polynomial(6));
    EXPECT_EQ(gl3.restrict_R_n(Polynomial::variable(3, z12), q, identity), Polynomial::variable(6, z12));
    auto r = gl3.restrict_R_n(Polynomial::variable(3, z13), q, gl3.generic_n_point(q));
    EXPECT_EQ(r, Polynomial::variable(6, z12) * Polynomial::variable(6, 3 + z23) + Polynomial::variable(6, 3 + z13));
    EXPECT_EQ(gl3.restrict_R_n(Polynomial::constant(3, 5), q, identity), Polynomial::constant(6, 5));
}

TEST(Bgg, GL2KernelDimensions) {
    GLInduction gl2(2);
    auto d = gl2.datum();
    for (int k = 0; k <= 8; ++k) {
        for (int deg = k; deg <= k + 6; ++deg) {
            auto rep = gl2.bgg_check(ParabolicType::borel(d), ParabolicType::full(d), Weight{{k, 0}}, deg);
            EXPECT_TRUE(rep.pass);
            EXPECT_EQ(rep.dim_kernel, static_cast<std::size_t>(k + 1));
            EXPECT_EQ(weyl_dimension(*d, Weight{{k, 0}}), k + 1);
        }
    }
    auto rep0 = gl2.bgg_check(ParabolicType::borel(d), ParabolicType::full(d), Weight{{0, 0}}, 0);
    EXPECT_EQ(rep0.dim_kernel, 1u);
}

TEST(Bgg, GL3MaximalParabolics) {
    GLInduction gl3(3);
    auto d = gl3.datum();
    for (Weight lambda : {Weight{{1, 0, 0}}, Weight{{2, 1, 0}}, Weight{{2, 0, 0}}}) {
        for (std::size_t beta : {0u, 1u}) {
            ParabolicType q(d, {beta});
            const auto thr = gl3.bgg_threshold(ParabolicType::borel(d), q, lambda);
            for (int deg = 0; deg <= thr + 1; ++deg) {
                auto rep = gl3.bgg_check(ParabolicType::borel(d), q, lambda, deg);
                EXPECT_TRUE(rep.pass) << "beta " << beta << " d " << deg;
            }
        }
    }
    EXPECT_THROW(gl3.bgg_check(ParabolicType::borel(d), ParabolicType::full(d), Weight{{1, 0, 0}}, 2),
                 ArgumentError);
    EXPECT_THROW(gl3.bgg_check(ParabolicType::borel(d), ParabolicType(d, {0}), Weight{{0, 1, 0}}, 2),
                 ArgumentError);
}

TEST(Bgg, KernelIndependentlyEnumerated) {
    // Delta_Q = {alpha_2}: A^Q is "degree in z23 at most lambda_2 - lambda_3"
    GLInduction gl3(3);
    auto d = gl3.datum();
    const std::size_t z23 = gl3.coords().index(1, 2);
    int count = 0;
    for (const auto& e : gl3.basis(4))
        if (e[z23] <= 0) ++count;
    auto rep = gl3.bgg_check(ParabolicType::borel(d), ParabolicType(d, {1}), Weight{{1, 0, 0}}, 4);
    EXPECT_EQ(rep.dim_kernel, static_cast<std::size_t>(count));
    EXPECT_TRUE(rep.pass);
}

TEST(Bgg, ThetaKillsParahoricVectors) {
    GLInduction gl4(4);
    auto d = gl4.datum();
    ParabolicType q(d, {0, 2});
    Weight lambda{{3, 1, 1, 0}};
    auto aq = gl4.parahoric_basis(q, lambda, 3);
    auto b = gl4.basis(3);
    for (std::size_t c = 0; c < aq.cols(); ++c) {
        auto f = gl4.from_vector(b, aq.column(c));
        EXPECT_TRUE(gl4.theta(lambda, 0, f).is_zero());
        EXPECT_TRUE(gl4.theta(lambda, 2, f).is_zero());
    }
    EXPECT_THROW(gl4.parahoric_basis(ParabolicType(d, {0, 1}), lambda, 2), UnsupportedError);
}

TEST(ThetaPreserves, Examples) {
    GLInduction gl3(3);
    auto d = gl3.datum();
    EXPECT_TRUE(gl3.theta_preserves_parahoric(ParabolicType(d, {0}), 1, Weight{{1, 0, 0}}, 3));
    EXPECT_TRUE(gl3.theta_preserves_parahoric(ParabolicType(d, {1}), 0, Weight{{2, 1, 0}}, 3));
    EXPECT_TRUE(gl3.theta_preserves_parahoric(ParabolicType::borel(d), 0, Weight{{2, 1, 0}}, 2));
    EXPECT_THROW(gl3.theta_preserves_parahoric(ParabolicType(d, {0}), 0, Weight{{1, 0, 0}}, 2), PreconditionError);
}

TEST(TorusAction, Substitutions) {
    GLInduction gl2(2);
    TorusElement t(gl2.datum(), Cocharacter{{0, 1}}, 5);
    EXPECT_EQ(gl2.star_action_torus(t, Polynomial::monomial({3}, 2)), Polynomial::monomial({3}, 250));
    GLInduction gl3(3);
    TorusElement t3(gl3.datum(), Cocharacter{{0, 1, 2}}, 3);
    const auto& c = gl3.coords();
    EXPECT_EQ(gl3.star_action_torus(t3, Polynomial::variable(3, c.index(0, 2))),
              Polynomial::variable(3, c.index(0, 2)) * Rational(9));
    EXPECT_EQ(gl3.star_action_torus(t3, Polynomial::variable(3, c.index(1, 2))),
              Polynomial::variable(3, c.index(1, 2)) * Rational(3));
    TorusElement id(gl3.datum(), Cocharacter{{0, 0, 0}}, 3);
    Polynomial f = Polynomial::variable(3, 0) * Polynomial::variable(3, 2) + Polynomial::constant(3, 4);
    EXPECT_EQ(gl3.star_action_torus(id, f), f);
    EXPECT_THROW(gl3.star_action_torus(TorusElement(gl3.datum(), Cocharacter{{1, 0, 0}}, 3), f), PreconditionError);
}

TEST(TorusAction, IntegralityAndIntertwining) {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 4; ++n) {
        GLInduction g(n);
        std::uniform_int_distribution<int> step(0, 2);
        for (int trial = 0; trial < 40; ++trial) {
            IntVec mu(n, 0);
            for (int i = 1; i < n; ++i) mu[i] = mu[i - 1] + step(rng);
            TorusElement t(g.datum(), Cocharacter{mu}, 3);
            Polynomial f = random_poly(rng, g.nvars(), 4);
            EXPECT_TRUE(g.star_action_torus(t, f).has_integer_coefficients());
            for (std::size_t a = 0; a + 1 < static_cast<std::size_t>(n); ++a) {
                Weight lambda(IntVec(n, 0));
                lambda.coords[a] = step(rng);
                EXPECT_TRUE(g.intertwining_check(t, a, lambda, f).pass);
            }
        }
    }
}

TEST(TorusAction, CommutesWithRestriction) {
    // R_n(t*f) at the point n equals R applied to f at the conjugated point
    GLInduction gl3(3);
    auto d = gl3.datum();
    ParabolicType q(d, {0});
    TorusElement t(d, Cocharacter{{0, 1, 3}}, 2);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> v(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_poly(rng, 3, 3);
        std::vector<Polynomial> pt = gl3.generic_n_point(q);
        std::vector<Polynomial> numeric(3, Polynomial(6));
        std::vector<Polynomial> scaled(3, Polynomial(6));
        for (std::size_t var = 0; var < 3; ++var) {
            if (pt[var].is_zero()) continue;
            auto [i, j] = gl3.coords().position(var);
            const Rational val = v(rng);
            numeric[var] = Polynomial::constant(6, val);
            scaled[var] = Polynomial::constant(6, val * Rational(ipow(2, t.mu().coords[j] - t.mu().coords[i])));
        }
        Polynomial lhs = gl3.restrict_R_n(gl3.star_action_torus(t, f), q, numeric);
        // Levi variable z12 is rescaled by the same torus action
        Polynomial rhs = gl3.restrict_R_n(f, q, scaled);
        std::vector<Polynomial> levi_scale;
        for (std::size_t var = 0; var < 6; ++var) {
            Polynomial x = Polynomial::variable(6, var);
            if (var < 3) {
                auto [i, j] = gl3.coords().position(var);
                x = x * Rational(ipow(2, t.mu().coords[j] - t.mu().coords[i]));
            }
            levi_scale.push_back(x);
        }
        EXPECT_EQ(lhs, rhs.substitute(levi_scale));
    }
}
