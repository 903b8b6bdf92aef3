#include "parahoric/error.hpp"
#include "parahoric/padic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parahoric;

namespace {

// Oracle: x == q modulo p^A, decided with exact rationals.
bool congruent(const PadicScalar& x, const Rational& q, std::int64_t A) {
    Rational diff = x.lift() - q;
    if (diff == 0) return true;
    return *valuation(diff, x.prime()) >= A;
}

Rational random_rational(std::mt19937_64& rng, std::int64_t p) {
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<int> e(-3, 4);
    Rational q = Rational(num(rng)) / (1 + std::abs(num(rng)) % 97);
    int k = e(rng);
    Integer pk = ipow(Integer(static_cast<long>(p)), static_cast<unsigned>(std::abs(k)));
    return k >= 0 ? Rational(q * pk) : Rational(q / pk);
}

} // namespace

TEST(Padic, ConstructionAndValuation) {
    auto x = PadicScalar::from_integer(3, 18, 10);
    EXPECT_EQ(*x.valuation(), 2);
    EXPECT_EQ(x.absprec(), 10);
    EXPECT_EQ(x.relprec(), 8);
    EXPECT_EQ(x.unit(), 2);
    auto z = PadicScalar::from_integer(3, 81 * 5, 4);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.absprec(), 4);
    auto q = PadicScalar::from_rational(5, Rational(7, 50), 6);
    EXPECT_EQ(*q.valuation(), -2);
    EXPECT_TRUE(congruent(q, Rational(7, 50), 6));
}

TEST(Padic, PrecisionContract) {
    auto a = PadicScalar::from_integer(3, 5, 10);
    auto b = PadicScalar::from_integer(3, 9, 4);
    EXPECT_EQ((a + b).absprec(), 4);
    EXPECT_EQ((a * b).absprec(), std::min(10 + 2, 4 + 0));
    auto z = PadicScalar::zero(3, 6);
    EXPECT_EQ((z * b).absprec(), 8);
    EXPECT_TRUE((z * b).is_zero());
    EXPECT_THROW(a / z, PrecisionError);
    EXPECT_THROW(a + PadicScalar::from_integer(5, 1, 3), ArgumentError);
}

TEST(Padic, RandomArithmeticAgainstRationals) {
    std::mt19937_64 rng(1234);
    for (std::int64_t p : {2, 3, 5, 7, 101}) {
        std::uniform_int_distribution<int> prec(1, static_cast<int>(PadicScalar::max_relprec(p)) - 6);
        for (int trial = 0; trial < 400; ++trial) {
            Rational qa = random_rational(rng, p), qb = random_rational(rng, p);
            if (qa == 0 || qb == 0) continue;
            const std::int64_t va = *valuation(qa, p), vb = *valuation(qb, p);
            const std::int64_t A = va + prec(rng), B = vb + prec(rng);
            auto a = PadicScalar::from_rational(p, qa, A);
            auto b = PadicScalar::from_rational(p, qb, B);
            auto s = a + b;
            EXPECT_EQ(s.absprec(), std::min(a.absprec(), b.absprec()));
            EXPECT_TRUE(congruent(s, qa + qb, s.absprec()));
            auto d = a - b;
            EXPECT_TRUE(congruent(d, qa - qb, d.absprec()));
            auto m = a * b;
            EXPECT_EQ(m.absprec(), std::min(a.absprec() + vb, b.absprec() + va));
            EXPECT_EQ(*m.valuation(), va + vb);
            EXPECT_TRUE(congruent(m, qa * qb, m.absprec()));
            auto v = a / b;
            EXPECT_EQ(*v.valuation(), va - vb);
            EXPECT_TRUE(congruent(v, qa / qb, v.absprec()));
        }
    }
}

TEST(Padic, WideModulusPath) {
    // p^r above 2^64 forces the 256-bit product
    const std::int64_t p = 3;
    const std::int64_t A = PadicScalar::max_relprec(p);
    Rational q1(Integer("123456789012345678901234567"), Integer("1000000007"));
    Rational q2(Integer("-98765432109876543210"), Integer("65537"));
    auto a = PadicScalar::from_rational(p, q1, A), b = PadicScalar::from_rational(p, q2, A);
    EXPECT_GT(A, 70);
    EXPECT_TRUE(congruent(a * b, q1 * q2, (a * b).absprec()));
    EXPECT_TRUE(congruent(a / b, q1 / q2, (a / b).absprec()));
    EXPECT_TRUE(congruent(b.pow(5), q2 * q2 * q2 * q2 * q2, b.pow(5).absprec()));
}

TEST(Padic, CappingAndShift) {
    auto x = PadicScalar::from_integer(7, 7 * 12345, 20);
    auto c = x.capped(3);
    EXPECT_EQ(c.absprec(), 3);
    EXPECT_TRUE(congruent(c, Rational(7 * 12345), 3));
    EXPECT_TRUE(x.capped(1).is_zero());
    EXPECT_EQ(*x.shifted(-3).valuation(), -2);
    EXPECT_TRUE(x.equals(c));
}
