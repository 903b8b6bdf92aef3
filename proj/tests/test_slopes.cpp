#include "parahoric/error.hpp"
#include "parahoric/slopes.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parahoric;

namespace {

Cocharacter last_slots(int n, int r) {
    IntVec mu(n, 0);
    for (int k = n - r; k < n; ++k) mu[k] = 1;
    return Cocharacter{mu};
}

} // namespace

TEST(TorusPlus, Membership) {
    for (int n = 2; n <= 5; ++n) {
        auto d = RootDatum::gl(n);
        IntVec mu(n);
        for (int i = 0; i < n; ++i) mu[i] = i;
        EXPECT_TRUE(in_T_plus(TorusElement(d, Cocharacter{mu}, 3)));
        EXPECT_TRUE(in_T_plus(TorusElement(d, Cocharacter{IntVec(n, 0)}, 3)));
    }
    EXPECT_FALSE(in_T_plus(TorusElement(RootDatum::gl(2), Cocharacter{{1, 0}}, 5)));
}

TEST(TorusPlusPlus, ParahoricVersusBorel) {
    const int n = 5;
    auto d = RootDatum::gl(n);
    for (int r = 1; r < n; ++r) {
        TorusElement t(d, last_slots(n, r), 7);
        // Levi GL(n-r) x GL(r): every simple root except alpha_{n-r}
        std::vector<std::size_t> levi;
        for (int i = 0; i + 1 < n; ++i)
            if (i != n - r - 1) levi.push_back(i);
        EXPECT_TRUE(in_T_plusplus(t, ParabolicType(d, levi)));
        if (n > 2) EXPECT_FALSE(in_T_plusplus(t, ParabolicType::borel(d)));
    }
    TorusElement id(d, Cocharacter{IntVec(n, 0)}, 7);
    EXPECT_FALSE(in_T_plusplus(id, ParabolicType(d, {0, 1})));
    EXPECT_TRUE(in_T_plusplus(id, ParabolicType::full(d)));
    EXPECT_THROW(in_T_plusplus(TorusElement(d, Cocharacter{{1, 0, 0, 0, 0}}, 7), ParabolicType::borel(d)),
                 PreconditionError);
}

TEST(TorusPlusPlus, GSp4Siegel) {
    auto g = RootDatum::gsp4();
    TorusElement sie(g, Cocharacter{{0, 0, 1}}, 3);
    EXPECT_EQ(sie.valuation(0), 0);
    EXPECT_EQ(sie.valuation(1), -1);
    EXPECT_TRUE(in_T_plusplus(sie, ParabolicType(g, {0})));
    TorusElement kli(g, Cocharacter{{0, 1, 2}}, 3);
    EXPECT_TRUE(in_T_plusplus(kli, ParabolicType(g, {1})));
    EXPECT_FALSE(in_T_plusplus(kli, ParabolicType(g, {0})));
}

TEST(HCrit, ChainBounds) {
    for (int n = 2; n <= 6; ++n) {
        auto d = RootDatum::gl(n);
        Weight lambda;
        for (int i = 0; i < n; ++i) lambda.coords.push_back(3 * (n - i) + (i % 2));
        for (int i = 0; i + 1 < n; ++i) {
            TorusElement t(d, last_slots(n, n - i - 1), 5);
            EXPECT_EQ(h_crit(t, i, lambda), Rational(lambda.coords[i] - lambda.coords[i + 1] + 1));
        }
    }
    auto g = RootDatum::gsp4();
    TorusElement sie(g, Cocharacter{{0, 0, 1}}, 3), kli(g, Cocharacter{{0, 1, 2}}, 3);
    for (int k1 = 0; k1 < 8; ++k1)
        for (int k2 = 0; k2 <= k1; ++k2) {
            EXPECT_EQ(h_crit(sie, 1, Weight{{k1, k2, 0}}), Rational(k2 + 1));
            EXPECT_EQ(h_crit(kli, 0, Weight{{k1, k2, 0}}), Rational(k1 - k2 + 1));
        }
}

TEST(HCrit, MonotoneInPairing) {
    auto d = RootDatum::gl(3);
    TorusElement t(d, Cocharacter{{0, 1, 1}}, 3);
    Rational prev = -1000;
    for (int a = 0; a < 10; ++a) {
        Rational h = h_crit(t, 0, Weight{{a, 0, 0}});
        EXPECT_GT(h, prev);
        prev = h;
    }
}

TEST(Factorization, GreedyAndVerify) {
    auto gl3 = RootDatum::gl(3);
    auto chain = make_chain(ParabolicType::borel(gl3), {0, 1});
    auto cd = greedy_factorization(chain, 3);
    ASSERT_EQ(cd.elements.size(), 2u);
    EXPECT_EQ(cd.elements[0].mu(), (Cocharacter{{0, 1, 1}}));
    EXPECT_EQ(cd.elements[1].mu(), (Cocharacter{{0, 0, 1}}));
    EXPECT_TRUE(verify_factorization(cd));
    auto bad = cd;
    bad.elements[0] = TorusElement(gl3, Cocharacter{{1, 0, 0}}, 3);
    EXPECT_FALSE(verify_factorization(bad));
    auto g = greedy_factorization(ParabolicType::full(gl3));
    EXPECT_TRUE(g.elements.empty());
    EXPECT_TRUE(verify_factorization(g));
    for (int n = 2; n <= 6; ++n) {
        auto d = RootDatum::gl(n);
        for (const auto& c : parabolic_chains(ParabolicType::borel(d))) {
            EXPECT_TRUE(verify_factorization(greedy_factorization(c)));
            if (n > 4) break;
        }
    }
    auto gs = RootDatum::gsp4();
    for (const auto& c : parabolic_chains(ParabolicType::borel(gs))) EXPECT_TRUE(verify_factorization(greedy_factorization(c)));
    auto custom = std::make_shared<RootDatum>("custom", 2, std::vector<IntVec>{{1, -1}}, std::vector<IntVec>{{1, -1}});
    EXPECT_THROW(greedy_factorization(ParabolicType::borel(custom)), UnsupportedError);
}

TEST(Verdict, Examples) {
    auto gl2 = RootDatum::gl(2);
    auto cd = greedy_factorization(ParabolicType::borel(gl2), 5);
    auto r = q_noncritical_verdict(cd, Weight{{2, 0}}, {Rational(0)});
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.steps[0].h_crit, Rational(3));
    auto g = RootDatum::gsp4();
    auto sie = greedy_factorization(ParabolicType(g, {0}), 3);
    auto f = q_noncritical_verdict(sie, Weight{{4, 0, 0}}, {Rational(1)});
    EXPECT_FALSE(f.verdict);
    auto full = greedy_factorization(ParabolicType::full(g), 3);
    EXPECT_TRUE(q_noncritical_verdict(full, Weight{{1, 1, 0}}, {}).verdict);
    EXPECT_THROW(q_noncritical_verdict(cd, Weight{{0, 2}}, {Rational(0)}), ArgumentError);
    EXPECT_THROW(q_noncritical_verdict(cd, Weight{{2, 0}}, {}), ArgumentError);
}

TEST(Verdict, ChainOrderIrrelevantForSameTriples) {
    auto d = RootDatum::gl(4);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coin(0, 6);
    auto chains = parabolic_chains(ParabolicType::borel(d));
    for (int trial = 0; trial < 50; ++trial) {
        Weight lambda{{coin(rng) + 12, coin(rng) + 6, coin(rng), 0}};
        if (!d->is_dominant(lambda)) continue;
        std::vector<Rational> by_root(3);
        for (auto& v : by_root) v = Rational(coin(rng)) / 2;
        std::optional<bool> first;
        for (const auto& c : chains) {
            ControllingDatum cd{c, {}};
            std::vector<Rational> vals;
            for (auto a : c.added_roots) {
                cd.elements.emplace_back(d, fundamental_coweight(*d, a), 3);
                vals.push_back(by_root[a]);
            }
            bool v = q_noncritical_verdict(cd, lambda, vals).verdict;
            if (!first) first = v;
            EXPECT_EQ(*first, v);
        }
    }
}

TEST(Normalization, ShiftByPairing) {
    auto gl2 = RootDatum::gl(2);
    TorusElement t(gl2, Cocharacter{{0, 1}}, 3);
    EXPECT_EQ(normalize_valuation(t, Weight{{4, 0}}, Rational(1) / 2), Rational(1) / 2);
    EXPECT_EQ(normalize_valuation(t, Weight{{0, 4}}, Rational(1) / 2), Rational(-7) / 2);
    EXPECT_EQ(normalize_valuation(t, Weight{{0, 0}}, Rational(5)), Rational(5));
}
