#include "parahoric/error.hpp"
#include "parahoric/ocsymbol.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parahoric;

namespace {

std::shared_ptr<const ManinBasis> level(std::int64_t N, std::int64_t p) {
    return std::make_shared<const ManinBasis>(N, p);
}

std::vector<Dist<PadicScalar>> random_params(const SingleWeightSpace& space, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> digit(-40, 40);
    std::vector<Dist<PadicScalar>> params;
    for (std::size_t i = 1; i < space.num_generators(); ++i) {
        Dist<PadicScalar> d{{}, 0};
        for (std::size_t j = 0; j < space.moments(); ++j) d.moments.push_back(PadicScalar::exact(space.prime(), digit(rng)));
        params.push_back(std::move(d));
    }
    return space.project_torsion(params);
}

// Kill the total-measure defect by moving moment 0 of the first free generator.
std::vector<Dist<PadicScalar>> fix_total_measure(const SingleWeightSpace& space, std::vector<Dist<PadicScalar>> x) {
    const PadicScalar l = space.total_measure_defect(x);
    if (l.is_zero()) return x;
    const auto& gens = space.manin().generators();
    for (std::size_t i = 1; i < gens.size(); ++i) {
        if (gens[i].kind != GeneratorKind::Free) continue;
        for (std::size_t j = 0; j < space.moments(); ++j) {
            std::vector<Dist<PadicScalar>> e(x.size(), space.zero_dist(space.moments()));
            e[i - 1].moments[j] = PadicScalar::exact(space.prime(), 1);
            const PadicScalar r = space.total_measure_defect(e);
            if (r.is_zero()) continue;
            x[i - 1].moments[j] -= l / r;
            return x;
        }
    }
    throw std::runtime_error("no pivot");
}

bool dist_equal(const Dist<PadicScalar>& a, const Dist<PadicScalar>& b, std::size_t count) {
    for (std::size_t j = 0; j < count; ++j)
        if (!(a.moments[j] - b.moments[j]).is_zero()) return false;
    return true;
}

} // namespace

TEST(Sigma0Action, Examples) {
    SingleWeight w(5, 3);
    Dist<PadicScalar> mu{{}, PadicScalar::kExactPrecision};
    for (int j = 0; j < 6; ++j) mu.moments.push_back(PadicScalar::exact(5, j * j + 1));
    EXPECT_TRUE(dist_equal(sigma0_action(w, Mat2::identity(), mu), mu, 6));
    const auto scaled = sigma0_action(w, {1, 0, 0, 5}, mu);
    for (int j = 0; j < 6; ++j)
        EXPECT_TRUE((scaled.moments[j] - PadicScalar::exact(5, (j * j + 1) * static_cast<std::int64_t>(std::pow(5, j)))).is_zero());
    const auto moved = sigma0_action(w, {1, 1, 0, 1}, mu);
    for (int j = 0; j < 6; ++j) {
        Integer s = 0;
        for (int i = 0; i <= j; ++i) s += binomial(j, i) * (i * i + 1);
        EXPECT_TRUE((moved.moments[j] - PadicScalar::exact(5, Rational(s))).is_zero());
    }
}

TEST(Sigma0Action, PreservesIntegrality) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> e(-20, 20);
    SingleWeight w(3, 2);
    for (int t = 0; t < 50; ++t) {
        Mat2 g{1 + 3 * e(rng), e(rng), 3 * e(rng), e(rng)};
        if (g.a % 3 == 0 || g.det() == 0) continue;
        Dist<PadicScalar> mu{{}, 0};
        for (int j = 0; j < 8; ++j) mu.moments.push_back(PadicScalar::exact(3, e(rng)));
        for (const auto& m : sigma0_action(w, g, mu).moments) EXPECT_GE(m.valuation_bound(), 0);
    }
}

TEST(OCSymbol, FromParametersSatisfiesRelations) {
    std::mt19937_64 rng(5);
    for (auto [N, p, k] : std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>{
             {11, 3, 0}, {11, 3, 2}, {1, 13, 0}, {7, 5, 2}, {1, 11, 4}}) {
        SingleWeightSpace space(level(N, p), SingleWeight(p, k), 8);
        auto x = fix_total_measure(space, random_params(space, rng));
        const OCSymbol phi = space.from_parameters(x);
        EXPECT_TRUE(space.satisfies_relations(phi)) << N << " " << p << " " << k;
        // Hecke operators preserve the relations
        EXPECT_TRUE(space.satisfies_relations(space.up(phi))) << N << " " << p << " " << k;
    }
}

TEST(OCSymbol, ZeroMapsToZero) {
    SingleWeightSpace space(level(11, 3), SingleWeight(3, 0), 6);
    for (const auto& d : space.up(space.zero()).values)
        for (const auto& m : d.moments) EXPECT_TRUE(m.is_zero());
}

TEST(OCSymbol, SpecializationEquivariance) {
    // U_p on the generator presentation against the brute-force classical
    // operator at level Np, on 100 random symbols.
    std::mt19937_64 rng(17);
    int checked = 0;
    for (auto [N, p, k] : std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>{{11, 3, 0}, {5, 7, 2}}) {
        auto mb = level(N, p);
        SingleWeightSpace space(mb, SingleWeight(p, k), 6);
        ClassicalSpace classical(N * p, k);
        const auto op = classical.coset_operator(hecke_representatives(p, N * p));
        const std::size_t d = classical.value_dim();
        for (int t = 0; t < 50; ++t) {
            const OCSymbol phi = space.from_parameters(fix_total_measure(space, random_params(space, rng)));
            const auto cv = space.coset_values(phi);
            // classical coordinates of the specialization on the classical lifts
            std::vector<PadicScalar> coords;
            for (std::size_t x = 0; x < classical.num_cosets(); ++x) {
                const auto v = space.value_on_edge(cv, classical.edge(x), Mat2::identity());
                for (std::size_t j = 0; j < d; ++j) coords.push_back(v.moments[j]);
            }
            const OCSymbol image = space.up(phi);
            const auto icv = space.coset_values(image);
            for (std::size_t x = 0; x < classical.num_cosets(); ++x) {
                const auto v = space.value_on_edge(icv, classical.edge(x), Mat2::identity());
                for (std::size_t j = 0; j < d; ++j) {
                    PadicScalar acc = PadicScalar::zero(p, PadicScalar::kExactPrecision);
                    for (std::size_t c = 0; c < coords.size(); ++c)
                        if (op(x * d + j, c) != 0) acc += PadicScalar::exact(p, op(x * d + j, c)) * coords[c];
                    ASSERT_TRUE((acc - v.moments[j]).is_zero()) << "coset " << x << " moment " << j;
                    ASSERT_GE((acc - v.moments[j]).absprec(), 4);
                }
            }
            ++checked;
        }
    }
    EXPECT_EQ(checked, 100);
}

// The difference of two lifts of one weight-zero symbol has m_0 = 0 everywhere;
// each U_p application buys one more digit on the higher moments.
TEST(OCSymbol, UpDeepensFiltration) {
    std::mt19937_64 rng(23);
    for (auto [N, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{{11, 3}, {7, 5}, {1, 11}}) {
        constexpr std::size_t M = 7;
        SingleWeightSpace space(level(N, p), SingleWeight(p, 0), M);
        const auto& gens = space.manin().generators();
        for (int trial = 0; trial < 4; ++trial) {
            auto params = random_params(space, rng);
            for (auto& d : params) d.moments[0] = PadicScalar::zero(p, PadicScalar::kExactPrecision);
            params = space.project_torsion(params);
            OCSymbol diff = space.from_parameters(params);
            const PadicScalar vertical = diff.values[0].moments[0];
            if (!vertical.is_zero()) {
                bool moved = false;
                for (std::size_t j = 1; j < M && !moved; ++j)
                    for (std::size_t i = 1; i < gens.size() && !moved; ++i) {
                        if (gens[i].kind != GeneratorKind::Free) continue;
                        std::vector<Dist<PadicScalar>> unit(params.size(), space.zero_dist(M));
                        unit[i - 1].moments[j] = PadicScalar::exact(p, 1);
                        const PadicScalar resp = space.from_parameters(unit).values[0].moments[0];
                        if (resp.is_zero()) continue;
                        params[i - 1].moments[j] -= vertical / resp;
                        moved = true;
                    }
                ASSERT_TRUE(moved) << N << " " << p;
                diff = space.from_parameters(params);
            }
            ASSERT_TRUE(space.satisfies_relations(diff));
            for (const auto& d : diff.values) ASSERT_TRUE(d.moments[0].is_zero());
            for (std::size_t j = 1; j <= M; ++j) {
                diff = space.up(diff);
                for (std::size_t g = 0; g < diff.values.size(); ++g) {
                    EXPECT_TRUE(diff.values[g].moments[0].is_zero()) << N << " " << p << " j=" << j;
                    for (std::size_t i = 1; i < M; ++i) {
                        const auto need = static_cast<std::int64_t>(std::min(j, M - i));
                        EXPECT_TRUE(diff.values[g].moments[i].capped(need).is_zero())
                            << N << " " << p << " j=" << j << " g=" << g << " i=" << i;
                    }
                }
            }
        }
    }
}

TEST(OCSymbol, SpecializeNeedsMoments) {
    OCSymbol phi;
    phi.values.push_back({{PadicScalar::exact(3, 1)}, 0});
    EXPECT_THROW(specialize(phi, 2), PrecisionError);
    EXPECT_EQ(specialize(phi, 0).values[0].size(), 1u);
}

TEST(Stabilization, IsAnUpEigensymbol) {
    const auto psi = newform_symbol(11, 0, 3);
    auto mb = level(11, 3);
    const auto ap = hecke_eigenvalue(psi, 3);
    ASSERT_EQ(ap, -1);
    const auto roots = hecke_polynomial_roots(Integer(-1), 3, 0, 20);
    // roots of X^2 + X + 3
    for (const auto& r : {roots.small, roots.large})
        EXPECT_TRUE((r * r + r + PadicScalar::exact(3, 3)).capped(18).is_zero());
    EXPECT_EQ(*roots.small.valuation(), 0);
    EXPECT_EQ(*roots.large.valuation(), 1);
    for (const auto& alpha : {roots.small, roots.large}) {
        const OCSymbol st = p_stabilize(psi, *mb, alpha);
        SingleWeightSpace space(mb, SingleWeight(3, 0), 1);
        EXPECT_TRUE(space.satisfies_relations(st));
        const OCSymbol image = space.up(st);
        for (std::size_t g = 0; g < st.values.size(); ++g)
            EXPECT_TRUE((image.values[g].moments[0] - alpha * st.values[g].moments[0]).capped(15).is_zero());
    }
}

TEST(Lift, OrdinaryLevel11) {
    const auto psi = newform_symbol(11, 0, 3);
    auto mb = level(11, 3);
    const auto roots = hecke_polynomial_roots(Integer(-1), 3, 0, 30);
    const OCSymbol st = p_stabilize(psi, *mb, roots.small);
    LiftOptions opt;
    opt.moments = 10;
    opt.seed = 1;
    const auto a = lift_symbol(mb, 0, st, roots.small, opt);
    EXPECT_TRUE(a.converged);
    EXPECT_LE(a.iterations, 40u);
    EXPECT_TRUE(a.specialization_matches);
    EXPECT_TRUE((a.eigenvalue - roots.small).capped(8).is_zero());
    opt.seed = 99;
    const auto b = lift_symbol(mb, 0, st, roots.small, opt);
    for (std::size_t g = 0; g < a.symbol.values.size(); ++g)
        for (std::size_t j = 0; j < 10; ++j)
            EXPECT_TRUE((a.symbol.values[g].moments[j] - b.symbol.values[g].moments[j]).capped(10 - j).is_zero());
    // slope 1 = k + 1 is rejected
    EXPECT_THROW(lift_symbol(mb, 0, p_stabilize(psi, *mb, roots.large), roots.large, opt), PreconditionError);
}

TEST(Lift, ZeroLiftsToZero) {
    auto mb = level(11, 3);
    OCSymbol zero;
    for (std::size_t i = 0; i < mb->generators().size(); ++i) zero.values.push_back({{PadicScalar::zero(3, 20)}, 0});
    LiftOptions opt;
    const auto r = lift_symbol(mb, 0, zero, PadicScalar::exact(3, 1), opt);
    EXPECT_TRUE(r.converged);
    for (const auto& d : r.symbol.values)
        for (const auto& m : d.moments) EXPECT_TRUE(m.is_zero());
}

TEST(Charpoly, DiagonalToy) {
    Matrix<PadicScalar> m(3, 3, PadicScalar::zero(3, PadicScalar::kExactPrecision));
    m(0, 0) = PadicScalar::exact(3, 1);
    m(1, 1) = PadicScalar::exact(3, 9);
    m(2, 2) = PadicScalar::exact(3, 27 * 2);
    const auto f = fredholm_from_charpoly(charpoly(m));
    const auto slopes = root_slopes(newton_polygon(f, SlopeConvention::Fredholm));
    EXPECT_EQ(slopes, (std::vector<Rational>{0, 2, 3}));
}

TEST(Charpoly, Level33WeightZero) {
    const auto r = charpoly_up(ManinBasis(11, 3), 0, 8, 10);
    // classical oracle: slopes below k + 1 = 1 are classical
    const ClassicalSpace classical(33, 0);
    const auto classical_np = newton_polygon(charpoly(classical.hecke(3)), 3);
    std::int64_t classical_zero = slope_le_h_dim(classical_np, Rational(0));
    EXPECT_EQ(slope_le_h_dim(r.polygon, Rational(0)), classical_zero);
    bool has_one = false;
    for (const auto& s : r.certified_slopes) has_one |= s == 1;
    EXPECT_TRUE(has_one);
    // heights away from the uncertified tail
    for (int h = 0; h < 3; ++h)
        EXPECT_LE(slope_le_h_dim(r.polygon, Rational(h)), slope_le_h_dim(r.polygon, Rational(h + 1)));
    EXPECT_THROW(slope_le_h_dim(r.polygon, Rational(4)), AmbiguityError);
}
