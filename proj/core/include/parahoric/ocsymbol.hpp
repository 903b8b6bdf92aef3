#pragma once

#include "parahoric/classical.hpp"
#include "parahoric/distribution.hpp"
#include "parahoric/manin.hpp"
#include "parahoric/newton.hpp"

#include <cstdint>
#include <functional>
#include <future>
#include <memory>
#include <optional>
#include <thread>
#include <vector>

namespace parahoric {

// Assignment of a distribution to every Manin generator, in the order of
// ManinBasis::generators() (the vertical generator first).
template <class S>
struct SymbolT {
    std::vector<Dist<S>> values;
};
using OCSymbol = SymbolT<PadicScalar>;

namespace detail {

template <class F>
void parallel_for(std::size_t n, F&& body) {
    const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        }));
    for (auto& j : jobs) j.get();
}

inline std::int64_t digits_of(std::int64_t n, std::int64_t p) {
    std::int64_t d = 0;
    for (std::int64_t x = 1; x <= n / p; x *= p) ++d;
    return d;
}

} // namespace detail

// Symbols for Gamma0(Np) with values in distributions of a given weight W,
// each value stored with a fixed number of moments.
template <class W>
class SymbolSpace {
public:
    using S = typename W::Scalar;
    using Symbol = SymbolT<S>;

    SymbolSpace(std::shared_ptr<const ManinBasis> manin, W weight, std::size_t moments)
        : manin_(std::move(manin)), weight_(std::move(weight)), len_(moments) {
        if (len_ == 0) throw ArgumentError("need at least one moment");
        if (weight_.prime() != manin_->p()) throw ArgumentError("weight and level use different primes");
        for (const auto& g : manin_->generators()) {
            if (g.kind == GeneratorKind::TwoTorsion && manin_->p() == 2)
                throw UnsupportedError("2-torsion in Gamma0(Np) with p = 2");
            if (g.kind == GeneratorKind::ThreeTorsion && manin_->p() == 3)
                throw UnsupportedError("3-torsion in Gamma0(Np) with p = 3");
        }
    }

    const ManinBasis& manin() const { return *manin_; }
    std::shared_ptr<const ManinBasis> manin_ptr() const { return manin_; }
    const W& weight() const { return weight_; }
    std::size_t moments() const { return len_; }
    std::size_t num_generators() const { return manin_->generators().size(); }
    std::int64_t prime() const { return manin_->p(); }

    Dist<S> zero_dist(std::size_t len) const {
        return Dist<S>{std::vector<S>(len, weight_.zero()), PadicScalar::kExactPrecision};
    }
    Symbol zero() const { return Symbol{std::vector<Dist<S>>(num_generators(), zero_dist(len_))}; }

    Dist<S> act(const Mat2& g, const Dist<S>& mu, std::size_t rows) const {
        return apply_action(*weight_.matrix(g, rows, mu.size()), g.c != 0, mu, weight_.polynomial_rows());
    }

    // Values on the designated edge of every coset.
    std::vector<Dist<S>> coset_values(const Symbol& phi) const { return run_plan(phi.values, len_); }

    // Phi({h inf} - {h 0}) | g from coset values.
    Dist<S> value_on_edge(const std::vector<Dist<S>>& cv, const Mat2& h, const Mat2& g) const {
        const std::size_t y = manin_->p1().coset(h);
        return act(manin_->designated_edge(y) * h.inverse() * g, cv[y], cv[y].size());
    }

    // Phi({r} - {s}) | g from coset values.
    Dist<S> value_on_divisor(const std::vector<Dist<S>>& cv, const Cusp& r, const Cusp& s, const Mat2& g) const {
        Dist<S> out = zero_dist(cv.front().size());
        for (const auto& [sign, h] : unimodular_divisor(r, s)) {
            const Dist<S> v = value_on_edge(cv, h, g);
            out = sign > 0 ? out + v : out - v;
        }
        return out;
    }

    // sum_g Phi|g evaluated on every generator edge.
    Symbol apply_hecke(const Symbol& phi, const std::vector<Mat2>& reps) const {
        const auto cv = coset_values(phi);
        const auto& gens = manin_->generators();
        Symbol out{std::vector<Dist<S>>(gens.size())};
        const Cusp inf = Cusp::make(1, 0), zero = Cusp::make(0, 1);
        detail::parallel_for(gens.size(), [&](std::size_t i) {
            Dist<S> acc = zero_dist(len_);
            for (const auto& g : reps) {
                const Mat2 ge = g * gens[i].edge;
                acc = acc + value_on_divisor(cv, act_cusp(ge, inf), act_cusp(ge, zero), g);
            }
            out.values[i] = std::move(acc);
        });
        return out;
    }

    Symbol up(const Symbol& phi) const {
        std::vector<Mat2> reps;
        for (std::int64_t a = 0; a < prime(); ++a) reps.push_back({1, a, 0, prime()});
        return apply_hecke(phi, reps);
    }

    // True when every two- and three-term relation holds at the stored precision.
    bool satisfies_relations(const Symbol& phi) const {
        const auto cv = coset_values(phi);
        const Mat2 I = Mat2::identity(), S2 = Mat2::S(), T = Mat2::tau();
        for (std::size_t x = 0; x < manin_->num_cosets(); ++x) {
            const Mat2& h = manin_->designated_edge(x);
            const Dist<S> two = value_on_edge(cv, h, I) + value_on_edge(cv, h * S2, I);
            const Dist<S> three = value_on_edge(cv, h, I) + value_on_edge(cv, h * T, I) + value_on_edge(cv, h * T * T, I);
            for (const auto* d : {&two, &three})
                for (const auto& m : d->moments)
                    if (!is_zero(m)) return false;
        }
        return true;
    }

    // Parameters: values at the non-vertical generators.
    std::vector<Dist<S>> parameters(const Symbol& phi) const {
        return std::vector<Dist<S>>(phi.values.begin() + 1, phi.values.end());
    }

    // Torsion generators are replaced by their projections onto the values
    // allowed by their stabilizers.
    std::vector<Dist<S>> project_torsion(std::vector<Dist<S>> params) const {
        const auto& gens = manin_->generators();
        const PadicScalar half = PadicScalar::exact(prime(), Rational(1, 2));
        const PadicScalar third = PadicScalar::exact(prime(), Rational(1, 3));
        for (std::size_t i = 1; i < gens.size(); ++i) {
            auto& u = params[i - 1];
            const Mat2& g = gens[i].gamma;
            if (gens[i].kind == GeneratorKind::TwoTorsion) {
                // u (1 - g) / 2
                u = scale(u - act(g, u, u.size()), half);
            } else if (gens[i].kind == GeneratorKind::ThreeTorsion) {
                // u (2 - g^{-1} - g^{-2}) / 3 with g^{-1} = g^2
                const Mat2 g2 = g * g;
                u = scale(u + u - act(g2, u, u.size()) - act(g, u, u.size()), third);
            }
        }
        return params;
    }

    // Total measure of the right hand side of the difference equation, a
    // linear function of the parameters that must vanish on symbols.
    S total_measure_defect(const std::vector<Dist<S>>& params) const {
        std::vector<Dist<S>> vals;
        vals.push_back(zero_dist(params.front().size()));
        vals.insert(vals.end(), params.begin(), params.end());
        const auto cv = run_plan(vals, params.front().size());
        return cv[manin_->tau_coset()].moments[0];
    }

    // mu - mu|Delta^{-1} = nu, nu given to len + 1 moments with nu_0 = 0.
    // nu_0 is not checked here.
    Dist<S> solve_difference(const Dist<S>& nu) const {
        const std::size_t n = nu.size() - 1;
        std::vector<S> mu;
        mu.reserve(n);
        std::int64_t low = nu.floor;
        for (std::size_t j = 1; j <= n; ++j) {
            S acc = nu.moments[j];
            for (std::size_t i = 0; i + 1 < j; ++i) {
                const Integer c = binomial(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i));
                const Rational coef = ((j - i) % 2 == 0) ? Rational(c) : Rational(-c);
                acc += scaled(mu[i], PadicScalar::exact(prime(), coef));
            }
            mu.push_back(scaled(acc, PadicScalar::exact(prime(), Rational(1) / static_cast<std::int64_t>(j))));
        }
        for (const auto& m : nu.moments) low = std::min(low, valuation_bound(m));
        Dist<S> out{std::move(mu), 0};
        // the solution is a Bernoulli-number transform of nu, so unstored
        // moments lose at most 1 + log_p(index) digits against nu
        out.floor = low >= PadicScalar::kExactPrecision / 2
                        ? PadicScalar::kExactPrecision
                        : low - 1 - detail::digits_of(static_cast<std::int64_t>(n) + 1, prime());
        return out;
    }

    // Symbol with the given non-vertical values (torsion values should be
    // projected already); the vertical value solves the difference equation.
    Symbol from_parameters(const std::vector<Dist<S>>& params) const {
        if (params.size() + 1 != num_generators()) throw DimensionError("wrong number of parameters");
        std::vector<Dist<S>> ext;
        ext.push_back(zero_dist(len_ + 1));
        for (const auto& d : params) {
            if (d.size() != len_) throw DimensionError("parameter has the wrong number of moments");
            ext.push_back(extend(d));
        }
        const auto cv = run_plan(ext, len_ + 1);
        Dist<S> nu = -cv[manin_->tau_coset()];
        Symbol out;
        out.values.push_back(solve_difference(nu));
        out.values.insert(out.values.end(), params.begin(), params.end());
        return out;
    }

    // Keep the first `count` moments of every value.
    Symbol truncate(const Symbol& phi, std::size_t count) const {
        Symbol out = phi;
        for (auto& d : out.values) {
            if (d.size() < count) throw PrecisionError("not enough moments to truncate");
            d.moments.resize(count);
        }
        return out;
    }

private:
    static Cusp act_cusp(const Mat2& g, const Cusp& x) { return ::parahoric::act(g, x); }

    // One more moment, known to be zero for exact tails and bounded by the floor otherwise.
    Dist<S> extend(const Dist<S>& d) const {
        Dist<S> out = d;
        S extra = weight_.zero();
        if (d.floor < PadicScalar::kExactPrecision / 2) extra = capped(extra, d.floor);
        out.moments.push_back(extra);
        return out;
    }

    std::vector<Dist<S>> run_plan(const std::vector<Dist<S>>& gen_values, std::size_t len) const {
        std::vector<Dist<S>> v(manin_->num_cosets());
        for (const auto& st : manin_->plan()) {
            switch (st.op) {
            case PlanStep::Op::Copy: v[st.target] = gen_values.at(st.a); break;
            case PlanStep::Op::NegAct: v[st.target] = -act(st.gamma, v[st.a], len); break;
            case PlanStep::Op::NegSum: v[st.target] = -(v[st.a] + v[st.b]); break;
            case PlanStep::Op::Neg: v[st.target] = -v[st.a]; break;
            }
        }
        return v;
    }

    std::shared_ptr<const ManinBasis> manin_;
    W weight_;
    std::size_t len_;
};

using SingleWeightSpace = SymbolSpace<SingleWeight>;

// Keep moments m_0..m_k of every value.
OCSymbol specialize(const OCSymbol& phi, std::int64_t k);

// Classical eigensymbol at level N made U_p-stable at level Np: the values
// psi(D) - alpha^{-1} psi(pi D)|pi, pi = diag(p, 1), on the generator edges.
OCSymbol p_stabilize(const ClassicalEigensymbol& psi, const ManinBasis& manin, const PadicScalar& alpha);

// Values of a rational classical symbol (any level dividing Np) on the generator edges.
OCSymbol classical_to_generators(const ClassicalSpace& space, const std::vector<Rational>& coords,
                                 const ManinBasis& manin);

// Roots of X^2 - a_p X + p^{k+1}: the one of valuation v(a_p) when
// v(a_p) < (k+1)/2, and the complementary one.
struct HeckeRoots {
    PadicScalar small;
    PadicScalar large;
};
HeckeRoots hecke_polynomial_roots(const Integer& ap, std::int64_t p, std::int64_t k, std::int64_t absprec);

struct LiftResult {
    OCSymbol symbol;
    bool converged = false;
    std::size_t iterations = 0;
    PadicScalar eigenvalue;
    bool specialization_matches = false;
    std::size_t moments = 0;        // M
    std::size_t guard = 0;          // extra stored moments
    // per iteration: smallest margin of absprec over the filtration modulus
    std::vector<std::int64_t> precision_margin;
};

struct LiftOptions {
    std::size_t moments = 10;
    std::uint64_t seed = 1;
    std::size_t guard = 0;  // 0 picks a default
    std::size_t max_iterations = 0;  // 0 means 4M
};

// Iterate Phi -> alpha^{-1} Phi|U_p from a random moment lift of the
// classical eigensymbol psi (values with k+1 moments on the generators).
LiftResult lift_symbol(std::shared_ptr<const ManinBasis> manin, std::int64_t k, const OCSymbol& psi,
                       const PadicScalar& alpha, const LiftOptions& options);

struct CharpolyReport {
    std::size_t moments = 0;
    std::size_t matrix_dim = 0;
    PadicPoly fredholm;             // det(1 - U_p X) truncated in X
    NewtonPolygon polygon;          // Fredholm convention
    std::vector<std::int64_t> coefficient_precision;  // certified digits per coefficient
    std::vector<Rational> certified_slopes;           // with multiplicity
    std::vector<std::string> diagnostics;
};

// Matrix of U_p on the symbols with parameters truncated to M moments.
Matrix<PadicScalar> up_matrix(const ManinBasis& manin, std::int64_t k, std::size_t moments);

// det(1 - U_p X) up to X^xdeg at weight k.  Digits are certified when the
// series computed with M and M - 2 moments agree.
CharpolyReport charpoly_up(const ManinBasis& manin, std::int64_t k, std::size_t moments, std::size_t xdeg);

// Certify a Fredholm series against a coarser computation.
CharpolyReport certify_fredholm(const PadicPoly& fine, const PadicPoly& coarse, std::size_t xdeg);

} // namespace parahoric
