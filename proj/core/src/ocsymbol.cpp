#include "parahoric/ocsymbol.hpp"
#include "parahoric/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace parahoric {

namespace {

std::vector<PadicScalar> to_padic(const std::vector<Rational>& v, std::int64_t p) {
    std::vector<PadicScalar> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(PadicScalar::exact(p, x));
    return out;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

} // namespace

OCSymbol specialize(const OCSymbol& phi, std::int64_t k) {
    OCSymbol out = phi;
    for (auto& d : out.values) {
        if (static_cast<std::int64_t>(d.size()) <= k) throw PrecisionError("fewer than k + 1 moments");
        d.moments.resize(static_cast<std::size_t>(k + 1));
        d.floor = PadicScalar::kExactPrecision;
    }
    return out;
}

OCSymbol classical_to_generators(const ClassicalSpace& space, const std::vector<Rational>& coords,
                                 const ManinBasis& manin) {
    if (manin.level() % space.level() != 0) throw ArgumentError("classical level does not divide Np");
    OCSymbol out;
    for (const auto& g : manin.generators())
        out.values.push_back({to_padic(space.evaluate(coords, g.edge), manin.p()), PadicScalar::kExactPrecision});
    return out;
}

OCSymbol p_stabilize(const ClassicalEigensymbol& psi, const ManinBasis& manin, const PadicScalar& alpha) {
    const ClassicalSpace& space = *psi.space;
    if (space.level() != manin.N()) throw ArgumentError("eigensymbol level must be N");
    const std::int64_t p = manin.p(), k = space.weight();
    if (alpha.prime() != p) throw ArgumentError("eigenvalue over the wrong prime");
    const PadicScalar inv = PadicScalar::one(p, alpha.absprec()) / alpha;
    const Mat2 pi{p, 0, 0, 1};
    const Cusp inf = Cusp::make(1, 0), zero = Cusp::make(0, 1);
    OCSymbol out;
    for (const auto& g : manin.generators()) {
        const auto direct = to_padic(space.evaluate(psi.coords, g.edge), p);
        const Mat2 pe = pi * g.edge;
        // psi(pi D) | pi scales m_j by p^{k-j}
        const auto moved = space.evaluate(psi.coords, act(pe, inf), act(pe, zero));
        Dist<PadicScalar> d{{}, PadicScalar::kExactPrecision};
        for (std::int64_t j = 0; j <= k; ++j) {
            const PadicScalar t = PadicScalar::exact(p, moved[j] * Rational(ipow(Integer(p), k - j)));
            d.moments.push_back(direct[j] - inv * t);
        }
        out.values.push_back(std::move(d));
    }
    return out;
}

HeckeRoots hecke_polynomial_roots(const Integer& ap, std::int64_t p, std::int64_t k, std::int64_t absprec) {
    if (ap == 0) throw UnsupportedError("a_p = 0: both roots have valuation (k+1)/2");
    const std::int64_t s = valuation(ap, p);
    if (2 * s >= k + 1) throw UnsupportedError("roots of the Hecke polynomial are not separated by valuation");
    const std::int64_t work = absprec + k + 1;
    const PadicScalar a = PadicScalar::from_integer(p, ap, work + s);
    const PadicScalar c = PadicScalar::from_integer(p, ipow(Integer(p), k + 1), work + k + 1);
    // alpha = a_p - p^{k+1} / alpha contracts by k + 1 - 2s digits per step
    PadicScalar alpha = a;
    for (std::int64_t it = 0; it <= work; ++it) {
        const PadicScalar next = a - c / alpha;
        if ((next - alpha).is_zero() && next.absprec() >= absprec) {
            alpha = next;
            break;
        }
        alpha = next;
    }
    HeckeRoots r;
    r.small = alpha.capped(absprec);
    r.large = (c / alpha).capped(absprec + k + 1 - 2 * s);
    const PadicScalar check = r.small * r.small - a * r.small + c;
    if (!check.capped(absprec).is_zero()) throw ConsistencyError("Hecke polynomial root did not converge");
    return r;
}

LiftResult lift_symbol(std::shared_ptr<const ManinBasis> manin, std::int64_t k, const OCSymbol& psi,
                       const PadicScalar& alpha, const LiftOptions& options) {
    const std::int64_t p = manin->p();
    const std::size_t M = options.moments;
    if (static_cast<std::int64_t>(M) <= k) throw PrecisionError("need more than k moments");
    if (psi.values.size() != manin->generators().size()) throw DimensionError("classical symbol has the wrong shape");
    if (alpha.is_zero()) throw PreconditionError("eigenvalue is zero to the known precision");
    const std::int64_t slope = *alpha.valuation();
    if (slope >= k + 1) throw PreconditionError("slope v_p(alpha) must be < k + 1 for the eigenlift to exist");
    for (const auto& d : psi.values)
        if (static_cast<std::int64_t>(d.size()) != k + 1) throw DimensionError("classical values need k + 1 moments");

    LiftResult result;
    result.moments = M;
    const std::size_t max_iter = options.max_iterations ? options.max_iterations : 4 * M;
    const std::int64_t gain = k + 1 - slope;
    const std::size_t guard = options.guard ? options.guard
                                            : static_cast<std::size_t>(2 + detail::digits_of(M, p) +
                                                                       slope * ceil_div(M + 2, gain));
    result.guard = guard;
    const std::size_t L = M + guard;

    bool all_zero = true;
    for (const auto& d : psi.values)
        for (const auto& m : d.moments)
            if (!m.is_zero()) all_zero = false;
    SymbolSpace<SingleWeight> space(manin, SingleWeight(p, k), L);
    if (all_zero) {
        result.symbol = space.truncate(space.zero(), M);
        result.converged = true;
        result.eigenvalue = alpha;
        result.specialization_matches = true;
        return result;
    }

    const auto& gens = manin->generators();
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::int64_t> digit(0, p * p * p - 1);
    std::vector<Dist<PadicScalar>> params;
    for (std::size_t i = 1; i < gens.size(); ++i) {
        Dist<PadicScalar> d{psi.values[i].moments, 0};
        while (d.size() < L) d.moments.push_back(PadicScalar::exact(p, digit(rng)));
        params.push_back(std::move(d));
    }
    params = space.project_torsion(params);
    OCSymbol phi = space.from_parameters(params);

    // The solved vertical value agrees with psi below m_k automatically; fix m_k
    // by moving one higher moment of a free generator.
    const auto& target = psi.values[0].moments;
    for (std::int64_t j = 0; j < k; ++j)
        if (!(phi.values[0].moments[j] - target[j]).is_zero())
            throw ConsistencyError("classical symbol violates the difference equation");
    const PadicScalar defect = target[k] - phi.values[0].moments[k];
    if (!defect.is_zero()) {
        std::optional<std::size_t> best;
        PadicScalar best_resp;
        for (std::size_t i = 1; i < gens.size(); ++i) {
            if (gens[i].kind != GeneratorKind::Free) continue;
            std::vector<Dist<PadicScalar>> unit(params.size(), space.zero_dist(L));
            unit[i - 1].moments[k + 1] = PadicScalar::exact(p, 1);
            const PadicScalar resp = space.from_parameters(unit).values[0].moments[k];
            if (resp.is_zero()) continue;
            if (!best || resp.valuation_bound() < best_resp.valuation_bound()) {
                best = i;
                best_resp = resp;
            }
        }
        if (!best) throw ConsistencyError("no free moment moves the vertical value");
        params[*best - 1].moments[k + 1] += defect / best_resp;
        phi = space.from_parameters(params);
    }

    const PadicScalar inv = PadicScalar::one(p, alpha.absprec()) / alpha;
    auto margin_of = [&](const OCSymbol& x) {
        std::int64_t m = PadicScalar::kExactPrecision;
        for (const auto& d : x.values)
            for (std::size_t j = 0; j < M; ++j)
                m = std::min(m, d.moments[j].absprec() - static_cast<std::int64_t>(M - j));
        return m;
    };
    OCSymbol up_phi;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        up_phi = space.up(phi);
        OCSymbol next = up_phi;
        for (auto& d : next.values) d = scale(d, inv);
        const std::int64_t margin = margin_of(next);
        result.precision_margin.push_back(margin);
        if (margin < 0) throw PrecisionError("lifting ran out of precision; raise the guard moments");
        bool same = true;
        for (std::size_t g = 0; g < next.values.size() && same; ++g)
            for (std::size_t j = 0; j < M; ++j)
                if (!(next.values[g].moments[j] - phi.values[g].moments[j]).capped(M - j).is_zero()) {
                    same = false;
                    break;
                }
        if (same) {
            result.converged = true;
            result.iterations = it;
            // eigenvalue from the best known coordinate of phi
            std::size_t bg = 0, bj = 0;
            std::int64_t best_rel = -1;
            for (std::size_t g = 0; g < phi.values.size(); ++g)
                for (std::size_t j = 0; j < M; ++j) {
                    const auto& m = phi.values[g].moments[j];
                    if (!m.is_zero() && m.relprec() > best_rel) {
                        best_rel = m.relprec();
                        bg = g;
                        bj = j;
                    }
                }
            result.eigenvalue = up_phi.values[bg].moments[bj] / phi.values[bg].moments[bj];
            phi = next;
            break;
        }
        phi = std::move(next);
    }
    if (!result.converged)
        throw DivergenceError("no convergence within " + std::to_string(max_iter) + " iterations");

    OCSymbol out = space.truncate(phi, M);
    for (auto& d : out.values)
        for (std::size_t j = 0; j < M; ++j) d.moments[j] = d.moments[j].capped(M - j);
    for (auto& d : out.values) d.floor = 0;
    result.symbol = out;
    bool match = true;
    for (std::size_t g = 0; g < out.values.size(); ++g)
        for (std::int64_t j = 0; j <= k; ++j)
            if (!(out.values[g].moments[j] - psi.values[g].moments[j]).capped(M - j).is_zero()) match = false;
    result.specialization_matches = match;
    return result;
}

namespace {

// Parameter vectors with torsion projected and, for k > 0, the total measure
// of the difference equation killed along one pivot coordinate.  The dropped
// directions contribute eigenvalue 0 and leave det(1 - U X) unchanged.
class Parametrization {
public:
    Parametrization(const SymbolSpace<SingleWeight>& space, std::size_t M) : space_(space), M_(M) {
        const std::size_t G = space.num_generators() - 1;
        const std::int64_t p = space.prime();
        std::optional<std::size_t> pivot;
        for (std::size_t c = 0; c < G * M; ++c) {
            const auto t = space_.project_torsion(unit(c));
            const PadicScalar l = space_.total_measure_defect(t);
            if (l.is_zero()) continue;
            if (!pivot || l.valuation_bound() < pivot_value_.valuation_bound()) {
                pivot = c;
                pivot_value_ = l;
            }
        }
        if (pivot) {
            pivot_ = space_.project_torsion(unit(*pivot));
            has_pivot_ = true;
        }
        (void)p;
    }

    std::vector<Dist<PadicScalar>> unit(std::size_t c) const {
        const std::size_t L = space_.moments();
        std::vector<Dist<PadicScalar>> params(space_.num_generators() - 1, space_.zero_dist(L));
        params[c / M_].moments[c % M_] = PadicScalar::exact(space_.prime(), 1);
        return params;
    }

    std::vector<Dist<PadicScalar>> project(std::vector<Dist<PadicScalar>> x) const {
        x = space_.project_torsion(std::move(x));
        if (!has_pivot_) return x;
        const PadicScalar l = space_.total_measure_defect(x);
        if (l.is_zero()) return x;
        const PadicScalar f = l / pivot_value_;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] - scale(pivot_[i], f);
        return x;
    }

private:
    const SymbolSpace<SingleWeight>& space_;
    std::size_t M_;
    bool has_pivot_ = false;
    PadicScalar pivot_value_;
    std::vector<Dist<PadicScalar>> pivot_;
};

} // namespace

Matrix<PadicScalar> up_matrix(const ManinBasis& manin, std::int64_t k, std::size_t moments) {
    const std::int64_t p = manin.p();
    const std::size_t M = moments;
    const std::size_t L = 2 * M + 2 + static_cast<std::size_t>(detail::digits_of(M, p));
    auto mb = std::make_shared<const ManinBasis>(manin);
    SymbolSpace<SingleWeight> space(mb, SingleWeight(p, k), L);
    const std::size_t G = space.num_generators() - 1;
    const std::size_t n = G * M;
    Parametrization param(space, M);
    Matrix<PadicScalar> U(n, n, PadicScalar::zero(p, PadicScalar::kExactPrecision));
    for (std::size_t c = 0; c < n; ++c) {
        const auto x = param.project(param.unit(c));
        const OCSymbol image = space.up(space.from_parameters(x));
        for (std::size_t g = 0; g < G; ++g)
            for (std::size_t j = 0; j < M; ++j) U(g * M + j, c) = image.values[g + 1].moments[j];
    }
    return U;
}

CharpolyReport certify_fredholm(const PadicPoly& fine, const PadicPoly& coarse, std::size_t xdeg) {
    CharpolyReport r;
    const std::size_t n = std::min({xdeg + 1, fine.size(), coarse.size()});
    r.fredholm.truncated = n < fine.size() || fine.truncated;
    for (std::size_t i = 0; i < n; ++i) {
        const PadicScalar d = fine.coeffs[i] - coarse.coeffs[i];
        std::int64_t digits = d.is_zero() ? d.absprec() : *d.valuation();
        digits = std::min(digits, fine.coeffs[i].absprec());
        r.coefficient_precision.push_back(digits);
        r.fredholm.coeffs.push_back(fine.coeffs[i].capped(digits));
    }
    r.polygon = newton_polygon(r.fredholm, SlopeConvention::Fredholm);
    r.certified_slopes = root_slopes(r.polygon);
    return r;
}

CharpolyReport charpoly_up(const ManinBasis& manin, std::int64_t k, std::size_t moments, std::size_t xdeg) {
    if (moments < 3) throw ArgumentError("need at least 3 moments");
    const auto fine = fredholm_division_free(up_matrix(manin, k, moments));
    const auto coarse = fredholm_division_free(up_matrix(manin, k, moments - 2));
    CharpolyReport r = certify_fredholm(fine, coarse, xdeg);
    r.moments = moments;
    r.matrix_dim = (manin.generators().size() - 1) * moments;
    for (const auto& d : r.polygon.diagnostics) r.diagnostics.push_back(d);
    return r;
}

} // namespace parahoric
