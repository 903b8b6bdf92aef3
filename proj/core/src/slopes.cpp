#include "parahoric/slopes.hpp"
#include "parahoric/error.hpp"

namespace parahoric {

TorusElement::TorusElement(DatumPtr datum, Cocharacter mu, std::int64_t p)
    : datum_(std::move(datum)), mu_(std::move(mu)), p_(p) {
    if (!datum_) throw ArgumentError("torus element without a root datum");
    datum_->check_cocharacter(mu_);
    if (!is_prime(p_)) throw ArgumentError("p = " + std::to_string(p_) + " is not prime");
}

std::int64_t TorusElement::valuation(std::size_t simple_index) const {
    return pairing(datum_->simple_root(simple_index), mu_.coords);
}

std::int64_t TorusElement::valuation(const IntVec& character) const {
    return pairing(character, mu_.coords);
}

TorusElement TorusElement::operator*(const TorusElement& other) const {
    if (datum_ != other.datum_ || p_ != other.p_) {
        throw ArgumentError("product of torus elements over different data");
    }
    IntVec sum(mu_.coords);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.mu_.coords[i];
    return TorusElement(datum_, Cocharacter{sum}, p_);
}

bool in_T_plus(const TorusElement& t) {
    for (std::size_t i = 0; i < t.datum()->num_simple(); ++i) {
        if (t.valuation(i) > 0) return false;
    }
    return true;
}

bool in_T_plusplus(const TorusElement& t, const ParabolicType& q) {
    if (!in_T_plus(t)) throw PreconditionError("torus element is not in T+");
    if (q.datum() != t.datum()) throw ArgumentError("parabolic and torus element use different data");
    for (auto i : q.missing()) {
        if (t.valuation(i) >= 0) return false;
    }
    return true;
}

Rational h_crit(const TorusElement& t, std::size_t alpha, const Weight& lambda) {
    const RootDatum& d = *t.datum();
    d.check_weight(lambda);
    const std::int64_t closed = -(pairing(lambda.coords, d.coroot(alpha)) + 1) * t.valuation(alpha);
    const Weight w = d.weyl_star(alpha, lambda);
    IntVec diff(w.coords);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= lambda.coords[i];
    const std::int64_t via_star = pairing(diff, t.mu().coords);
    if (closed != via_star) {
        throw ConsistencyError("h_crit closed form " + std::to_string(closed) +
                               " disagrees with the *-action value " + std::to_string(via_star));
    }
    return Rational(closed);
}

bool verify_factorization(const ControllingDatum& cd) {
    const auto& chain = cd.chain;
    const std::size_t m = chain.added_roots.size();
    if (cd.elements.size() != m || chain.steps.size() != m + 1) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (!in_T_plus(cd.elements[i])) return false;
        if (cd.elements[i].valuation(chain.added_roots[i]) >= 0) return false;
    }
    // suffix products t_i ... t_m must lie in T_{P_{i-1}}^{++}
    for (std::size_t i = 0; i < m; ++i) {
        TorusElement prod = cd.elements[i];
        for (std::size_t j = i + 1; j < m; ++j) prod = prod * cd.elements[j];
        if (!in_T_plus(prod)) return false;
        if (!in_T_plusplus(prod, chain.steps[i])) return false;
    }
    return true;
}

Cocharacter fundamental_coweight(const RootDatum& d, std::size_t i) {
    d.check_index(i);
    IntVec mu(d.rank(), 0);
    if (d.name() == "GSp(4)") {
        mu = i == 0 ? IntVec{0, 1, 2} : IntVec{0, 0, 1};
    } else if (d.name().rfind("GL(", 0) == 0) {
        for (int k = static_cast<int>(i) + 1; k < d.rank(); ++k) mu[k] = 1;
    } else {
        throw UnsupportedError("no catalog coweights for datum '" + d.name() + "'; supply t_i explicitly");
    }
    // guard against a custom datum that merely reuses a catalog name
    for (std::size_t j = 0; j < d.num_simple(); ++j) {
        if (pairing(d.simple_root(j), mu) != (i == j ? -1 : 0)) {
            throw UnsupportedError("datum '" + d.name() + "' does not match the catalog coordinates");
        }
    }
    return Cocharacter{mu};
}

ControllingDatum greedy_factorization(const ParabolicChain& chain, std::int64_t p) {
    if (chain.steps.empty()) throw ArgumentError("empty parabolic chain");
    const DatumPtr& d = chain.steps.front().datum();
    ControllingDatum cd{chain, {}};
    for (auto a : chain.added_roots) {
        cd.elements.emplace_back(d, fundamental_coweight(*d, a), p);
    }
    return cd;
}

ControllingDatum greedy_factorization(const ParabolicType& q, std::int64_t p) {
    return greedy_factorization(parabolic_chains(q).front(), p);
}

SlopeReport q_noncritical_verdict(const ControllingDatum& cd, const Weight& lambda,
                                  const std::vector<Rational>& eigen_vals) {
    const auto& chain = cd.chain;
    if (chain.steps.empty()) throw ArgumentError("empty parabolic chain");
    const RootDatum& d = *chain.steps.front().datum();
    d.check_weight(lambda);
    if (!d.is_dominant(lambda)) throw ArgumentError("weight is not dominant");
    if (eigen_vals.size() != chain.added_roots.size() || cd.elements.size() != chain.added_roots.size()) {
        throw ArgumentError("expected " + std::to_string(chain.added_roots.size()) +
                            " eigenvalue valuations, got " + std::to_string(eigen_vals.size()));
    }
    SlopeReport report;
    for (std::size_t i = 0; i < chain.added_roots.size(); ++i) {
        SlopeStep step{chain.added_roots[i], cd.elements[i].mu(),
                       h_crit(cd.elements[i], chain.added_roots[i], lambda), eigen_vals[i], false};
        step.pass = step.h < step.h_crit;
        report.verdict = report.verdict && step.pass;
        report.steps.push_back(std::move(step));
    }
    return report;
}

Rational normalize_valuation(const TorusElement& t, const Weight& lambda, const Rational& v) {
    t.datum()->check_weight(lambda);
    return v - Rational(pairing(lambda, t.mu()));
}

} // namespace parahoric
