#pragma once

#include "parahoric/rational.hpp"
#include "parahoric/root_datum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace parahoric {

// t = mu(p).  Every valuation v_p(chi(t)) is the exact integer <chi, mu>.
class TorusElement {
public:
    TorusElement(DatumPtr datum, Cocharacter mu, std::int64_t p);

    const DatumPtr& datum() const { return datum_; }
    const Cocharacter& mu() const { return mu_; }
    std::int64_t prime() const { return p_; }

    // v_p(alpha_i(t))
    std::int64_t valuation(std::size_t simple_index) const;
    std::int64_t valuation(const IntVec& character) const;

    TorusElement operator*(const TorusElement& other) const;

private:
    DatumPtr datum_;
    Cocharacter mu_;
    std::int64_t p_;
};

bool in_T_plus(const TorusElement& t);
// Throws PreconditionError unless in_T_plus(t).
bool in_T_plusplus(const TorusElement& t, const ParabolicType& q);

// -(<lambda, alpha^vee> + 1) <alpha, mu>, cross-checked against
// <w_alpha * lambda - lambda, mu>.
Rational h_crit(const TorusElement& t, std::size_t alpha, const Weight& lambda);

struct ControllingDatum {
    ParabolicChain chain;
    std::vector<TorusElement> elements;
};

bool verify_factorization(const ControllingDatum& cd);
ControllingDatum greedy_factorization(const ParabolicType& q, std::int64_t p = 2);
ControllingDatum greedy_factorization(const ParabolicChain& chain, std::int64_t p = 2);

// Catalog coweight used by greedy_factorization: <alpha_j, mu> = -delta_ij.
Cocharacter fundamental_coweight(const RootDatum& datum, std::size_t i);

struct SlopeStep {
    std::size_t alpha;
    Cocharacter mu;
    Rational h_crit;
    Rational h;
    bool pass;
};

struct SlopeReport {
    std::vector<SlopeStep> steps;
    bool verdict = true;
};

SlopeReport q_noncritical_verdict(const ControllingDatum& cd, const Weight& lambda,
                                  const std::vector<Rational>& eigen_vals);

Rational normalize_valuation(const TorusElement& t, const Weight& lambda, const Rational& v);

} // namespace parahoric
