#pragma once

#include "parahoric/manin.hpp"
#include "parahoric/matrix.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace parahoric {

// Modular symbols for Gamma0(L) with values in the dual of degree <= k
// polynomials (moments m_0..m_k), computed exactly by brute force over all
// cosets.  Coordinates list the value at every coset x on the edge lift(x).
class ClassicalSpace {
public:
    ClassicalSpace(std::int64_t level, std::int64_t k);

    std::int64_t level() const { return p1_.modulus(); }
    std::int64_t weight() const { return k_; }
    const P1List& p1() const { return p1_; }
    std::size_t num_cosets() const { return p1_.size(); }
    std::size_t value_dim() const { return static_cast<std::size_t>(k_ + 1); }
    std::size_t coordinate_dim() const { return num_cosets() * value_dim(); }
    std::size_t dim() const { return basis_.cols(); }
    // Columns span the symbols inside coordinate space.
    const RationalMatrix& basis() const { return basis_; }
    const Mat2& edge(std::size_t x) const { return edges_[x]; }

    // Phi({h inf} - {h 0}) and Phi({r} - {s}) for coordinates `v`.
    std::vector<Rational> evaluate(const std::vector<Rational>& v, const Mat2& h) const;
    std::vector<Rational> evaluate(const std::vector<Rational>& v, const Cusp& r, const Cusp& s) const;

    // The map Phi -> sum_g Phi(g D)|g on coordinates.
    RationalMatrix coset_operator(const std::vector<Mat2>& reps) const;
    // An operator on coordinates that preserves symbols, written in the basis.
    RationalMatrix restrict_to_symbols(const RationalMatrix& op) const;
    // T_q for q prime to the level, U_q otherwise; in the basis.
    RationalMatrix hecke(std::int64_t q) const;
    // Action of [[-1,0],[0,1]] in the basis.
    RationalMatrix star() const;

    bool satisfies_relations(const std::vector<Rational>& v) const;
    std::vector<Rational> from_basis(const std::vector<Rational>& c) const { return basis_.apply(c); }

private:
    RationalMatrix relation_matrix() const;

    std::int64_t k_;
    P1List p1_;
    std::vector<Mat2> edges_;
    RationalMatrix basis_;
    RationalMatrix basis_left_inverse_;
};

// Right coset representatives of the Hecke double coset at q.
std::vector<Mat2> hecke_representatives(std::int64_t q, std::int64_t level);

struct ClassicalEigensymbol {
    std::shared_ptr<const ClassicalSpace> space;
    std::vector<Rational> coords;  // coset coordinates
    std::int64_t q = 0;            // Hecke prime used to cut it out
    Integer eigenvalue_q;
};

// A rational cuspidal eigensymbol in the +1 part for [[-1,0],[0,1]]: the
// first integer T_q-eigenvalue (q the smallest prime not dividing N*avoid)
// below the Ramanujan bound whose eigenspace is one-dimensional.
ClassicalEigensymbol newform_symbol(std::int64_t N, std::int64_t k, std::int64_t avoid);

// Eigenvalue of T_q (or U_q) on an eigensymbol; ConsistencyError if not an eigenvector.
Rational hecke_eigenvalue(const ClassicalEigensymbol& psi, std::int64_t q);

} // namespace parahoric
