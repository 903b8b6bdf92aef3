#pragma once

#include "parahoric/sl2.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace parahoric {

// P^1(Z/M) with canonical representatives.
class P1List {
public:
    explicit P1List(std::int64_t modulus);

    std::int64_t modulus() const { return m_; }
    std::size_t size() const { return points_.size(); }
    const std::pair<std::int64_t, std::int64_t>& point(std::size_t i) const { return points_[i]; }
    // Index of (c : d); throws if gcd(c, d, M) != 1.
    std::size_t index(std::int64_t c, std::int64_t d) const;
    // Coset of Gamma0(M) h, i.e. the class of the bottom row.
    std::size_t coset(const Mat2& h) const { return index(h.c, h.d); }
    // An SL2(Z) matrix with the given bottom row class.
    Mat2 lift(std::size_t i) const;

private:
    std::int64_t m_;
    std::vector<std::pair<std::int64_t, std::int64_t>> points_;
    std::vector<std::int64_t> table_;  // (c mod M) * M + (d mod M) -> index or -1
};

std::int64_t gamma0_index(std::int64_t m);

enum class GeneratorKind { Vertical, Free, TwoTorsion, ThreeTorsion };

struct ManinGenerator {
    GeneratorKind kind;
    Mat2 edge;          // the designated unimodular edge carrying the value
    std::size_t coset;
    Mat2 gamma;         // pairing or stabilizer element of Gamma0(M); identity for the vertical generator
};

// How the value at each coset is recovered from generator values.
struct PlanStep {
    enum class Op {
        Copy,     // v[target] = g[a]
        NegAct,   // v[target] = -(v[a] | gamma)
        NegSum,   // v[target] = -(v[a] + v[b])
        Neg,      // v[target] = -v[a]
    };
    Op op;
    std::size_t target;
    std::size_t a;
    std::size_t b;
    Mat2 gamma;
};

// Manin symbols for Gamma0(N p) in a solved form. Each coset x of Gamma0(M) in
// SL2(Z) owns a designated edge h_x; a symbol is determined by its values
// Phi({h_x inf} - {h_x 0}). Generators come from a spanning tree of the
// triangulation of the upper half plane modulo Gamma0(M); the vertical
// generator D_I is tied to the rest by the difference equation
// Phi(D_I) - Phi(D_I)|Delta^{-1} = -Phi(D_tau), Delta = [[1,1],[0,1]].
class ManinBasis {
public:
    ManinBasis(std::int64_t N, std::int64_t p);

    std::int64_t N() const { return n_; }
    std::int64_t p() const { return p_; }
    std::int64_t level() const { return p1_.modulus(); }
    const P1List& p1() const { return p1_; }

    std::size_t num_cosets() const { return p1_.size(); }
    // Coset after right multiplication by S and tau.
    std::size_t s_image(std::size_t x) const { return s_map_[x]; }
    std::size_t tau_image(std::size_t x) const { return tau_map_[x]; }
    // Two-term relations {x, xS} with x < xS, fixed points listed as {x, x}.
    const std::vector<std::pair<std::size_t, std::size_t>>& two_term_relations() const { return rel2_; }
    // Three-term relations {x, x tau, x tau^2}.
    const std::vector<std::array<std::size_t, 3>>& three_term_relations() const { return rel3_; }

    const std::vector<ManinGenerator>& generators() const { return gens_; }
    std::size_t num_free() const;
    std::size_t num_two_torsion() const;
    std::size_t num_three_torsion() const;
    const std::vector<PlanStep>& plan() const { return plan_; }
    const Mat2& designated_edge(std::size_t x) const { return edges_[x]; }
    std::size_t vertical_coset() const { return gens_[0].coset; }
    std::size_t tau_coset() const { return tau_coset_; }
    std::size_t tau2_coset() const { return tau2_coset_; }

    // Rank of the relation system on scalar-valued symbols (exact rational),
    // as a consistency diagnostic: num_cosets - rank is 2g + c - 1.
    std::size_t scalar_relation_rank() const;

private:
    void build_tree();

    std::int64_t n_, p_;
    P1List p1_;
    std::vector<std::size_t> s_map_, tau_map_;
    std::vector<std::pair<std::size_t, std::size_t>> rel2_;
    std::vector<std::array<std::size_t, 3>> rel3_;
    std::vector<ManinGenerator> gens_;
    std::vector<PlanStep> plan_;
    std::vector<Mat2> edges_;
    std::size_t tau_coset_ = 0, tau2_coset_ = 0;
};

ManinBasis build_manin(std::int64_t N, std::int64_t p);

} // namespace parahoric
