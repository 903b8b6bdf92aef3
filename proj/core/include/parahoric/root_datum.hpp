#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace parahoric {

using IntVec = std::vector<std::int64_t>;

struct Weight {
    IntVec coords;
    bool operator==(const Weight&) const = default;
};

struct Cocharacter {
    IntVec coords;
    bool operator==(const Cocharacter&) const = default;
};

std::int64_t pairing(const IntVec& chi, const IntVec& mu);
std::int64_t pairing(const Weight& lambda, const Cocharacter& mu);

// Split root datum in fixed torus coordinates.  Immutable once built; the
// constructor validates the Cartan data and closes the simple roots under
// the simple reflections.
class RootDatum {
public:
    RootDatum(std::string name, int rank, std::vector<IntVec> simple_roots,
              std::vector<IntVec> coroots);

    static std::shared_ptr<const RootDatum> gl(int n);
    static std::shared_ptr<const RootDatum> gsp4();

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    std::size_t num_simple() const { return simple_.size(); }
    const IntVec& simple_root(std::size_t i) const;
    const IntVec& coroot(std::size_t i) const;
    const std::vector<IntVec>& simple_roots() const { return simple_; }
    const std::vector<IntVec>& coroots() const { return coroots_; }

    // <alpha_i, alpha_j^vee>
    std::int64_t cartan(std::size_t i, std::size_t j) const;

    // Positive roots as character vectors, and the same roots in simple-root
    // coordinates (index-aligned).
    const std::vector<IntVec>& positive_roots() const { return positive_; }
    const std::vector<IntVec>& positive_root_coefficients() const { return positive_coeffs_; }

    // Coroot of an arbitrary positive root, index-aligned with positive_roots().
    const IntVec& positive_coroot(std::size_t r) const { return positive_coroots_[r]; }

    Weight weyl_star(std::size_t i, const Weight& lambda) const;
    bool is_dominant(const Weight& lambda) const;
    bool is_regular(const Weight& lambda) const;

    void check_weight(const Weight& lambda) const;
    void check_cocharacter(const Cocharacter& mu) const;
    void check_index(std::size_t i) const;

    // 2*rho, kept integral.  Used by the oracle below and by dimension formulas.
    const IntVec& two_rho() const { return two_rho_; }

private:
    void close_positive_roots();

    std::string name_;
    int rank_;
    std::vector<IntVec> simple_;
    std::vector<IntVec> coroots_;
    std::vector<IntVec> positive_;
    std::vector<IntVec> positive_coeffs_;
    std::vector<IntVec> positive_coroots_;
    IntVec two_rho_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

// Independent (lambda + rho)^w - rho computation, done with 2*rho so it
// stays integral.  Used to cross-check weyl_star.
Weight weyl_star_via_rho(const RootDatum& datum, std::size_t i, const Weight& lambda);

// Weyl dimension formula for the irreducible of highest weight lambda.
std::int64_t weyl_dimension(const RootDatum& datum, const Weight& lambda);

class ParabolicType {
public:
    ParabolicType(DatumPtr datum, std::vector<std::size_t> subset);
    static ParabolicType borel(DatumPtr datum) { return ParabolicType(std::move(datum), {}); }
    static ParabolicType full(DatumPtr datum);

    const DatumPtr& datum() const { return datum_; }
    const std::vector<std::size_t>& subset() const { return subset_; }
    bool contains(std::size_t i) const;
    std::vector<std::size_t> missing() const;
    bool is_borel() const { return subset_.empty(); }
    bool is_full() const { return subset_.size() == datum_->num_simple(); }
    bool subset_of(const ParabolicType& other) const;

    // Indices into datum()->positive_roots() of the roots of the Levi.
    std::vector<std::size_t> restricted_positive_root_indices() const;
    std::vector<IntVec> restricted_positive_roots() const;

    bool operator==(const ParabolicType& other) const;

private:
    DatumPtr datum_;
    std::vector<std::size_t> subset_;
};

struct ParabolicChain {
    std::vector<ParabolicType> steps;
    std::vector<std::size_t> added_roots;
};

std::vector<ParabolicChain> parabolic_chains(const ParabolicType& q);
ParabolicChain make_chain(const ParabolicType& q, const std::vector<std::size_t>& order);

std::int64_t weight_space_dim(const ParabolicType& q, std::int64_t center_dim);

} // namespace parahoric
