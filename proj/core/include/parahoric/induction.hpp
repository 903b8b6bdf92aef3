#pragma once

#include "parahoric/matrix.hpp"
#include "parahoric/polynomial.hpp"
#include "parahoric/root_datum.hpp"
#include "parahoric/slopes.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parahoric {

// Coordinates z_ij (i < j) on the upper unitriangular group of GL(n), one
// per positive root e_i - e_j.
class NCoordinates {
public:
    explicit NCoordinates(int n);
    int n() const { return n_; }
    std::size_t size() const { return positions_.size(); }
    std::size_t index(int i, int j) const;
    std::pair<int, int> position(std::size_t v) const { return positions_.at(v); }
    // Position of each positive root of the GL(n) datum, index-aligned.
    std::size_t variable_of_root(std::size_t root) const { return root_to_var_.at(root); }
    std::vector<std::string> names(const std::string& prefix = "z") const;

private:
    int n_;
    std::vector<std::pair<int, int>> positions_;
    std::vector<std::size_t> root_to_var_;
};

// Vector field sum_beta c_beta(z) d/dz_beta.
struct Derivation {
    std::vector<Polynomial> coeffs;
    Polynomial apply(const Polynomial& f) const;
    int max_coefficient_degree() const;
};

struct BggReport {
    std::int64_t threshold = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_RQ = 0;
    bool above_threshold = false;
    bool pass = false;
};

struct IntertwiningResult {
    bool pass = true;
    std::optional<Exponents> first_difference;
};

// Polynomial truncations of the induction modules of GL(n) on the
// unipotent coordinates, with theta operators and the restriction
// criterion for parahoric submodules.
class GLInduction {
public:
    explicit GLInduction(int n);

    const DatumPtr& datum() const { return datum_; }
    const NCoordinates& coords() const { return coords_; }
    std::size_t nvars() const { return coords_.size(); }

    Derivation left_translation_field(std::size_t alpha) const;
    Polynomial theta(const Weight& lambda, std::size_t alpha, const Polynomial& f) const;

    std::vector<Exponents> basis(int d) const { return monomials_up_to(nvars(), d); }
    Polynomial from_vector(const std::vector<Exponents>& basis, const std::vector<Rational>& v) const;
    std::vector<Rational> to_vector(const std::vector<Exponents>& basis, const Polynomial& f) const;

    // Matrix of Theta on the degree <= d space, columns indexed by basis(d).
    RationalMatrix theta_operator(const Weight& lambda, std::size_t alpha, int d) const;

    // f(l n) as a polynomial in a ring of 2*nvars variables: the first block
    // holds the Levi coordinates, the second the generic N_Q coordinates.
    std::vector<Polynomial> generic_n_point(const ParabolicType& q) const;
    Polynomial restrict_R_n(const Polynomial& f, const ParabolicType& q,
                            const std::vector<Polynomial>& n_point) const;
    bool in_parahoric(const Polynomial& f, const ParabolicType& q, const Weight& lambda) const;
    // Columns span the degree <= d part of A^Q_lambda.
    RationalMatrix parahoric_basis(const ParabolicType& q, const Weight& lambda, int d) const;

    std::int64_t bgg_threshold(const ParabolicType& p, const ParabolicType& q, const Weight& lambda) const;
    BggReport bgg_check(const ParabolicType& p, const ParabolicType& q, const Weight& lambda, int d) const;
    RationalMatrix bgg_kernel(const ParabolicType& p, const ParabolicType& q, const Weight& lambda, int d) const;

    Polynomial star_action_torus(const TorusElement& t, const Polynomial& f) const;
    IntertwiningResult intertwining_check(const TorusElement& t, std::size_t alpha, const Weight& lambda,
                                          const Polynomial& f) const;
    bool theta_preserves_parahoric(const ParabolicType& q, std::size_t alpha, const Weight& lambda, int d) const;

private:
    void check_parabolic(const ParabolicType& q) const;
    std::size_t added_root(const ParabolicType& p, const ParabolicType& q) const;

    DatumPtr datum_;
    NCoordinates coords_;
    std::vector<Derivation> fields_;
};

} // namespace parahoric
