#pragma once

#include "parahoric/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace parahoric {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial monomial(const Exponents& e, const Rational& c = 1);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var) const;
    bool has_integer_coefficients() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    Polynomial derivative(std::size_t var) const;
    // Simultaneous substitution x_i -> images[i]; all images share one ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    // Same polynomial viewed in a ring with more variables appended.
    Polynomial extended(std::size_t nvars) const;
    // Coefficient of t^1 when variable `t` is treated as the series parameter.
    Polynomial linear_coefficient_in(std::size_t t) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

// Exponent vectors of total degree <= d in n variables, graded then
// lexicographic.
std::vector<Exponents> monomials_up_to(std::size_t n, int d);

} // namespace parahoric
