#include "parahoric/classical.hpp"
#include "parahoric/distribution.hpp"
#include "parahoric/error.hpp"
#include "parahoric/rational.hpp"

#include <cmath>

namespace parahoric {

namespace {

void add_block(RationalMatrix& m, std::size_t row0, std::size_t col0, const RationalMatrix& a, int sign) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) m(row0 + i, col0 + j) += sign > 0 ? a(i, j) : Rational(-a(i, j));
}

} // namespace

ClassicalSpace::ClassicalSpace(std::int64_t level, std::int64_t k) : k_(k), p1_(level) {
    if (k < 0) throw ArgumentError("weight must be nonnegative");
    if (k % 2 != 0) throw UnsupportedError("odd weight: -I acts by -1 and there are no nonzero symbols");
    if (level < 1) throw ArgumentError("level must be positive");
    for (std::size_t x = 0; x < p1_.size(); ++x) edges_.push_back(p1_.lift(x));
    basis_ = nullspace(relation_matrix());
    if (basis_.cols() > 0) basis_left_inverse_ = left_inverse(basis_);
}

RationalMatrix ClassicalSpace::relation_matrix() const {
    const std::size_t n = num_cosets(), d = value_dim();
    RationalMatrix rel(2 * n * d, n * d, Rational(0));
    const Mat2 S = Mat2::S(), T = Mat2::tau();
    // Phi(D_{h S}) = v_y | (h_y (h S)^{-1}) with y the coset of h S
    auto term = [&](std::size_t row0, const Mat2& h) {
        const std::size_t y = p1_.coset(h);
        const Mat2 delta = edges_[y] * h.inverse();
        add_block(rel, row0, y * d, moment_action_matrix(delta, k_, d, d), 1);
    };
    for (std::size_t x = 0; x < n; ++x) {
        const Mat2& h = edges_[x];
        term(x * d, h);
        term(x * d, h * S);
        term((n + x) * d, h);
        term((n + x) * d, h * T);
        term((n + x) * d, h * T * T);
    }
    return rel;
}

std::vector<Rational> ClassicalSpace::evaluate(const std::vector<Rational>& v, const Mat2& h) const {
    if (v.size() != coordinate_dim()) throw DimensionError("coordinate vector has the wrong length");
    const std::size_t x = p1_.coset(h), d = value_dim();
    const RationalMatrix a = moment_action_matrix(edges_[x] * h.inverse(), k_, d, d);
    std::vector<Rational> vx(v.begin() + x * d, v.begin() + (x + 1) * d);
    return a.apply(vx);
}

std::vector<Rational> ClassicalSpace::evaluate(const std::vector<Rational>& v, const Cusp& r, const Cusp& s) const {
    std::vector<Rational> out(value_dim(), Rational(0));
    for (const auto& [sign, h] : unimodular_divisor(r, s)) {
        const auto w = evaluate(v, h);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += sign > 0 ? w[j] : Rational(-w[j]);
    }
    return out;
}

RationalMatrix ClassicalSpace::coset_operator(const std::vector<Mat2>& reps) const {
    const std::size_t n = num_cosets(), d = value_dim();
    RationalMatrix op(n * d, n * d, Rational(0));
    const Cusp inf = Cusp::make(1, 0), zero = Cusp::make(0, 1);
    for (std::size_t x = 0; x < n; ++x) {
        for (const auto& g : reps) {
            const Mat2 gh = g * edges_[x];
            for (const auto& [sign, h] : unimodular_divisor(act(gh, inf), act(gh, zero))) {
                const std::size_t y = p1_.coset(h);
                const Mat2 delta = edges_[y] * h.inverse() * g;
                add_block(op, x * d, y * d, moment_action_matrix(delta, k_, d, d), sign);
            }
        }
    }
    return op;
}

RationalMatrix ClassicalSpace::restrict_to_symbols(const RationalMatrix& op) const {
    if (dim() == 0) return RationalMatrix(0, 0);
    const RationalMatrix image = op * basis_;
    const RationalMatrix out = basis_left_inverse_ * image;
    // the operator must map symbols to symbols
    const RationalMatrix back = basis_ * out;
    for (std::size_t i = 0; i < back.rows(); ++i)
        for (std::size_t j = 0; j < back.cols(); ++j)
            if (back(i, j) != image(i, j)) throw ConsistencyError("operator does not preserve modular symbols");
    return out;
}

std::vector<Mat2> hecke_representatives(std::int64_t q, std::int64_t level) {
    if (!is_prime(q)) throw ArgumentError("Hecke operators are implemented at primes");
    std::vector<Mat2> reps;
    for (std::int64_t a = 0; a < q; ++a) reps.push_back({1, a, 0, q});
    if (level % q != 0) reps.push_back({q, 0, 0, 1});
    return reps;
}

RationalMatrix ClassicalSpace::hecke(std::int64_t q) const {
    return restrict_to_symbols(coset_operator(hecke_representatives(q, level())));
}

RationalMatrix ClassicalSpace::star() const { return restrict_to_symbols(coset_operator({{-1, 0, 0, 1}})); }

bool ClassicalSpace::satisfies_relations(const std::vector<Rational>& v) const {
    for (const auto& x : relation_matrix().apply(v))
        if (x != 0) return false;
    return true;
}

ClassicalEigensymbol newform_symbol(std::int64_t N, std::int64_t k, std::int64_t avoid) {
    auto space = std::make_shared<ClassicalSpace>(N, k);
    if (space->dim() == 0) throw PreconditionError("no modular symbols at this level and weight");
    std::int64_t q = 2;
    while (N % q == 0 || (avoid > 0 && avoid % q == 0)) {
        ++q;
        while (!is_prime(q)) ++q;
    }
    const std::size_t dim = space->dim();
    RationalMatrix star = space->star();
    for (std::size_t i = 0; i < dim; ++i) star(i, i) -= 1;
    const RationalMatrix plus = nullspace(star);
    if (plus.cols() == 0) throw PreconditionError("empty plus part");
    const RationalMatrix tq = left_inverse(plus) * space->hecke(q) * plus;
    const Integer eisenstein = 1 + ipow(Integer(q), k + 1);
    const auto bound = static_cast<std::int64_t>(std::floor(2.0 * std::pow(static_cast<double>(q), (k + 1) / 2.0)));
    for (std::int64_t lambda = -bound; lambda <= bound; ++lambda) {
        if (Integer(lambda) == eisenstein) continue;
        RationalMatrix shifted = tq;
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
        const RationalMatrix ker = nullspace(shifted);
        if (ker.cols() != 1) continue;
        ClassicalEigensymbol out;
        out.space = space;
        // clear denominators and content
        std::vector<Rational> c = space->from_basis(plus.apply(ker.column(0)));
        Integer l = 1, g = 0;
        for (const auto& x : c) l = lcm(l, Integer(x.get_den()));
        for (auto& x : c) {
            x *= l;
            g = gcd(g, Integer(x.get_num()));
        }
        for (auto& x : c) x /= g;
        out.coords = std::move(c);
        out.q = q;
        out.eigenvalue_q = lambda;
        return out;
    }
    throw PreconditionError("no rational cuspidal eigensymbol with a one-dimensional eigenspace");
}

Rational hecke_eigenvalue(const ClassicalEigensymbol& psi, std::int64_t q) {
    const auto image =
        psi.space->coset_operator(hecke_representatives(q, psi.space->level())).apply(psi.coords);
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (psi.coords[i] == 0) {
            if (image[i] != 0) throw ConsistencyError("not a Hecke eigensymbol");
            continue;
        }
        const Rational r = image[i] / psi.coords[i];
        if (lambda && *lambda != r) throw ConsistencyError("not a Hecke eigensymbol");
        lambda = r;
    }
    if (!lambda) throw PreconditionError("zero symbol has no eigenvalue");
    return *lambda;
}

} // namespace parahoric
