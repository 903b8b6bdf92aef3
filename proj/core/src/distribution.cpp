#include "parahoric/distribution.hpp"
#include "parahoric/error.hpp"

#include <numeric>

namespace parahoric {

namespace {

// Coefficients of (a + c z)^e up to z^{n-1}; e < 0 needs a != 0.
std::vector<Rational> binomial_series(std::int64_t a, std::int64_t c, std::int64_t e, std::size_t n) {
    std::vector<Rational> out(n, Rational(0));
    if (e >= 0) {
        for (std::int64_t i = 0; i <= e && static_cast<std::size_t>(i) < n; ++i)
            out[i] = Rational(binomial(e, i) * ipow(Integer(a), e - i) * ipow(Integer(c), i));
        for (auto& x : out) x.canonicalize();
        return out;
    }
    if (a == 0) throw ArgumentError("negative power of a + cz with a = 0");
    // a^e * sum_i C(e, i) (c/a)^i z^i
    Rational lead = Rational(1) / Rational(ipow(Integer(a), -e));
    Rational ratio = Rational(c) / a;
    Rational term = lead;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = term;
        term *= Rational(e - static_cast<std::int64_t>(i)) / static_cast<std::int64_t>(i + 1);
        term *= ratio;
    }
    return out;
}

} // namespace

RationalMatrix moment_action_matrix(const Mat2& g, std::int64_t k, std::size_t rows, std::size_t cols) {
    RationalMatrix out(rows, cols, Rational(0));
    for (std::size_t j = 0; j < rows; ++j) {
        const auto left = binomial_series(g.a, g.c, k - static_cast<std::int64_t>(j), cols);
        const auto right = binomial_series(g.b, g.d, static_cast<std::int64_t>(j), cols);
        for (std::size_t u = 0; u < cols; ++u) {
            if (left[u] == 0) continue;
            for (std::size_t v = 0; u + v < cols; ++v)
                if (right[v] != 0) out(j, u + v) += left[u] * right[v];
        }
    }
    return out;
}

bool in_sigma0(const Mat2& g, std::int64_t p) {
    auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
    return mod(g.a) != 0 && mod(g.c) == 0 && g.det() != 0;
}

SingleWeight::SingleWeight(std::int64_t p, std::int64_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw ArgumentError("p must be prime");
    if (k < 0) throw ArgumentError("weight must be nonnegative");
}

std::shared_ptr<const Matrix<PadicScalar>> SingleWeight::matrix(const Mat2& g, std::size_t rows,
                                                                std::size_t cols) const {
    if (!in_sigma0(g, p_)) throw ArgumentError("matrix " + g.to_string() + " is not in Sigma0(p)");
    const auto key = std::make_tuple(g, rows, cols);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end()) return it->second;
    }
    const RationalMatrix q = moment_action_matrix(g, k_, rows, cols);
    auto m = std::make_shared<Matrix<PadicScalar>>(rows, cols, zero());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (q(i, j) != 0) (*m)(i, j) = PadicScalar::exact(p_, q(i, j));
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->entries.emplace(key, m);
    return m;
}

Dist<PadicScalar> sigma0_action(const SingleWeight& w, const Mat2& g, const Dist<PadicScalar>& mu) {
    const auto a = w.matrix(g, mu.size(), mu.size());
    return apply_action(*a, g.c != 0, mu, w.polynomial_rows());
}

} // namespace parahoric
