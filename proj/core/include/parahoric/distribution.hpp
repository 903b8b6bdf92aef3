#pragma once

#include "parahoric/matrix.hpp"
#include "parahoric/padic.hpp"
#include "parahoric/sl2.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace parahoric {

// Exact matrix A with (mu|g)_j = sum_i A(j, i) mu_i for the weight-k right
// action (mu|g)(f) = mu((a+cz)^k f((b+dz)/(a+cz))) on moments.  Rows j > k
// need a != 0 and use the binomial series of (a+cz)^{k-j}.
RationalMatrix moment_action_matrix(const Mat2& g, std::int64_t k, std::size_t rows, std::size_t cols);

// p does not divide a, p divides c, det != 0.
bool in_sigma0(const Mat2& g, std::int64_t p);

// Scalar helpers shared by PadicScalar and the weight-family ring.
inline std::int64_t valuation_bound(const PadicScalar& x) { return x.valuation_bound(); }
inline PadicScalar capped(const PadicScalar& x, std::int64_t absprec) { return x.capped(absprec); }
inline PadicScalar scaled(const PadicScalar& x, const PadicScalar& c) { return x * c; }
inline bool is_zero(const PadicScalar& x) { return x.is_zero(); }
inline std::int64_t absprec(const PadicScalar& x) { return x.absprec(); }

// Finitely many moments m_0..m_{L-1} of a distribution together with a lower
// bound on the valuation of every moment that is not stored.  An exactly
// known finitely supported distribution has floor kExactPrecision.
template <class S>
struct Dist {
    std::vector<S> moments;
    std::int64_t floor = PadicScalar::kExactPrecision;

    std::size_t size() const { return moments.size(); }
};

template <class S>
Dist<S> operator+(const Dist<S>& x, const Dist<S>& y) {
    if (x.size() != y.size()) throw DimensionError("distribution lengths differ");
    Dist<S> out{x.moments, std::min(x.floor, y.floor)};
    for (std::size_t j = 0; j < y.size(); ++j) out.moments[j] += y.moments[j];
    return out;
}

template <class S>
Dist<S> operator-(const Dist<S>& x) {
    Dist<S> out = x;
    for (auto& m : out.moments) m = -m;
    return out;
}

template <class S>
Dist<S> operator-(const Dist<S>& x, const Dist<S>& y) {
    return x + (-y);
}

template <class S>
Dist<S> scale(const Dist<S>& x, const PadicScalar& c) {
    Dist<S> out = x;
    for (auto& m : out.moments) m = scaled(m, c);
    if (out.floor < PadicScalar::kExactPrecision / 2) out.floor += c.valuation_bound();
    return out;
}

// Apply A (rows x cols, cols == x.size()) as a right action.  `mixing` says
// whether the matrix has c != 0 so that unstored moments feed every output:
// their contribution to row j has valuation >= floor + cols - j.  Rows below
// `polynomial_rows` never see moments past that index (weight k: k + 1).
template <class S>
Dist<S> apply_action(const Matrix<S>& a, bool mixing, const Dist<S>& x, std::size_t polynomial_rows = 0) {
    if (a.cols() != x.size()) throw DimensionError("action matrix does not match the distribution");
    const std::size_t rows = a.rows(), cols = a.cols();
    Dist<S> out;
    out.moments.reserve(rows);
    const bool exact_tail = x.floor >= PadicScalar::kExactPrecision / 2;
    std::int64_t tail = x.floor;
    for (std::size_t j = 0; j < rows; ++j) {
        S acc = additive_identity(a(j, 0));
        for (std::size_t i = 0; i < cols; ++i)
            if (!is_zero(x.moments[i]) || absprec(x.moments[i]) < PadicScalar::kExactPrecision / 2)
                acc += a(j, i) * x.moments[i];
        if (!exact_tail && !(j < polynomial_rows && cols >= polynomial_rows)) {
            if (mixing)
                acc = capped(acc, x.floor + std::max<std::int64_t>(0, static_cast<std::int64_t>(cols) - static_cast<std::int64_t>(j)));
            else if (j >= cols)
                acc = capped(acc, x.floor);
        }
        out.moments.push_back(std::move(acc));
    }
    // unstored output moments: integral matrix entries, so bounded by the inputs
    for (const auto& m : x.moments) tail = std::min(tail, valuation_bound(m));
    out.floor = tail;
    return out;
}

// Weight (k, 0) action on p-adic moments, cached per matrix and shape.
class SingleWeight {
public:
    using Scalar = PadicScalar;

    SingleWeight(std::int64_t p, std::int64_t k);

    std::int64_t prime() const { return p_; }
    std::int64_t weight() const { return k_; }
    PadicScalar scalar(const Rational& q) const { return PadicScalar::exact(p_, q); }
    PadicScalar zero() const { return PadicScalar::zero(p_, PadicScalar::kExactPrecision); }
    PadicScalar from_padic(const PadicScalar& x) const { return x; }
    std::size_t polynomial_rows() const { return static_cast<std::size_t>(k_ + 1); }

    // Throws ArgumentError unless g is in Sigma0(p).
    std::shared_ptr<const Matrix<PadicScalar>> matrix(const Mat2& g, std::size_t rows, std::size_t cols) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::tuple<Mat2, std::size_t, std::size_t>, std::shared_ptr<const Matrix<PadicScalar>>> entries;
    };
    std::int64_t p_, k_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();  // shared by copies
};

// sigma0_action on a distribution of the given weight.
Dist<PadicScalar> sigma0_action(const SingleWeight& w, const Mat2& g, const Dist<PadicScalar>& mu);

} // namespace parahoric
