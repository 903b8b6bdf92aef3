#include "parahoric/matrix.hpp"

#include <utility>

namespace parahoric {

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

RationalMatrix nullspace(const RationalMatrix& m) {
    RationalMatrix r(m);
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RationalMatrix basis(m.cols(), free_cols.size(), Rational(0));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, free_cols[k]);
    }
    return basis;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    RationalMatrix out(a.rows(), a.cols() + b.cols(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix aug = hstack(m, identity_matrix(n));
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw ArgumentError("matrix is singular");
    RationalMatrix inv(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

RationalMatrix left_inverse(const RationalMatrix& m) {
    const RationalMatrix t = m.transpose();
    return inverse(t * m) * t;
}

std::vector<Rational> charpoly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("charpoly of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix h(m);
    // similarity transform to upper Hessenberg form
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && h(piv, k) == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            if (h(i, k) == 0) continue;
            const Rational f = h(i, k) / h(k + 1, k);
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(k + 1, j);
            for (std::size_t r = 0; r < n; ++r) h(r, k + 1) += f * h(r, i);
        }
    }
    // p_k = charpoly of the leading k x k block
    std::vector<std::vector<Rational>> p(n + 1);
    p[0] = {Rational(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Rational> next(k + 1, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
            next[i + 1] += p[k - 1][i];
            next[i] -= h(k - 1, k - 1) * p[k - 1][i];
        }
        Rational prod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            const std::size_t row = k - i;  // 1-based row index k-i
            prod *= h(row, row - 1);
            const Rational c = prod * h(row - 1, k - 1);
            for (std::size_t j = 0; j < p[row - 1].size(); ++j) next[j] -= c * p[row - 1][j];
        }
        p[k] = std::move(next);
    }
    return p[n];
}

} // namespace parahoric
