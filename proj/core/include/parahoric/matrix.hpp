#pragma once

#include "parahoric/error.hpp"
#include "parahoric/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace parahoric {

// Neutral element shaped like `sample`.  Scalars that carry a modulus or a
// precision overload this so accumulators do not inherit the sample's.
template <class T>
T additive_identity(const T& sample) {
    return sample - sample;
}

// Dense row-major matrix over an arbitrary scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix out(rows_, o.cols_, zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
        std::vector<T> out(rows_, zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    T zero_like() const {
        if (data_.empty()) return T();
        return additive_identity(data_.front());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

RationalMatrix identity_matrix(std::size_t n);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);
std::size_t rank(RationalMatrix m);
// Columns form a basis of {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m);
RationalMatrix inverse(const RationalMatrix& m);
// Left inverse of a matrix with independent columns.
RationalMatrix left_inverse(const RationalMatrix& m);
// Horizontal concatenation.
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);

// Monic characteristic polynomial det(X - m), coefficients in ascending
// degree, by exact Hessenberg reduction.
std::vector<Rational> charpoly(const RationalMatrix& m);

} // namespace parahoric
