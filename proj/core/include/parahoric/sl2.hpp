#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace parahoric {

// Integer 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    Mat2 operator*(const Mat2& o) const;
    std::int64_t det() const;
    // Inverse of a determinant-one matrix.
    Mat2 inverse() const;
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const Mat2&) const = default;
    auto operator<=>(const Mat2&) const = default;
    std::string to_string() const;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 S() { return {0, -1, 1, 0}; }
    static Mat2 tau() { return {0, -1, 1, -1}; }
};

struct Mat2Hash {
    std::size_t operator()(const Mat2& m) const;
};

// Point of P^1(Q): num/den in lowest terms with den >= 0; infinity is 1/0.
struct Cusp {
    std::int64_t num = 1;
    std::int64_t den = 0;
    static Cusp make(std::int64_t num, std::int64_t den);
    bool is_infinity() const { return den == 0; }
    bool operator==(const Cusp&) const = default;
};

Cusp act(const Mat2& g, const Cusp& x);

// {r} - {infinity} as a sum of unimodular divisors {h inf} - {h 0} with h in
// SL2(Z), via the continued fraction convergents of r.
std::vector<Mat2> unimodular_path(const Cusp& r);

// {r} - {s} as signed unimodular divisors.
std::vector<std::pair<int, Mat2>> unimodular_divisor(const Cusp& r, const Cusp& s);

} // namespace parahoric
