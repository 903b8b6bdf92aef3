#include "parahoric/sl2.hpp"
#include "parahoric/error.hpp"

#include <numeric>

namespace parahoric {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw ArgumentError("integer overflow in 2x2 matrix arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw ArgumentError("integer overflow in 2x2 matrix arithmetic");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

Mat2 Mat2::operator*(const Mat2& o) const {
    return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)), checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
            checked_add(checked_mul(c, o.a), checked_mul(d, o.c)), checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

std::int64_t Mat2::det() const { return checked_mul(a, d) - checked_mul(b, c); }

Mat2 Mat2::inverse() const {
    if (det() != 1) throw ArgumentError("inverse of a matrix outside SL2(Z)");
    return {d, -b, -c, a};
}

std::string Mat2::to_string() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
           std::to_string(d) + "]]";
}

std::size_t Mat2Hash::operator()(const Mat2& m) const {
    std::size_t h = std::hash<std::int64_t>()(m.a);
    for (auto v : {m.b, m.c, m.d}) h = h * 1000003u ^ std::hash<std::int64_t>()(v);
    return h;
}

Cusp Cusp::make(std::int64_t num, std::int64_t den) {
    if (num == 0 && den == 0) throw ArgumentError("0/0 is not a cusp");
    if (den == 0) return {1, 0};
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

Cusp act(const Mat2& g, const Cusp& x) {
    return Cusp::make(checked_add(checked_mul(g.a, x.num), checked_mul(g.b, x.den)),
                      checked_add(checked_mul(g.c, x.num), checked_mul(g.d, x.den)));
}

std::vector<Mat2> unimodular_path(const Cusp& r) {
    std::vector<Mat2> out;
    if (r.is_infinity()) return out;
    // convergents p_k/q_k with p_{-1}/q_{-1} = 1/0 and p_{-2}/q_{-2} = 0/1
    std::int64_t pm2 = 0, qm2 = 1, pm1 = 1, qm1 = 0;
    std::int64_t x = r.num, y = r.den;
    while (y != 0) {
        const std::int64_t a = floor_div(x, y);
        const std::int64_t pk = checked_add(checked_mul(a, pm1), pm2);
        const std::int64_t qk = checked_add(checked_mul(a, qm1), qm2);
        // {p_k/q_k} - {p_{k-1}/q_{k-1}} = D_h with h = [[p_k, p_{k-1}], [q_k, q_{k-1}]] up to sign
        Mat2 h{pk, pm1, qk, qm1};
        if (h.det() == -1) h = {-pk, pm1, -qk, qm1};
        if (h.det() != 1) throw ConsistencyError("continued fraction step is not unimodular");
        out.push_back(h);
        pm2 = pm1;
        qm2 = qm1;
        pm1 = pk;
        qm1 = qk;
        const std::int64_t rem = x - a * y;
        x = y;
        y = rem;
    }
    return out;
}

std::vector<std::pair<int, Mat2>> unimodular_divisor(const Cusp& r, const Cusp& s) {
    std::vector<std::pair<int, Mat2>> out;
    for (const auto& h : unimodular_path(r)) out.emplace_back(1, h);
    for (const auto& h : unimodular_path(s)) out.emplace_back(-1, h);
    return out;
}

} // namespace parahoric
