#pragma once

#include "parahoric/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace parahoric {

// Element of Q_p known modulo p^absprec, stored as p^val * unit with the
// unit known modulo p^relprec.  A zero has relprec 0 and val == absprec.
// Residues live in 128 bits, so relprec is capped at max_relprec(p); asking
// for more silently keeps fewer digits, which only ever under-reports the
// precision.
class PadicScalar {
public:
    using u128 = unsigned __int128;

    PadicScalar() = default;

    static PadicScalar zero(std::int64_t p, std::int64_t absprec);
    static PadicScalar one(std::int64_t p, std::int64_t absprec);
    static PadicScalar from_integer(std::int64_t p, const Integer& n, std::int64_t absprec);
    static PadicScalar from_integer(std::int64_t p, std::int64_t n, std::int64_t absprec);
    static PadicScalar from_rational(std::int64_t p, const Rational& q, std::int64_t absprec);
    // Integer carried with as many digits as storage allows.
    static PadicScalar exact(std::int64_t p, std::int64_t n);
    static PadicScalar exact(std::int64_t p, const Rational& q);

    static std::int64_t max_relprec(std::int64_t p);
    // absprec used for exact zeros
    static constexpr std::int64_t kExactPrecision = 1LL << 40;

    std::int64_t prime() const { return p_; }
    std::int64_t absprec() const { return val_ + relprec_; }
    std::int64_t relprec() const { return relprec_; }
    bool is_zero() const { return relprec_ == 0; }
    std::optional<std::int64_t> valuation() const;
    // val for nonzero scalars, absprec for zeros: a certified lower bound.
    std::int64_t valuation_bound() const { return val_; }
    bool is_unit() const { return !is_zero() && val_ == 0; }

    Integer unit() const;
    // p^val * unit as an exact rational representative.
    Rational lift() const;
    // Representative in [0, p^absprec) when absprec >= 0 and val >= 0.
    Integer residue() const;

    PadicScalar capped(std::int64_t absprec) const;
    PadicScalar shifted(std::int64_t k) const;  // multiply by p^k, exactly

    PadicScalar operator-() const;
    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const;
    PadicScalar& operator+=(const PadicScalar& o) { return *this = *this + o; }
    PadicScalar& operator-=(const PadicScalar& o) { return *this = *this - o; }
    PadicScalar& operator*=(const PadicScalar& o) { return *this = *this * o; }
    PadicScalar& operator/=(const PadicScalar& o) { return *this = *this / o; }
    PadicScalar pow(std::uint64_t e) const;

    // Equal modulo the smaller of the two absolute precisions.
    bool equals(const PadicScalar& o) const { return (*this - o).is_zero(); }

    // "value + O(p^A)" with value = p^val * unit.
    std::string to_string() const;

private:
    PadicScalar(std::int64_t p, std::int64_t val, std::int64_t relprec, u128 unit)
        : p_(p), val_(val), relprec_(relprec), unit_(unit) {}
    static PadicScalar normalized(std::int64_t p, std::int64_t v, std::int64_t r, u128 x);
    void check_prime(const PadicScalar& o) const;

    std::int64_t p_ = 0;
    std::int64_t val_ = 0;
    std::int64_t relprec_ = 0;
    u128 unit_ = 0;
};

// Zero known to every digit storage allows.
inline PadicScalar additive_identity(const PadicScalar& sample) {
    return PadicScalar::zero(sample.prime(), PadicScalar::kExactPrecision);
}

} // namespace parahoric
