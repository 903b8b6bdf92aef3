#include "parahoric/padic.hpp"
#include "parahoric/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <vector>

namespace parahoric {

namespace {

using u128 = PadicScalar::u128;
using i128 = __int128;

struct PowerTable {
    std::int64_t p = 0;
    std::vector<u128> pow;  // pow[r] = p^r for r <= max relprec
};

const PowerTable& powers(std::int64_t p) {
    thread_local PowerTable last;
    if (last.p == p) return last;
    PowerTable t;
    t.p = p;
    t.pow.push_back(1);
    const u128 limit = static_cast<u128>(1) << 125;
    while (t.pow.back() <= limit / static_cast<u128>(p)) t.pow.push_back(t.pow.back() * static_cast<u128>(p));
    last = std::move(t);
    return last;
}

u128 pw(std::int64_t p, std::int64_t r) { return powers(p).pow[static_cast<std::size_t>(r)]; }

u128 mulmod(u128 a, u128 b, u128 m) {
    if ((m >> 64) == 0) return (a * b) % m;
    using boost::multiprecision::uint256_t;
    uint256_t x(a);
    x *= uint256_t(b);
    x %= uint256_t(m);
    return static_cast<u128>(x);
}

u128 invmod(u128 a, u128 m) {
    i128 t = 0, nt = 1;
    i128 r = static_cast<i128>(m), nr = static_cast<i128>(a % m);
    while (nr != 0) {
        i128 q = r / nr;
        i128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw ConsistencyError("unit residue is not invertible");
    if (t < 0) t += static_cast<i128>(m);
    return static_cast<u128>(t);
}

Integer to_integer(u128 x) {
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(x >> 64)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(x)));
    return (hi << 64) + lo;
}

u128 from_integer_mod(const Integer& n, u128 m) {
    Integer mm = to_integer(m);
    Integer r = n % mm;
    if (r < 0) r += mm;
    Integer hi = r >> 64;
    Integer lo = r - (hi << 64);
    return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
}

} // namespace

std::int64_t PadicScalar::max_relprec(std::int64_t p) {
    return static_cast<std::int64_t>(powers(p).pow.size()) - 1;
}

PadicScalar PadicScalar::zero(std::int64_t p, std::int64_t absprec) {
    if (p < 2) throw ArgumentError("p-adic scalar needs a prime");
    return PadicScalar(p, absprec, 0, 0);
}

PadicScalar PadicScalar::one(std::int64_t p, std::int64_t absprec) {
    return from_integer(p, std::int64_t{1}, absprec);
}

PadicScalar PadicScalar::normalized(std::int64_t p, std::int64_t v, std::int64_t r, u128 x) {
    if (r <= 0) return PadicScalar(p, v + std::max<std::int64_t>(r, 0), 0, 0);
    x %= pw(p, r);
    if (x == 0) return PadicScalar(p, v + r, 0, 0);
    const u128 pp = static_cast<u128>(p);
    while (x % pp == 0) {
        x /= pp;
        ++v;
        --r;
    }
    return PadicScalar(p, v, r, x);
}

PadicScalar PadicScalar::from_integer(std::int64_t p, const Integer& n, std::int64_t absprec) {
    if (p < 2) throw ArgumentError("p-adic scalar needs a prime");
    if (n == 0) return zero(p, absprec);
    const std::int64_t v = parahoric::valuation(n, p);
    if (v >= absprec) return zero(p, absprec);
    Integer u = n / ipow(Integer(static_cast<long>(p)), static_cast<std::uint64_t>(v));
    const std::int64_t r = std::min(absprec - v, max_relprec(p));
    return PadicScalar(p, v, r, from_integer_mod(u, pw(p, r)));
}

PadicScalar PadicScalar::from_integer(std::int64_t p, std::int64_t n, std::int64_t absprec) {
    return from_integer(p, Integer(static_cast<long>(n)), absprec);
}

PadicScalar PadicScalar::from_rational(std::int64_t p, const Rational& q, std::int64_t absprec) {
    if (p < 2) throw ArgumentError("p-adic scalar needs a prime");
    if (q == 0) return zero(p, absprec);
    Integer num(q.get_num()), den(q.get_den());
    const std::int64_t vn = parahoric::valuation(num, p);
    const std::int64_t vd = parahoric::valuation(den, p);
    const std::int64_t v = vn - vd;
    if (v >= absprec) return zero(p, absprec);
    Integer pz(static_cast<long>(p));
    num /= ipow(pz, static_cast<std::uint64_t>(vn));
    den /= ipow(pz, static_cast<std::uint64_t>(vd));
    const std::int64_t r = std::min(absprec - v, max_relprec(p));
    const u128 m = pw(p, r);
    const u128 u = mulmod(from_integer_mod(num, m), invmod(from_integer_mod(den, m), m), m);
    return PadicScalar(p, v, r, u);
}

PadicScalar PadicScalar::exact(std::int64_t p, std::int64_t n) {
    if (n == 0) return zero(p, kExactPrecision);
    const std::int64_t v = parahoric::valuation(Integer(static_cast<long>(n)), p);
    return from_integer(p, n, v + max_relprec(p));
}

PadicScalar PadicScalar::exact(std::int64_t p, const Rational& q) {
    if (q == 0) return zero(p, kExactPrecision);
    return from_rational(p, q, *parahoric::valuation(q, p) + max_relprec(p));
}

std::optional<std::int64_t> PadicScalar::valuation() const {
    if (is_zero()) return std::nullopt;
    return val_;
}

Integer PadicScalar::unit() const { return to_integer(unit_); }

Rational PadicScalar::lift() const {
    if (is_zero()) return 0;
    Integer pz(static_cast<long>(p_));
    Rational r(unit());
    if (val_ >= 0) {
        r *= Rational(ipow(pz, static_cast<std::uint64_t>(val_)));
    } else {
        r /= Rational(ipow(pz, static_cast<std::uint64_t>(-val_)));
    }
    return r;
}

Integer PadicScalar::residue() const {
    if (is_zero()) return 0;
    if (val_ < 0) throw ArgumentError("residue of a non-integral p-adic scalar");
    return lift().get_num();
}

PadicScalar PadicScalar::capped(std::int64_t absprec) const {
    if (absprec >= this->absprec()) return *this;
    if (is_zero() || absprec <= val_) return PadicScalar(p_, absprec, 0, 0);
    const std::int64_t r = absprec - val_;
    return PadicScalar(p_, val_, r, unit_ % pw(p_, r));
}

PadicScalar PadicScalar::shifted(std::int64_t k) const {
    PadicScalar out(*this);
    out.val_ += k;
    return out;
}

void PadicScalar::check_prime(const PadicScalar& o) const {
    if (p_ != o.p_ || p_ == 0) {
        throw ArgumentError("p-adic arithmetic across primes " + std::to_string(p_) + " and " +
                            std::to_string(o.p_));
    }
}

PadicScalar PadicScalar::operator-() const {
    if (is_zero()) return *this;
    return PadicScalar(p_, val_, relprec_, pw(p_, relprec_) - unit_);
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    check_prime(o);
    const std::int64_t a = std::min(absprec(), o.absprec());
    const std::int64_t v = std::min(val_, o.val_);
    if (v >= a) return PadicScalar(p_, a, 0, 0);
    const std::int64_t r = a - v;
    const u128 m = pw(p_, r);
    auto part = [&](const PadicScalar& x) -> u128 {
        if (x.is_zero()) return 0;
        const std::int64_t shift = x.val_ - v;
        if (shift >= r) return 0;
        return mulmod(x.unit_ % m, pw(p_, shift), m);
    };
    u128 s = part(*this) + part(o);
    if (s >= m) s -= m;
    return normalized(p_, v, r, s);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    check_prime(o);
    if (is_zero() || o.is_zero()) {
        return PadicScalar(p_, std::min(absprec() + o.val_, o.absprec() + val_), 0, 0);
    }
    const std::int64_t r = std::min(relprec_, o.relprec_);
    const u128 m = pw(p_, r);
    return PadicScalar(p_, val_ + o.val_, r, mulmod(unit_ % m, o.unit_ % m, m));
}

PadicScalar PadicScalar::operator/(const PadicScalar& o) const {
    check_prime(o);
    if (o.is_zero()) throw PrecisionError("division by a p-adic scalar that is zero at its precision");
    if (is_zero()) return PadicScalar(p_, absprec() - o.val_, 0, 0);
    const std::int64_t r = std::min(relprec_, o.relprec_);
    const u128 m = pw(p_, r);
    return PadicScalar(p_, val_ - o.val_, r, mulmod(unit_ % m, invmod(o.unit_ % m, m), m));
}

PadicScalar PadicScalar::pow(std::uint64_t e) const {
    PadicScalar result = exact(p_, 1);
    PadicScalar base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string PadicScalar::to_string() const {
    std::string value = is_zero() ? "0" : lift().get_str();
    return value + " + O(" + std::to_string(p_) + "^" + std::to_string(absprec()) + ")";
}

} // namespace parahoric
