#pragma once

#include "parahoric/distribution.hpp"
#include "parahoric/manin.hpp"
#include "parahoric/newton.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace parahoric {

// Element of Q_p[w]/(w^T), coefficients carried as p-adic scalars.
class WSeries {
public:
    WSeries() = default;
    WSeries(std::int64_t p, std::size_t order);  // exact zero
    static WSeries constant(const PadicScalar& c, std::size_t order);
    static WSeries variable(std::int64_t p, std::size_t order);

    std::int64_t prime() const { return p_; }
    std::size_t order() const { return c_.size(); }
    const PadicScalar& operator[](std::size_t i) const { return c_[i]; }
    PadicScalar& operator[](std::size_t i) { return c_[i]; }

    WSeries operator-() const;
    WSeries operator+(const WSeries& o) const;
    WSeries operator-(const WSeries& o) const;
    WSeries operator*(const WSeries& o) const;
    WSeries& operator+=(const WSeries& o) { return *this = *this + o; }
    WSeries& operator-=(const WSeries& o) { return *this = *this - o; }
    WSeries& operator*=(const WSeries& o) { return *this = *this * o; }
    WSeries scaled(const PadicScalar& c) const;
    // Inverse; needs a nonzero constant term.
    WSeries inverse() const;
    // Divide by w^s; the top s coefficients become unknown and are dropped.
    WSeries divided_by_w(std::size_t s) const;
    WSeries truncated(std::size_t order) const;

    PadicScalar evaluate(const PadicScalar& w) const;
    bool is_zero() const;
    std::int64_t valuation_bound() const;
    std::int64_t absprec() const;
    WSeries capped(std::int64_t absprec) const;
    std::string to_string() const;

private:
    std::int64_t p_ = 0;
    std::vector<PadicScalar> c_;
};

inline std::int64_t valuation_bound(const WSeries& x) { return x.valuation_bound(); }
inline WSeries capped(const WSeries& x, std::int64_t absprec) { return x.capped(absprec); }
inline WSeries scaled(const WSeries& x, const PadicScalar& c) { return x.scaled(c); }
inline bool is_zero(const WSeries& x) { return x.is_zero(); }
inline std::int64_t absprec(const WSeries& x) { return x.absprec(); }
inline WSeries additive_identity(const WSeries& sample) { return WSeries(sample.prime(), sample.order()); }

// p-adic logarithm of <a> = a / omega(a) for a prime to p, p odd.
PadicScalar log_teichmuller_free(std::int64_t a, std::int64_t p, std::int64_t absprec);

// Weight disc around k0: characters z -> z^{k0} <z>^w with w in p^radius Z_p,
// expanded to order T in w.
struct WeightDiscFamily {
    std::int64_t p = 3;
    std::int64_t k0 = 0;
    std::size_t order = 3;       // T
    std::int64_t radius = 1;     // w ranges over p^radius Z_p
    std::int64_t digits = 40;    // working p-adic precision of the character
};

// Action of the universal character on moments, with entries in Q_p[w]/(w^T).
class FamilyWeight {
public:
    using Scalar = WSeries;

    explicit FamilyWeight(const WeightDiscFamily& disc);

    std::int64_t prime() const { return disc_.p; }
    const WeightDiscFamily& disc() const { return disc_; }
    WSeries zero() const { return WSeries(disc_.p, disc_.order); }
    std::size_t polynomial_rows() const { return 0; }

    std::shared_ptr<const Matrix<WSeries>> matrix(const Mat2& g, std::size_t rows, std::size_t cols) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::tuple<Mat2, std::size_t, std::size_t>, std::shared_ptr<const Matrix<WSeries>>> entries;
    };
    WeightDiscFamily disc_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// det(1 - mX) over (Z/p^A)[w]/(w^T) without divisions, A bounded by the
// entries' precision after scaling them to be integral.
std::vector<WSeries> fredholm_division_free(const Matrix<WSeries>& m);

enum class AdaptedVerdict { Adapted, NotAdapted, Inconclusive };
std::string to_string(AdaptedVerdict v);

struct FamilyCharpolyReport {
    WeightDiscFamily disc;
    std::size_t moments = 0;
    std::size_t order_used = 0;                   // w-order actually certified
    std::vector<WSeries> fredholm;                // coefficients of X^i
    std::vector<std::string> diagnostics;
};

// det(1 - U_p X) over the weight disc, truncated at X^xdeg.
FamilyCharpolyReport family_charpoly(const ManinBasis& manin, const WeightDiscFamily& disc, std::size_t moments,
                                     std::size_t xdeg);

// Specialize the series at a point w of the disc.
PadicPoly specialize_fredholm(const FamilyCharpolyReport& r, const PadicScalar& w);

struct AdaptedReport {
    AdaptedVerdict verdict = AdaptedVerdict::Inconclusive;
    std::optional<std::int64_t> breakpoint;      // number of slopes <= h over the disc
    std::vector<std::pair<std::string, std::int64_t>> specializations;  // label, count at that point
    std::string reason;
};

// Is the number of slopes <= h constant over the disc?  Uses valuation bounds
// for every coefficient over the disc and confirms at the centre and at w1.
AdaptedReport slope_adapted(const FamilyCharpolyReport& r, const Rational& h, const PadicScalar& w1);

} // namespace parahoric
