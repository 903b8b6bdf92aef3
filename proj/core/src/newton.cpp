#include "parahoric/newton.hpp"
#include "parahoric/error.hpp"

#include <algorithm>

namespace parahoric {

namespace {

// Coefficients with at least this much absolute precision count as exact
// zeros and drop out of the hull.
constexpr std::int64_t kInfinite = PadicScalar::kExactPrecision / 2;

struct Pt {
    std::int64_t x;
    std::int64_t y;
    bool determined;
};

// cross product (a - o) x (b - o)
__int128 cross(const Pt& o, const Pt& a, const Pt& b) {
    return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

NewtonPolygon hull(std::vector<Pt> pts, std::int64_t degree, bool truncated, SlopeConvention conv) {
    NewtonPolygon np;
    np.convention = conv;
    np.degree = degree;
    if (std::none_of(pts.begin(), pts.end(), [](const Pt& p) { return p.determined; })) {
        throw PrecisionError("indeterminate Newton polygon: every coefficient is zero at its precision");
    }
    std::vector<Pt> h;
    for (const Pt& p : pts) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
        h.push_back(p);
    }
    for (const Pt& p : h) np.vertices.push_back({p.x, p.y, p.determined});
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        NewtonSegment s;
        s.start = h[i].x;
        s.end = h[i + 1].x;
        s.slope = Rational(h[i + 1].y - h[i].y, s.end - s.start);
        s.slope.canonicalize();
        s.root_valuation = conv == SlopeConvention::CharPoly ? Rational(-s.slope) : s.slope;
        s.ambiguous = !h[i].determined || !h[i + 1].determined || (truncated && i + 2 == h.size());
        np.segments.push_back(s);
    }
    if (conv == SlopeConvention::CharPoly && !pts.empty() && pts.front().x > 0) {
        np.diagnostics.push_back(std::to_string(pts.front().x) +
                                 " root(s) of infinite valuation (exactly vanishing low coefficients)");
    }
    for (const auto& s : np.segments) {
        if (s.ambiguous) {
            np.diagnostics.push_back("segment [" + std::to_string(s.start) + "," + std::to_string(s.end) +
                                     "] with root valuation " + s.root_valuation.get_str() +
                                     " is not certified by the available precision");
        }
    }
    return np;
}

} // namespace

std::int64_t PadicPoly::prime() const {
    if (coeffs.empty()) throw ArgumentError("empty polynomial");
    return coeffs.front().prime();
}

PadicPoly PadicPoly::from_rational(std::int64_t p, const std::vector<Rational>& c, std::int64_t absprec) {
    PadicPoly f;
    for (const auto& q : c) f.coeffs.push_back(PadicScalar::from_rational(p, q, absprec));
    return f;
}

PadicScalar PadicPoly::evaluate(const PadicScalar& x) const {
    PadicScalar acc = additive_identity(x);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PadicPoly PadicPoly::derivative() const {
    PadicPoly d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        d.coeffs.push_back(coeffs[i] * PadicScalar::exact(prime(), static_cast<std::int64_t>(i)));
    }
    if (d.coeffs.empty()) d.coeffs.push_back(additive_identity(coeffs.front()));
    return d;
}

std::optional<Rational> NewtonPolygon::certified_below() const {
    std::optional<Rational> bound;
    for (const auto& s : segments) {
        if (s.ambiguous && (!bound || s.root_valuation < *bound)) bound = s.root_valuation;
    }
    return bound;
}

NewtonPolygon newton_polygon(const PadicPoly& f, SlopeConvention conv) {
    if (f.coeffs.empty()) throw ArgumentError("Newton polygon of an empty polynomial");
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        const PadicScalar& c = f.coeffs[i];
        if (!c.is_zero()) {
            pts.push_back({static_cast<std::int64_t>(i), *c.valuation(), true});
        } else if (c.absprec() < kInfinite) {
            pts.push_back({static_cast<std::int64_t>(i), c.absprec(), false});
        }
    }
    return hull(pts, static_cast<std::int64_t>(f.coeffs.size()) - 1, f.truncated, conv);
}

NewtonPolygon newton_polygon(const std::vector<Rational>& f, std::int64_t p, SlopeConvention conv) {
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0) pts.push_back({static_cast<std::int64_t>(i), *valuation(f[i], p), true});
    }
    if (pts.empty()) throw PrecisionError("Newton polygon of the zero polynomial");
    return hull(pts, static_cast<std::int64_t>(f.size()) - 1, false, conv);
}

std::vector<Rational> root_slopes(const NewtonPolygon& np) {
    std::vector<Rational> out;
    for (const auto& s : np.segments) {
        if (s.ambiguous) continue;
        for (std::int64_t k = 0; k < s.multiplicity(); ++k) out.push_back(s.root_valuation);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t slope_le_h_dim(const NewtonPolygon& np, const std::optional<Rational>& h) {
    if (!h) return np.degree;
    std::int64_t count = 0;
    for (const auto& s : np.segments) {
        if (s.ambiguous && s.root_valuation == *h) {
            throw AmbiguityError("h = " + h->get_str() + " equals the slope of the uncertified segment [" +
                                 std::to_string(s.start) + "," + std::to_string(s.end) + "]");
        }
        if (s.root_valuation <= *h) count += s.multiplicity();
    }
    return count;
}

PadicPoly charpoly(const Matrix<PadicScalar>& m) {
    if (m.rows() != m.cols()) throw DimensionError("charpoly of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw ArgumentError("charpoly of an empty matrix has no prime");
    const std::int64_t p = m(0, 0).prime();
    Matrix<PadicScalar> h(m);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (h(i, k).is_zero()) continue;
            if (piv == n || *h(i, k).valuation() < *h(piv, k).valuation()) piv = i;
        }
        if (piv == n) continue;
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            if (h(i, k).is_zero()) continue;
            const PadicScalar f = h(i, k) / h(k + 1, k);
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(k + 1, j);
            for (std::size_t r = 0; r < n; ++r) h(r, k + 1) += f * h(r, i);
        }
        std::int64_t worst = PadicScalar::kExactPrecision;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) worst = std::min(worst, h(i, j).absprec());
        if (worst <= std::min<std::int64_t>(0, m(0, 0).absprec()) && worst < 0) {
            throw PrecisionError("Hessenberg pivot step " + std::to_string(k) +
                                 " exhausted all p-adic digits");
        }
    }
    const PadicScalar one = PadicScalar::exact(p, 1);
    const PadicScalar zero = additive_identity(one);
    std::vector<std::vector<PadicScalar>> poly(n + 1);
    poly[0] = {one};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<PadicScalar> next(k + 1, zero);
        for (std::size_t i = 0; i < k; ++i) {
            next[i + 1] += poly[k - 1][i];
            next[i] -= h(k - 1, k - 1) * poly[k - 1][i];
        }
        PadicScalar prod = one;
        for (std::size_t i = 1; i < k; ++i) {
            const std::size_t row = k - i;
            prod *= h(row, row - 1);
            if (prod.is_zero() && prod.absprec() >= PadicScalar::kExactPrecision / 2) break;
            const PadicScalar c = prod * h(row - 1, k - 1);
            for (std::size_t j = 0; j < poly[row - 1].size(); ++j) next[j] -= c * poly[row - 1][j];
        }
        poly[k] = std::move(next);
    }
    PadicPoly out;
    out.coeffs = std::move(poly[n]);
    return out;
}

PadicPoly fredholm_division_free(const Matrix<PadicScalar>& m) {
    using u128 = unsigned __int128;
    if (m.rows() != m.cols()) throw DimensionError("charpoly of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw ArgumentError("charpoly of an empty matrix has no prime");
    const std::int64_t p = m(0, 0).prime();
    std::int64_t low = 0, prec = PadicScalar::kExactPrecision;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            low = std::min(low, m(i, j).valuation_bound());
            prec = std::min(prec, m(i, j).absprec());
        }
    // scale by p^shift so every entry is integral; coefficient i then picks up p^{shift i}
    const std::int64_t shift = -low;
    std::int64_t digits = prec + shift;
    // keep the modulus below 2^62 so products fit in 128 bits
    std::int64_t cap = 0;
    for (u128 x = 1; x <= (u128(1) << 62) / static_cast<u128>(p); x *= static_cast<u128>(p)) ++cap;
    digits = std::min(digits, cap);
    if (digits <= 0) throw PrecisionError("matrix entries carry no digits after scaling");
    u128 mod = 1;
    for (std::int64_t i = 0; i < digits; ++i) mod *= static_cast<u128>(p);
    std::vector<u128> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const PadicScalar x = m(i, j).shifted(shift).capped(digits);
            const Integer r = x.is_zero() ? Integer(0) : x.residue();
            a[i * n + j] = static_cast<u128>(r.get_ui());
        }
    auto mul = [mod](u128 x, u128 y) { return (x * y) % mod; };
    auto neg = [mod](u128 x) { return x == 0 ? x : mod - x; };
    std::vector<u128> poly{1};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t q = r - 1;  // new index
        std::vector<u128> t(r + 1, 0);
        t[0] = 1;
        t[1] = neg(a[q * n + q]);
        std::vector<u128> v(q);  // M^k C
        for (std::size_t i = 0; i < q; ++i) v[i] = a[i * n + q];
        for (std::size_t k = 0; k + 2 <= r; ++k) {
            u128 s = 0;
            for (std::size_t i = 0; i < q; ++i) s = (s + mul(a[q * n + i], v[i])) % mod;
            t[k + 2] = neg(s);
            if (k + 3 <= r) {
                std::vector<u128> w(q, 0);
                for (std::size_t i = 0; i < q; ++i) {
                    u128 acc = 0;
                    for (std::size_t j = 0; j < q; ++j) acc = (acc + mul(a[i * n + j], v[j])) % mod;
                    w[i] = acc;
                }
                v = std::move(w);
            }
        }
        std::vector<u128> next(r + 1, 0);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < poly.size() && j <= i; ++j) next[i] = (next[i] + mul(t[i - j], poly[j])) % mod;
        poly = std::move(next);
    }
    PadicPoly out;
    for (std::size_t i = 0; i <= n; ++i) {
        const Integer z(static_cast<unsigned long>(poly[i]));
        const std::int64_t s = shift * static_cast<std::int64_t>(i);
        out.coeffs.push_back(PadicScalar::from_integer(p, z, digits).shifted(-s));
    }
    return out;
}

PadicPoly fredholm_from_charpoly(const PadicPoly& cp) {
    PadicPoly f;
    f.coeffs.assign(cp.coeffs.rbegin(), cp.coeffs.rend());
    return f;
}

PadicScalar hensel_lift(const PadicPoly& f, const PadicScalar& approx, std::int64_t absprec) {
    const std::int64_t p = f.prime();
    const PadicPoly df = f.derivative();
    PadicScalar x = PadicScalar::exact(p, approx.lift());
    const PadicScalar d0 = df.evaluate(x);
    const PadicScalar f0 = f.evaluate(x);
    if (d0.is_zero() || *d0.valuation() != 0) {
        throw PreconditionError("Hensel lift needs a simple root modulo p");
    }
    if (!f0.is_zero() && *f0.valuation() < 1) throw PreconditionError("not a root modulo p");
    // each Newton step doubles the number of correct digits
    for (std::int64_t correct = 1; correct < absprec; correct *= 2) {
        x = PadicScalar::exact(p, (x - f.evaluate(x) / df.evaluate(x)).lift());
    }
    return x.capped(absprec);
}

std::vector<PadicScalar> unit_roots(const std::vector<Rational>& f, std::int64_t p, std::int64_t absprec) {
    const PadicPoly fp = PadicPoly::from_rational(p, f, absprec + 2);
    std::vector<PadicScalar> roots;
    for (std::int64_t r = 1; r < p; ++r) {
        Rational value = 0, deriv = 0, pw = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            value += f[i] * pw;
            if (i + 1 < f.size()) deriv += f[i + 1] * Rational(static_cast<long>(i + 1)) * pw;
            pw *= r;
        }
        auto v = valuation(value, p);
        auto dv = valuation(deriv, p);
        if ((!v || *v >= 1) && dv && *dv == 0) {
            roots.push_back(hensel_lift(fp, PadicScalar::from_integer(p, r, absprec), absprec));
        }
    }
    return roots;
}

} // namespace parahoric
