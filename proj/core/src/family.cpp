#include "parahoric/family.hpp"
#include "parahoric/error.hpp"
#include "parahoric/ocsymbol.hpp"

#include <algorithm>

namespace parahoric {

WSeries::WSeries(std::int64_t p, std::size_t order)
    : p_(p), c_(order, PadicScalar::zero(p, PadicScalar::kExactPrecision)) {
    if (order == 0) throw ArgumentError("weight series need order >= 1");
}

WSeries WSeries::constant(const PadicScalar& c, std::size_t order) {
    WSeries out(c.prime(), order);
    out.c_[0] = c;
    return out;
}

WSeries WSeries::variable(std::int64_t p, std::size_t order) {
    WSeries out(p, order);
    if (order > 1) out.c_[1] = PadicScalar::exact(p, 1);
    return out;
}

WSeries WSeries::operator-() const {
    WSeries out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

WSeries WSeries::operator+(const WSeries& o) const {
    if (o.order() != order()) throw DimensionError("weight series of different orders");
    WSeries out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

WSeries WSeries::operator-(const WSeries& o) const { return *this + (-o); }

WSeries WSeries::operator*(const WSeries& o) const {
    if (o.order() != order()) throw DimensionError("weight series of different orders");
    WSeries out(p_, order());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero() && c_[i].absprec() >= PadicScalar::kExactPrecision / 2) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    }
    return out;
}

WSeries WSeries::scaled(const PadicScalar& c) const {
    WSeries out = *this;
    for (auto& x : out.c_) x *= c;
    return out;
}

WSeries WSeries::inverse() const {
    if (c_[0].is_zero()) throw PreconditionError("weight series with zero constant term is not invertible");
    WSeries out(p_, order());
    const PadicScalar inv0 = PadicScalar::exact(p_, 1) / c_[0];
    out.c_[0] = inv0;
    for (std::size_t n = 1; n < order(); ++n) {
        PadicScalar acc = PadicScalar::zero(p_, PadicScalar::kExactPrecision);
        for (std::size_t i = 1; i <= n; ++i) acc += c_[i] * out.c_[n - i];
        out.c_[n] = -(acc * inv0);
    }
    return out;
}

WSeries WSeries::divided_by_w(std::size_t s) const {
    if (s >= order()) throw PrecisionError("dividing by w leaves no coefficients");
    for (std::size_t i = 0; i < s; ++i)
        if (!c_[i].is_zero()) throw ArgumentError("series is not divisible by w^s");
    WSeries out(p_, order() - s);
    for (std::size_t i = s; i < order(); ++i) out.c_[i - s] = c_[i];
    return out;
}

WSeries WSeries::truncated(std::size_t order) const {
    WSeries out(p_, order);
    for (std::size_t i = 0; i < std::min(order, this->order()); ++i) out.c_[i] = c_[i];
    return out;
}

PadicScalar WSeries::evaluate(const PadicScalar& w) const {
    PadicScalar acc = PadicScalar::zero(p_, PadicScalar::kExactPrecision);
    for (std::size_t i = order(); i-- > 0;) acc = acc * w + c_[i];
    return acc;
}

bool WSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const PadicScalar& x) { return x.is_zero(); });
}

std::int64_t WSeries::valuation_bound() const {
    std::int64_t v = PadicScalar::kExactPrecision;
    for (const auto& x : c_) v = std::min(v, x.valuation_bound());
    return v;
}

std::int64_t WSeries::absprec() const {
    std::int64_t v = PadicScalar::kExactPrecision;
    for (const auto& x : c_) v = std::min(v, x.absprec());
    return v;
}

WSeries WSeries::capped(std::int64_t a) const {
    WSeries out = *this;
    for (auto& x : out.c_) x = x.capped(a);
    return out;
}

std::string WSeries::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += " + ";
        s += "(" + c_[i].to_string() + ")";
        if (i == 1) s += "w";
        if (i > 1) s += "w^" + std::to_string(i);
    }
    return s;
}

PadicScalar log_teichmuller_free(std::int64_t a, std::int64_t p, std::int64_t absprec) {
    if (p == 2) throw UnsupportedError("the disc character is implemented for odd p");
    if (a % p == 0) throw ArgumentError("<a> needs a prime to p");
    const std::int64_t work = absprec + 2 * detail::digits_of(absprec + 10, p) + 4;
    // log(a^{p-1}) / (p-1) with a^{p-1} = 1 + u, v(u) >= 1
    const Integer big = ipow(Integer(a), static_cast<std::uint64_t>(p - 1)) - 1;
    const PadicScalar u = PadicScalar::from_integer(p, big, work);
    PadicScalar acc = PadicScalar::zero(p, work);
    PadicScalar power = u;
    for (std::int64_t n = 1;; ++n) {
        // terms have valuation >= n - log_p(n)
        if (n - detail::digits_of(n, p) > work) break;
        const PadicScalar term = power * PadicScalar::exact(p, Rational(n % 2 == 1 ? 1 : -1, 1) / n);
        acc += term;
        power *= u;
    }
    return (acc * PadicScalar::exact(p, Rational(1) / (p - 1))).capped(absprec);
}

FamilyWeight::FamilyWeight(const WeightDiscFamily& disc) : disc_(disc) {
    if (!is_prime(disc.p)) throw ArgumentError("p must be prime");
    if (disc.p == 2) throw UnsupportedError("weight discs are implemented for odd p");
    if (disc.order == 0) throw ArgumentError("order must be positive");
    if (disc.k0 < 0) throw ArgumentError("disc centre must be a nonnegative weight");
    if (disc.radius < 1) throw ArgumentError("disc radius must be at least 1");
}

std::shared_ptr<const Matrix<WSeries>> FamilyWeight::matrix(const Mat2& g, std::size_t rows, std::size_t cols) const {
    const std::int64_t p = disc_.p;
    if (!in_sigma0(g, p)) throw ArgumentError("matrix " + g.to_string() + " is not in Sigma0(p)");
    const auto key = std::make_tuple(g, rows, cols);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end()) return it->second;
    }
    const std::size_t T = disc_.order;
    // kappa(a + cz) ((b + dz)/(a + cz))^j = (a+cz)^{k0-j} (b+dz)^j exp(w l(z))
    // with l(z) = log<a> + log(1 + (c/a) z)
    const RationalMatrix r = moment_action_matrix(g, disc_.k0, rows, cols);
    std::vector<PadicScalar> l(cols, PadicScalar::zero(p, PadicScalar::kExactPrecision));
    l[0] = log_teichmuller_free(g.a, p, disc_.digits);
    const Rational ratio = Rational(g.c) / g.a;
    Rational pw = 1;
    for (std::size_t m = 1; m < cols; ++m) {
        pw *= ratio;
        l[m] = PadicScalar::exact(p, pw / static_cast<std::int64_t>(m) * (m % 2 == 1 ? 1 : -1));
    }
    // e[i] = [z^i] exp(w l(z)) as a weight series
    std::vector<WSeries> e(cols, WSeries(p, T));
    std::vector<PadicScalar> power(cols, PadicScalar::zero(p, PadicScalar::kExactPrecision));
    power[0] = PadicScalar::exact(p, 1);
    Rational inv_fact = 1;
    for (std::size_t n = 0; n < T; ++n) {
        if (n > 0) {
            std::vector<PadicScalar> next(cols, PadicScalar::zero(p, PadicScalar::kExactPrecision));
            for (std::size_t i = 0; i < cols; ++i)
                for (std::size_t j = 0; i + j < cols; ++j) next[i + j] += power[i] * l[j];
            power = std::move(next);
            inv_fact /= static_cast<std::int64_t>(n);
        }
        const PadicScalar f = PadicScalar::exact(p, inv_fact);
        for (std::size_t i = 0; i < cols; ++i) e[i][n] = power[i] * f;
    }
    auto out = std::make_shared<Matrix<WSeries>>(rows, cols, WSeries(p, T));
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t t = 0; t < cols; ++t) {
            if (r(j, t) == 0) continue;
            const PadicScalar rt = PadicScalar::exact(p, r(j, t));
            for (std::size_t i = t; i < cols; ++i) (*out)(j, i) += e[i - t].scaled(rt);
        }
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->entries.emplace(key, out);
    return out;
}

std::vector<WSeries> fredholm_division_free(const Matrix<WSeries>& m) {
    using u128 = unsigned __int128;
    if (m.rows() != m.cols()) throw DimensionError("charpoly of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw ArgumentError("empty matrix");
    const std::int64_t p = m(0, 0).prime();
    const std::size_t T = m(0, 0).order();
    std::int64_t low = 0, prec = PadicScalar::kExactPrecision;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            low = std::min(low, m(i, j).valuation_bound());
            prec = std::min(prec, m(i, j).absprec());
        }
    const std::int64_t shift = -low;
    std::int64_t cap = 0;
    for (u128 x = 1; x <= (u128(1) << 62) / static_cast<u128>(p); x *= static_cast<u128>(p)) ++cap;
    const std::int64_t digits = std::min(prec + shift, cap);
    if (digits <= 0) throw PrecisionError("matrix entries carry no digits after scaling");
    u128 mod = 1;
    for (std::int64_t i = 0; i < digits; ++i) mod *= static_cast<u128>(p);

    using Elt = std::vector<u128>;
    auto add = [&](Elt& x, const Elt& y) {
        for (std::size_t t = 0; t < T; ++t) x[t] = (x[t] + y[t]) % mod;
    };
    auto mul = [&](const Elt& x, const Elt& y) {
        Elt z(T, 0);
        for (std::size_t i = 0; i < T; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; i + j < T; ++j) z[i + j] = (z[i + j] + (x[i] * y[j]) % mod) % mod;
        }
        return z;
    };
    auto neg = [&](Elt x) {
        for (auto& v : x) v = v == 0 ? 0 : mod - v;
        return x;
    };
    std::vector<Elt> a(n * n, Elt(T, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < T; ++t) {
                const PadicScalar x = m(i, j)[t].shifted(shift).capped(digits);
                a[i * n + j][t] = x.is_zero() ? 0 : static_cast<u128>(x.residue().get_ui());
            }
    const Elt zero(T, 0);
    Elt one(T, 0);
    one[0] = 1;
    std::vector<Elt> poly{one};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t q = r - 1;
        std::vector<Elt> t(r + 1, zero);
        t[0] = one;
        t[1] = neg(a[q * n + q]);
        std::vector<Elt> v(q);
        for (std::size_t i = 0; i < q; ++i) v[i] = a[i * n + q];
        for (std::size_t k = 0; k + 2 <= r; ++k) {
            Elt s = zero;
            for (std::size_t i = 0; i < q; ++i) add(s, mul(a[q * n + i], v[i]));
            t[k + 2] = neg(s);
            if (k + 3 <= r) {
                std::vector<Elt> w(q, zero);
                for (std::size_t i = 0; i < q; ++i)
                    for (std::size_t j = 0; j < q; ++j) add(w[i], mul(a[i * n + j], v[j]));
                v = std::move(w);
            }
        }
        std::vector<Elt> next(r + 1, zero);
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < poly.size() && j <= i; ++j) add(next[i], mul(t[i - j], poly[j]));
        poly = std::move(next);
    }
    std::vector<WSeries> out;
    for (std::size_t i = 0; i <= n; ++i) {
        WSeries c(p, T);
        for (std::size_t t = 0; t < T; ++t)
            c[t] = PadicScalar::from_integer(p, Integer(static_cast<unsigned long>(poly[i][t])), digits)
                       .shifted(-shift * static_cast<std::int64_t>(i));
        out.push_back(std::move(c));
    }
    return out;
}

std::string to_string(AdaptedVerdict v) {
    switch (v) {
    case AdaptedVerdict::Adapted: return "adapted";
    case AdaptedVerdict::NotAdapted: return "not-adapted";
    case AdaptedVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

FamilyCharpolyReport family_charpoly(const ManinBasis& manin, const WeightDiscFamily& disc, std::size_t moments,
                                     std::size_t xdeg) {
    if (disc.p != manin.p()) throw ArgumentError("disc and level use different primes");
    if (disc.k0 % 2 != 0) throw UnsupportedError("odd weight: no nonzero symbols");
    const std::int64_t p = manin.p();
    const std::size_t M = moments;
    const std::size_t L = 2 * M + 2 + static_cast<std::size_t>(detail::digits_of(M, p));
    auto mb = std::make_shared<const ManinBasis>(manin);
    SymbolSpace<FamilyWeight> space(mb, FamilyWeight(disc), L);
    const std::size_t G = space.num_generators() - 1;
    const std::size_t n = G * M;
    const std::size_t T = disc.order;
    FamilyCharpolyReport report;
    report.disc = disc;
    report.moments = M;

    auto unit = [&](std::size_t c) {
        std::vector<Dist<WSeries>> params(G, space.zero_dist(L));
        params[c / M].moments[c % M] = WSeries::constant(PadicScalar::exact(p, 1), T);
        return params;
    };
    // The total measure defect is divisible by w^s (s = 1 at k0 = 0, where
    // weight zero moves no total measure); project along a pivot after
    // dividing out w^s, which costs s orders in w.
    std::vector<std::vector<Dist<WSeries>>> projected_units;
    std::vector<WSeries> defects;
    std::size_t s = T;
    for (std::size_t c = 0; c < n; ++c) {
        projected_units.push_back(space.project_torsion(unit(c)));
        defects.push_back(space.total_measure_defect(projected_units.back()));
        for (std::size_t t = 0; t < T; ++t)
            if (!defects.back()[t].is_zero()) {
                s = std::min(s, t);
                break;
            }
    }
    std::optional<std::size_t> pivot;
    if (s < T) {
        for (std::size_t c = 0; c < n; ++c) {
            if (defects[c][s].is_zero()) continue;
            if (!pivot || defects[c][s].valuation_bound() < defects[*pivot][s].valuation_bound()) pivot = c;
        }
        report.order_used = T - s;
        if (s > 0)
            report.diagnostics.push_back("total measure constraint divisible by w^" + std::to_string(s) +
                                         "; series certified modulo w^" + std::to_string(T - s));
    } else {
        report.order_used = T;
    }
    const std::size_t used = report.order_used;
    WSeries pivot_inv;
    if (pivot) pivot_inv = defects[*pivot].divided_by_w(s).inverse();

    Matrix<WSeries> U(n, n, WSeries(p, used));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Dist<WSeries>> x = projected_units[c];
        if (pivot && c != *pivot) {
            WSeries f = defects[c].divided_by_w(s) * pivot_inv;
            f = f.truncated(T);  // top orders are beyond the certified range
            for (std::size_t g = 0; g < G; ++g) {
                const auto& pv = projected_units[*pivot][g];
                for (std::size_t j = 0; j < L; ++j) x[g].moments[j] -= pv.moments[j] * f;
            }
        } else if (pivot) {
            // the pivot direction itself projects to zero
            x.assign(G, space.zero_dist(L));
        }
        const auto image = space.up(space.from_parameters(x));
        for (std::size_t g = 0; g < G; ++g)
            for (std::size_t j = 0; j < M; ++j) U(g * M + j, c) = image.values[g + 1].moments[j].truncated(used);
    }
    auto f = fredholm_division_free(U);
    if (f.size() > xdeg + 1) f.resize(xdeg + 1);
    report.fredholm = std::move(f);
    return report;
}

PadicPoly specialize_fredholm(const FamilyCharpolyReport& r, const PadicScalar& w) {
    if (w.valuation_bound() < r.disc.radius) throw ArgumentError("point outside the weight disc");
    PadicPoly out;
    out.truncated = true;
    for (const auto& c : r.fredholm) out.coeffs.push_back(c.evaluate(w));
    return out;
}

AdaptedReport slope_adapted(const FamilyCharpolyReport& r, const Rational& h, const PadicScalar& w1) {
    AdaptedReport out;
    const std::int64_t p = r.disc.p;
    auto count_at = [&](const PadicScalar& w) -> std::optional<std::int64_t> {
        try {
            return slope_le_h_dim(newton_polygon(specialize_fredholm(r, w), SlopeConvention::Fredholm), h);
        } catch (const AmbiguityError&) {
            return std::nullopt;
        }
    };
    const auto c0 = count_at(PadicScalar::zero(p, PadicScalar::kExactPrecision));
    const auto c1 = count_at(w1);
    out.specializations.emplace_back("w=0", c0 ? *c0 : -1);
    out.specializations.emplace_back("w=" + w1.to_string(), c1 ? *c1 : -1);
    if (c0 && c1 && *c0 != *c1) {
        out.verdict = AdaptedVerdict::NotAdapted;
        out.reason = "slope <= h counts differ at two points of the disc";
        return out;
    }
    if (!c0) {
        out.reason = "h is not separated from an uncertified slope at the centre";
        return out;
    }
    const std::int64_t d = *c0;
    const std::int64_t top = static_cast<std::int64_t>(r.fredholm.size()) - 1;
    if (d >= top) {
        out.reason = "X-truncation too small to locate the breakpoint";
        return out;
    }
    const std::int64_t rho = r.disc.radius;
    // valuation of c_d over the disc must be that of its constant term
    const WSeries& cd = r.fredholm[d];
    if (cd[0].is_zero()) {
        out.reason = "breakpoint coefficient vanishes at the centre";
        return out;
    }
    const std::int64_t vd = *cd[0].valuation();
    for (std::size_t t = 1; t < cd.order(); ++t)
        if (cd[t].valuation_bound() + static_cast<std::int64_t>(t) * rho <= vd) {
            out.reason = "breakpoint coefficient is not dominated by its constant term";
            return out;
        }
    for (std::int64_t i = 0; i <= top; ++i) {
        if (i == d) continue;
        std::int64_t lam = PadicScalar::kExactPrecision;
        for (std::size_t t = 0; t < r.fredholm[i].order(); ++t)
            lam = std::min(lam, r.fredholm[i][t].valuation_bound() + static_cast<std::int64_t>(t) * rho);
        const Rational line = Rational(vd) + h * Rational(i - d);
        const bool ok = i < d ? Rational(lam) >= line : Rational(lam) > line;
        if (!ok) {
            out.reason = "coefficient " + std::to_string(i) + " is not bounded away from the slope-h line";
            return out;
        }
    }
    out.verdict = AdaptedVerdict::Adapted;
    out.breakpoint = d;
    out.reason = "slope <= h part has constant rank " + std::to_string(d) + " over the disc";
    return out;
}

} // namespace parahoric
