#include "parahoric/induction.hpp"
#include "parahoric/error.hpp"

#include <algorithm>

namespace parahoric {

NCoordinates::NCoordinates(int n) : n_(n) {
    if (n < 2) throw ArgumentError("unipotent coordinates need n >= 2");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) positions_.emplace_back(i, j);
    auto datum = RootDatum::gl(n);
    for (const auto& root : datum->positive_roots()) {
        int a = -1, b = -1;
        for (int k = 0; k < n; ++k) {
            if (root[k] == 1) a = k;
            if (root[k] == -1) b = k;
        }
        root_to_var_.push_back(index(a, b));
    }
}

std::size_t NCoordinates::index(int i, int j) const {
    auto it = std::find(positions_.begin(), positions_.end(), std::make_pair(i, j));
    if (it == positions_.end()) throw ArgumentError("no coordinate at that matrix position");
    return static_cast<std::size_t>(it - positions_.begin());
}

std::vector<std::string> NCoordinates::names(const std::string& prefix) const {
    std::vector<std::string> out;
    for (auto [i, j] : positions_) out.push_back(prefix + std::to_string(i + 1) + std::to_string(j + 1));
    return out;
}

Polynomial Derivation::apply(const Polynomial& f) const {
    Polynomial r(f.nvars());
    for (std::size_t v = 0; v < coeffs.size(); ++v) {
        if (coeffs[v].is_zero()) continue;
        r += coeffs[v] * f.derivative(v);
    }
    return r;
}

int Derivation::max_coefficient_degree() const {
    int d = 0;
    for (const auto& c : coeffs) d = std::max(d, c.total_degree());
    return d;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix unitriangular(int n, std::size_t nvars, const std::vector<Polynomial>& upper,
                         const NCoordinates& coords) {
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(nvars)));
    for (int i = 0; i < n; ++i) m[i][i] = Polynomial::constant(nvars, 1);
    for (std::size_t v = 0; v < coords.size(); ++v) {
        auto [i, j] = coords.position(v);
        m[i][j] = upper[v];
    }
    return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t nv = a[0][0].nvars();
    PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial(nv)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
            }
        }
    return c;
}

void require_unitriangular(const PolyMatrix& m) {
    const std::size_t n = m.size();
    const std::size_t nv = m[0][0].nvars();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const Polynomial expect = i == j ? Polynomial::constant(nv, 1) : Polynomial(nv);
            if (!(m[i][j] == expect)) throw ConsistencyError("product left the unipotent subgroup");
        }
}

// Drops the trailing variables of a polynomial that does not involve them.
Polynomial truncated_ring(const Polynomial& f, std::size_t nvars) {
    Polynomial r(nvars);
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = nvars; i < e.size(); ++i)
            if (e[i] != 0) throw ConsistencyError("polynomial still depends on a dropped variable");
        r.add_term(Exponents(e.begin(), e.begin() + static_cast<long>(nvars)), c);
    }
    return r;
}

bool adjacent_levi_roots(const ParabolicType& q) {
    const auto& s = q.subset();
    for (std::size_t k = 1; k < s.size(); ++k)
        if (s[k] == s[k - 1] + 1) return true;
    return false;
}

} // namespace

GLInduction::GLInduction(int n) : datum_(RootDatum::gl(n)), coords_(n) {
    const std::size_t m = coords_.size();
    // one extra variable t for the one-parameter subgroup exp(-t X_alpha)
    const std::size_t t = m;
    std::vector<Polynomial> zs;
    for (std::size_t v = 0; v < m; ++v) zs.push_back(Polynomial::variable(m + 1, v));
    const PolyMatrix u = unitriangular(n, m + 1, zs, coords_);
    for (std::size_t a = 0; a + 1 < static_cast<std::size_t>(n); ++a) {
        std::vector<Polynomial> upper(m, Polynomial(m + 1));
        upper[coords_.index(static_cast<int>(a), static_cast<int>(a) + 1)] = -Polynomial::variable(m + 1, t);
        const PolyMatrix e = unitriangular(n, m + 1, upper, coords_);
        const PolyMatrix prod = multiply(e, u);
        require_unitriangular(prod);
        Derivation field;
        for (std::size_t v = 0; v < m; ++v) {
            auto [i, j] = coords_.position(v);
            field.coeffs.push_back(truncated_ring(prod[i][j].linear_coefficient_in(t), m));
        }
        if (field.max_coefficient_degree() > 1) {
            throw ConsistencyError("left translation field raises the total degree");
        }
        fields_.push_back(std::move(field));
    }
}

Derivation GLInduction::left_translation_field(std::size_t alpha) const {
    datum_->check_index(alpha);
    return fields_[alpha];
}

Polynomial GLInduction::theta(const Weight& lambda, std::size_t alpha, const Polynomial& f) const {
    datum_->check_weight(lambda);
    const std::int64_t k = pairing(lambda.coords, datum_->coroot(alpha));
    if (k < 0) throw ArgumentError("theta needs <lambda, alpha^vee> >= 0, got " + std::to_string(k));
    Polynomial g(f);
    for (std::int64_t i = 0; i <= k && !g.is_zero(); ++i) g = fields_[alpha].apply(g);
    return g;
}

Polynomial GLInduction::from_vector(const std::vector<Exponents>& basis, const std::vector<Rational>& v) const {
    Polynomial f(nvars());
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], v.at(i));
    return f;
}

std::vector<Rational> GLInduction::to_vector(const std::vector<Exponents>& basis, const Polynomial& f) const {
    std::vector<Rational> v(basis.size(), Rational(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        v[i] = f.coefficient(basis[i]);
        if (v[i] != 0) ++found;
    }
    if (found != f.terms().size()) throw ConsistencyError("polynomial leaves the truncation");
    return v;
}

RationalMatrix GLInduction::theta_operator(const Weight& lambda, std::size_t alpha, int d) const {
    const auto b = basis(d);
    RationalMatrix m(b.size(), b.size(), Rational(0));
    for (std::size_t c = 0; c < b.size(); ++c) {
        m.set_column(c, to_vector(b, theta(lambda, alpha, Polynomial::monomial(b[c]))));
    }
    return m;
}

std::vector<Polynomial> GLInduction::generic_n_point(const ParabolicType& q) const {
    check_parabolic(q);
    const std::size_t m = nvars();
    std::vector<Polynomial> pt(m, Polynomial(2 * m));
    std::vector<bool> levi(m, false);
    for (auto r : q.restricted_positive_root_indices()) levi[coords_.variable_of_root(r)] = true;
    for (std::size_t v = 0; v < m; ++v)
        if (!levi[v]) pt[v] = Polynomial::variable(2 * m, m + v);
    return pt;
}

Polynomial GLInduction::restrict_R_n(const Polynomial& f, const ParabolicType& q,
                                     const std::vector<Polynomial>& n_point) const {
    check_parabolic(q);
    const std::size_t m = nvars();
    if (f.nvars() != m) throw DimensionError("polynomial is not on the unipotent coordinates");
    if (n_point.size() != m) throw DimensionError("n-point needs one entry per coordinate");
    const std::size_t ring = n_point.front().nvars();
    if (ring < m) throw DimensionError("n-point ring must contain the Levi coordinates");
    std::vector<bool> levi(m, false);
    for (auto r : q.restricted_positive_root_indices()) levi[coords_.variable_of_root(r)] = true;
    std::vector<Polynomial> lpart(m, Polynomial(ring)), npart(m, Polynomial(ring));
    for (std::size_t v = 0; v < m; ++v) {
        if (levi[v]) {
            if (!n_point[v].is_zero()) throw ArgumentError("n-point has a nonzero Levi coordinate");
            lpart[v] = Polynomial::variable(ring, v);
        } else {
            npart[v] = n_point[v];
        }
    }
    const int n = coords_.n();
    const PolyMatrix prod = multiply(unitriangular(n, ring, lpart, coords_), unitriangular(n, ring, npart, coords_));
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < m; ++v) {
        auto [i, j] = coords_.position(v);
        images.push_back(prod[i][j]);
    }
    return f.substitute(images);
}

void GLInduction::check_parabolic(const ParabolicType& q) const {
    if (q.datum()->name() != datum_->name() || q.datum()->rank() != datum_->rank()) {
        throw ArgumentError("parabolic belongs to a different root datum");
    }
}

bool GLInduction::in_parahoric(const Polynomial& f, const ParabolicType& q, const Weight& lambda) const {
    check_parabolic(q);
    datum_->check_weight(lambda);
    if (adjacent_levi_roots(q)) {
        throw UnsupportedError("restriction criterion is implemented for Levi blocks of size <= 2");
    }
    if (q.is_borel()) return true;
    const Polynomial r = restrict_R_n(f, q, generic_n_point(q));
    for (auto a : q.subset()) {
        const std::size_t v = coords_.index(static_cast<int>(a), static_cast<int>(a) + 1);
        const std::int64_t bound = pairing(lambda.coords, datum_->coroot(a));
        for (const auto& [e, c] : r.terms())
            if (e[v] > bound) return false;
    }
    return true;
}

RationalMatrix GLInduction::parahoric_basis(const ParabolicType& q, const Weight& lambda, int d) const {
    check_parabolic(q);
    datum_->check_weight(lambda);
    const auto b = basis(d);
    if (q.is_borel()) return identity_matrix(b.size());
    if (adjacent_levi_roots(q)) {
        throw UnsupportedError("restriction criterion is implemented for Levi blocks of size <= 2");
    }
    const auto pt = generic_n_point(q);
    std::vector<std::pair<std::size_t, std::int64_t>> bounds;
    for (auto a : q.subset()) {
        bounds.emplace_back(coords_.index(static_cast<int>(a), static_cast<int>(a) + 1),
                            pairing(lambda.coords, datum_->coroot(a)));
    }
    // linear conditions: every forbidden monomial of R_n(f) has coefficient 0
    std::map<Exponents, std::vector<std::pair<std::size_t, Rational>>> forbidden;
    for (std::size_t c = 0; c < b.size(); ++c) {
        const Polynomial r = restrict_R_n(Polynomial::monomial(b[c]), q, pt);
        for (const auto& [e, coef] : r.terms()) {
            bool bad = false;
            for (auto [v, bound] : bounds)
                if (e[v] > bound) bad = true;
            if (bad) forbidden[e].emplace_back(c, coef);
        }
    }
    RationalMatrix cond(forbidden.size(), b.size(), Rational(0));
    std::size_t row = 0;
    for (const auto& [e, entries] : forbidden) {
        for (const auto& [c, coef] : entries) cond(row, c) += coef;
        ++row;
    }
    if (forbidden.empty()) return identity_matrix(b.size());
    return nullspace(cond);
}

std::size_t GLInduction::added_root(const ParabolicType& p, const ParabolicType& q) const {
    check_parabolic(p);
    check_parabolic(q);
    if (!p.subset_of(q) || q.subset().size() != p.subset().size() + 1) {
        throw ArgumentError("Delta_Q must be Delta_P plus exactly one simple root");
    }
    for (auto a : q.subset())
        if (!p.contains(a)) return a;
    throw ArgumentError("Delta_Q must be Delta_P plus exactly one simple root");
}

std::int64_t GLInduction::bgg_threshold(const ParabolicType& p, const ParabolicType& q, const Weight& lambda) const {
    const std::size_t beta = added_root(p, q);
    return pairing(lambda.coords, datum_->coroot(beta)) + 1 + fields_[beta].max_coefficient_degree();
}

BggReport GLInduction::bgg_check(const ParabolicType& p, const ParabolicType& q, const Weight& lambda, int d) const {
    const std::size_t beta = added_root(p, q);
    datum_->check_weight(lambda);
    if (!datum_->is_dominant(lambda)) throw ArgumentError("BGG check needs a dominant weight");
    if (d < 0) throw ArgumentError("degree cap must be nonnegative");
    BggReport report;
    report.threshold = bgg_threshold(p, q, lambda);
    report.above_threshold = d >= report.threshold;
    const RationalMatrix bp = parahoric_basis(p, lambda, d);
    const RationalMatrix theta = theta_operator(lambda, beta, d);
    const RationalMatrix kernel = bp * nullspace(theta * bp);
    const RationalMatrix bq = parahoric_basis(q, lambda, d);
    report.dim_kernel = kernel.cols();
    report.dim_RQ = bq.cols();
    report.pass = report.dim_kernel == report.dim_RQ &&
                  (report.dim_kernel == 0 || rank(hstack(kernel, bq)) == report.dim_kernel);
    return report;
}

RationalMatrix GLInduction::bgg_kernel(const ParabolicType& p, const ParabolicType& q, const Weight& lambda,
                                       int d) const {
    const BggReport report = bgg_check(p, q, lambda, d);
    if (!report.pass) {
        throw ConsistencyError("theta kernel (dim " + std::to_string(report.dim_kernel) +
                               ") differs from the restriction-criterion space (dim " +
                               std::to_string(report.dim_RQ) + ")");
    }
    return parahoric_basis(q, lambda, d);
}

Polynomial GLInduction::star_action_torus(const TorusElement& t, const Polynomial& f) const {
    if (t.datum()->name() != datum_->name()) throw ArgumentError("torus element of a different group");
    if (!in_T_plus(t)) throw PreconditionError("star action on truncations needs t in T+");
    const std::size_t m = nvars();
    std::vector<Polynomial> images;
    const Integer p(static_cast<long>(t.prime()));
    for (std::size_t v = 0; v < m; ++v) {
        auto [i, j] = coords_.position(v);
        const std::int64_t e = -(t.mu().coords[i] - t.mu().coords[j]);
        images.push_back(Polynomial::variable(m, v) * Rational(ipow(p, static_cast<std::uint64_t>(e))));
    }
    return f.substitute(images);
}

IntertwiningResult GLInduction::intertwining_check(const TorusElement& t, std::size_t alpha, const Weight& lambda,
                                                   const Polynomial& f) const {
    const std::int64_t m = pairing(lambda.coords, datum_->coroot(alpha)) + 1;
    const std::int64_t e = -m * t.valuation(alpha);
    const Integer p(static_cast<long>(t.prime()));
    const Rational factor = e >= 0 ? Rational(ipow(p, static_cast<std::uint64_t>(e)))
                                   : Rational(1) / Rational(ipow(p, static_cast<std::uint64_t>(-e)));
    const Polynomial lhs = theta(lambda, alpha, star_action_torus(t, f));
    const Polynomial rhs = star_action_torus(t, theta(lambda, alpha, f)) * factor;
    IntertwiningResult res;
    const Polynomial diff = lhs - rhs;
    if (!diff.is_zero()) {
        res.pass = false;
        res.first_difference = diff.terms().begin()->first;
    }
    return res;
}

bool GLInduction::theta_preserves_parahoric(const ParabolicType& q, std::size_t alpha, const Weight& lambda,
                                            int d) const {
    check_parabolic(q);
    datum_->check_index(alpha);
    if (q.contains(alpha)) {
        throw PreconditionError("alpha lies in Delta_Q, where theta annihilates the parahoric module");
    }
    const Weight target = datum_->weyl_star(alpha, lambda);
    const auto b = basis(d);
    const RationalMatrix aq = parahoric_basis(q, lambda, d);
    for (std::size_t c = 0; c < aq.cols(); ++c) {
        const Polynomial image = theta(lambda, alpha, from_vector(b, aq.column(c)));
        if (!in_parahoric(image, q, target)) return false;
    }
    return true;
}

} // namespace parahoric
