#include "parahoric/polynomial.hpp"
#include "parahoric/error.hpp"

#include <algorithm>
#include <numeric>

namespace parahoric {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw ArgumentError("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw DimensionError("monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.nvars_ != nvars_) throw DimensionError("adding polynomials from different rings");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw DimensionError("multiplying polynomials from different rings");
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= nvars_) throw ArgumentError("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f(e);
        --f[var];
        r.add_term(f, c * e[var]);
    }
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_) throw DimensionError("substitution needs one image per variable");
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    // cache powers of each image
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(Polynomial::constant(target, 1));
    Polynomial r(target);
    if (nvars_ == 0) {
        for (const auto& [e, c] : terms_) r = Polynomial::constant(0, c);
        return r;
    }
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
            if (e[i] > 0) term = term * powers[i][e[i]];
        }
        r += term;
    }
    return r;
}

Polynomial Polynomial::extended(std::size_t nvars) const {
    if (nvars < nvars_) throw DimensionError("cannot shrink a polynomial ring");
    Polynomial r(nvars);
    for (const auto& [e, c] : terms_) {
        Exponents f(e);
        f.resize(nvars, 0);
        r.add_term(f, c);
    }
    return r;
}

Polynomial Polynomial::linear_coefficient_in(std::size_t t) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(t) != 1) continue;
        Exponents f(e);
        f[t] = 0;
        r.add_term(f, c);
    }
    return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coef = c.get_str();
        std::string piece;
        if (mono.empty()) {
            piece = coef;
        } else if (c == 1) {
            piece = mono;
        } else if (c == -1) {
            piece = "-" + mono;
        } else {
            piece = coef + "*" + mono;
        }
        if (!out.empty()) out += piece[0] == '-' ? " - " + piece.substr(1) : " + " + piece;
        else out = piece;
    }
    return out;
}

std::vector<Exponents> monomials_up_to(std::size_t n, int d) {
    std::vector<Exponents> out;
    Exponents e(n, 0);
    // enumerate each total degree in turn
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    for (int deg = 0; deg <= d; ++deg) {
        if (n == 0) {
            if (deg == 0) out.push_back(e);
            continue;
        }
        rec(0, deg);
    }
    return out;
}

} // namespace parahoric
