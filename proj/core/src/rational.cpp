#include "parahoric/rational.hpp"
#include "parahoric/error.hpp"

#include <cctype>

namespace parahoric {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (num.size() > 1 && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw ArgumentError("malformed rational '" + text + "'");
    }
    Integer n(num), d(den);
    if (d == 0) throw ArgumentError("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

std::int64_t valuation(Integer z, std::int64_t p) {
    if (z == 0) throw ArgumentError("valuation of zero");
    std::int64_t v = 0;
    Integer pz(static_cast<long>(p));
    while (mpz_divisible_p(z.get_mpz_t(), pz.get_mpz_t())) {
        z /= pz;
        ++v;
    }
    return v;
}

std::optional<std::int64_t> valuation(const Rational& q, std::int64_t p) {
    if (q == 0) return std::nullopt;
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer ipow(const Integer& base, std::uint64_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace parahoric
