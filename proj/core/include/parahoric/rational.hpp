#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parahoric {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a", "-a" or "a/b".  Throws ArgumentError on malformed input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// p-adic valuation of a nonzero rational; nullopt for zero.
std::optional<std::int64_t> valuation(const Rational& q, std::int64_t p);
std::int64_t valuation(Integer z, std::int64_t p);

Integer binomial(std::int64_t n, std::int64_t k);
Integer ipow(const Integer& base, std::uint64_t e);
bool is_prime(std::int64_t n);

} // namespace parahoric
