#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dessinkit {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in canonical form. Throws DivisionByZero for den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Parses an integer or `num/den` with optional sign. No decimals.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// `num/den` in lowest terms, or just `num` when den == 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// 2-adic valuation; the argument must be nonzero.
unsigned long v2(const Integer& value);
// v2(num) - v2(den) for nonzero rationals.
long v2(const Rational& value);

// Exact integer k-th root when it exists (value >= 0).
std::optional<Integer> exact_root(const Integer& value, unsigned long k);

Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, unsigned long exp);

// Nonnegative residue of value modulo 2^bits.
Integer mod_pow2(const Integer& value, unsigned long bits);

}  // namespace dessinkit
