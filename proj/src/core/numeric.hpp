#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace homcert {

/// Exact nonnegative counts.
using BigCount = mpz_class;
/// Exact rationals, always kept in canonical lowest terms.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign) into canonical form.
/// Throws Error(invalid_input) on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const BigCount& value);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

BigCount pow(const BigCount& base, std::uint64_t exponent);
Rational pow(const Rational& base, std::uint64_t exponent);

BigCount lcm(const BigCount& a, const BigCount& b);

}  // namespace homcert
