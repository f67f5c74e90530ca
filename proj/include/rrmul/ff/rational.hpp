#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rrmul {

using BigInt = mpz_class;

/// Exact rational number; always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

Rat make_rat(const BigInt& num, const BigInt& den = 1);
Rat make_rat(long num, long den = 1);

BigInt floor(const Rat& x);
BigInt ceil(const Rat& x);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rat& x);
Rat parse_rat(std::string_view text);

BigInt pow(const BigInt& base, unsigned long exp);

}  // namespace rrmul
