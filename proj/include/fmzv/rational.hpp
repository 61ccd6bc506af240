#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fmzv {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.
/// Throws std::domain_error for k < 0.
BigRational binom(long n, long k);

/// Same as binom() as an exact integer.
BigInt binom_int(long n, long k);

/// Falling factorial (n)_m = n(n-1)...(n-m+1); (n)_0 = 1.
BigInt falling(long n, long m);

BigInt factorial(long n);

/// (-1)^e as a small integer.
constexpr int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Exact rational in lowest terms built from num/den.
BigRational make_rational(long num, long den = 1);

/// "num/den" (always with a denominator).
std::string to_string(const BigRational& q);

/// "num" for integers, "num/den" otherwise.
std::string to_compact_string(const BigRational& q);

}  // namespace fmzv
