#pragma once

#include <cstdint>

#include "fmzv/rational.hpp"
#include "fmzv/residue.hpp"

namespace fmzv {

/// Seki-Bernoulli number B_j (B_1 = +1/2).
BigRational bernoulli(long j);

/// B_j / j for j >= 1.
BigRational bernoulli_hat(long j);

/// zfrak(k+l) p^l at one prime and level, represented by its residue mod p^n.
struct ZfrakTerm {
  std::uint64_t p = 0;
  int n = 0;
  int l = 0;
  Residue residue;
};

/// True iff every Bernoulli index j(p-1)-k-l+1 (1 <= j <= n-l) is positive.
bool zfrak_A_defined(std::uint64_t p, int n, int k, int l);

/// zfrak_{A_n}(k+l) p^l = sum_{j=1}^{n-l} (-1)^j binom(n-l, j) Bhat_{j(p-1)-k-l+1} p^l mod p^n,
/// for 1 <= l <= n-1.
/// Throws std::domain_error on bad arguments or a non-positive Bernoulli
/// index, SkipPrime if the exact value is not p-integral.
ZfrakTerm zfrak_A(std::uint64_t p, int n, int k, int l);

/// The defining residue B_{p^{n-1}(p-1)-k+1} / (k-1+p^{n-1}) mod p^n, n <= 2.
/// Throws CapabilityError if the Bernoulli index exceeds the feasible range,
/// SkipPrime if p divides a denominator.
Residue zfrak_direct(std::uint64_t p, int n, int k);

/// Largest Bernoulli index zfrak_direct will compute.
constexpr long kBernoulliIndexCeiling = 2000;

}  // namespace fmzv
