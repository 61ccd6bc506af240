#include <doctest.h>

#include "fmzv/bernoulli.hpp"
#include "fmzv/errors.hpp"

using namespace fmzv;

namespace {

// Akiyama-Tanigawa; produces the B_1 = +1/2 convention
std::vector<BigRational> akiyama_tanigawa(int upto) {
  std::vector<BigRational> a(static_cast<std::size_t>(upto + 1)), out;
  for (int m = 0; m <= upto; ++m) {
    a[static_cast<std::size_t>(m)] = BigRational(1, m + 1);
    a[static_cast<std::size_t>(m)].canonicalize();
    for (int j = m; j >= 1; --j) {
      auto& aj = a[static_cast<std::size_t>(j - 1)];
      aj = j * (aj - a[static_cast<std::size_t>(j)]);
    }
    out.push_back(a[0]);
  }
  return out;
}

bool prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("small Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(1, 2));
  CHECK(bernoulli(2) == make_rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  CHECK(bernoulli_hat(4) == make_rational(-1, 120));
}

TEST_CASE("agrees with Akiyama-Tanigawa") {
  const auto at = akiyama_tanigawa(80);
  for (int j = 0; j <= 80; ++j) CHECK(bernoulli(j) == at[static_cast<std::size_t>(j)]);
}

TEST_CASE("odd Bernoulli numbers vanish") {
  for (int j = 3; j <= 201; j += 2) CHECK(bernoulli(j) == 0);
}

TEST_CASE("von Staudt-Clausen denominators") {
  for (int m = 1; 2 * m <= 60; ++m) {
    BigInt expect = 1;
    for (int q = 2; q <= 2 * m + 1; ++q)
      if (prime(q) && (2 * m) % (q - 1) == 0) expect *= q;
    CHECK(bernoulli(2 * m).get_den() == expect);
  }
}

TEST_CASE("Faulhaber power sums pin B_1 = +1/2") {
  for (int e = 0; e <= 10; ++e)
    for (int N = 1; N <= 50; ++N) {
      BigInt direct = 0;
      for (int m = 1; m <= N; ++m) {
        BigInt t = 1;
        for (int i = 0; i < e; ++i) t *= m;
        direct += t;
      }
      BigRational poly = 0;
      for (int j = 0; j <= e; ++j) {
        BigRational t = binom(e + 1, j) * bernoulli(j);
        for (int i = 0; i < e + 1 - j; ++i) t *= N;
        poly += t;
      }
      poly /= e + 1;
      CHECK(poly == BigRational(direct));
    }
}

TEST_CASE("zfrak via the Bernoulli reduction") {
  // k = 1 at level 2: odd Bernoulli index, so zero (Wolstenholme)
  for (std::uint64_t p : primes_between(5, 97)) CHECK(zfrak_A(p, 2, 1, 1).residue.is_zero());

  // zfrak(3) p at p = 7: (B_4 / 3) 7 mod 49
  const Modulus m49(7, 2);
  const ZfrakTerm t = zfrak_A(7, 2, 2, 1);
  CHECK(t.l == 1);
  CHECK(t.residue == Residue::from_rational(m49, bernoulli(4) / 3 * 7));
  CHECK(t.residue.valuation() >= 1);

  for (std::uint64_t p : primes_between(7, 61))
    for (int k = 1; k <= 6; ++k)
      for (int n = 2; n <= 3; ++n)
        for (int l = 1; l < n; ++l)
          if (zfrak_A_defined(p, n, k, l)) CHECK(zfrak_A(p, n, k, l).residue.valuation() >= l);

  CHECK_THROWS_AS(zfrak_A(7, 2, 2, 0), std::domain_error);
  CHECK_THROWS_AS(zfrak_A(7, 2, 2, 2), std::domain_error);
  CHECK_FALSE(zfrak_A_defined(7, 2, 6, 1));
  CHECK_THROWS_AS(zfrak_A(7, 2, 6, 1), std::domain_error);
}

TEST_CASE("zfrak from its definition") {
  // level 1: B_{p-k} / k
  CHECK(zfrak_direct(7, 1, 3) == Residue::from_rational(Modulus(7, 1), bernoulli(4) / 3));
  // level 2, p = 7, k = 2: B_41 = 0
  CHECK(zfrak_direct(7, 2, 2).is_zero());
  // level 2, p = 5, k = 3: B_18 / 7 mod 25
  CHECK(zfrak_direct(5, 2, 3) == Residue::from_rational(Modulus(5, 2), bernoulli(18) / 7));
}

TEST_CASE("the two routes agree") {
  std::size_t compared = 0;
  for (std::uint64_t p : primes_between(7, 31))
    for (int k = 2; k <= 8; ++k) {
      // p = k + 1 lands on B_1, outside the Kummer range
      if (p < static_cast<std::uint64_t>(k + 2) || !zfrak_A_defined(p, 2, k - 1, 1)) continue;
      const Modulus m(p, 2);
      try {
        const Residue direct = zfrak_direct(p, 2, k) * Residue(m, p);
        CHECK(direct == zfrak_A(p, 2, k - 1, 1).residue);
        ++compared;
      } catch (const SkipPrime&) {
      }
    }
  CHECK(compared > 30);
}
