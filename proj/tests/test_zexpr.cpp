#include <doctest.h>

#include "fmzv/bernoulli.hpp"
#include "fmzv/errors.hpp"
#include "fmzv/mhs.hpp"
#include "fmzv/zexpr.hpp"

using namespace fmzv;

namespace {

// (-1)^k sum_{l=1}^{n-1} binom(k+l-1, l) zfrak(k+l) x^l
ZExpr depth_one(int k, int n) {
  ZExpr out;
  for (int l = 1; l < n; ++l) out += binom(k + l - 1, l) * ZExpr::zfrak(k + l) * ZExpr::x(l);
  return k % 2 == 0 ? out : -out;
}

}  // namespace

TEST_CASE("algebra") {
  const ZExpr a = ZExpr::zfrak(5) * ZExpr::zfrak(3) * ZExpr::x(2);
  const ZExpr b = ZExpr::x() * ZExpr::zfrak(3) * ZExpr::x() * ZExpr::zfrak(5);
  CHECK(a == b);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms().begin()->first.z == std::vector<int>{3, 5});
  CHECK(a.terms().begin()->first.x_power == 2);

  ZExpr s = ZExpr::zfrak(3) + ZExpr::zfrak(3);
  CHECK(s == ZExpr(2) * ZExpr::zfrak(3));
  s -= ZExpr(2) * ZExpr::zfrak(3);
  CHECK(s.is_zero());
  CHECK((ZExpr::x() - ZExpr::x()).is_zero());
  CHECK(ZExpr(0).is_zero());

  const ZExpr p = ZExpr(1) + ZExpr::x() + ZExpr::x(2) + ZExpr::x(3);
  CHECK(p.truncated(2) == ZExpr(1) + ZExpr::x());
  CHECK((p * p).truncated(2) == ZExpr(1) + ZExpr(2) * ZExpr::x());
}

TEST_CASE("rendering") {
  CHECK(to_string(make_rational(-9, 2) * ZExpr::zfrak(5) * ZExpr::x()) == "-9/2*Z(5)*x");
  CHECK(to_string(ZExpr{}) == "0");
  CHECK(to_string(ZExpr(3)) == "3");
  CHECK(to_string(ZExpr::zfrak(3) * ZExpr::zfrak(3) * ZExpr::x(2) - ZExpr::zfrak(5) * ZExpr::x()) ==
        "-Z(5)*x + Z(3)*Z(3)*x^2");
}

TEST_CASE("evaluation at a prime") {
  const Modulus m(7, 2);
  CHECK(evaluate_at(ZExpr::x(), m).value() == 7);
  CHECK(evaluate_at(ZExpr::x(2), m).is_zero());
  CHECK(evaluate_at(ZExpr(make_rational(1, 2)), m).value() == 25);
  CHECK(evaluate_at(ZExpr::zfrak(3), Modulus(7, 1)) == Residue::from_rational(Modulus(7, 1), bernoulli(4) / 3));
  CHECK(evaluate_at(ZExpr::zfrak(3) * ZExpr::x(), m) == zfrak_A(7, 2, 2, 1).residue);

  CHECK_THROWS_AS(evaluate_at(ZExpr::zfrak(3), m), CapabilityError);
  CHECK_THROWS_AS(evaluate_at(ZExpr::zfrak(3) * ZExpr::zfrak(5) * ZExpr::x(), Modulus(11, 3)), CapabilityError);
  CHECK_THROWS_AS(evaluate_at(ZExpr::zfrak(5) * ZExpr::x(), Modulus(5, 2)), SkipPrime);
  CHECK_THROWS_AS(evaluate_at(ZExpr(make_rational(1, 7)), m), SkipPrime);

  const AnValue v = evaluate_A(ZExpr(make_rational(1, 7)), primes_between(5, 13), 2);
  CHECK(v.skipped().count(7) == 1);
  CHECK(v.entries().size() == 3);
}

TEST_CASE("depth-one values through the Bernoulli reduction") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 8; ++k) {
      const PrimeWindow w = primes_between(static_cast<std::uint64_t>(n + k + 1), 97);
      const AnValue lhs = zetaA(Index{k}, w, n), rhs = evaluate_A(depth_one(k, n), w, n);
      const AnComparison c = compare(lhs, rhs);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(c.equal());
      CHECK(c.compared.size() == w.size());
    }
}
