#include <doctest.h>

#include <sstream>

#include "fmzv/appendix.hpp"

using namespace fmzv;

TEST_CASE("small cases of C") {
  const CDecomposition z = compute_C_bruteforce(0, 0);
  CHECK(z.I == 0);
  CHECK(z.II == 0);
  CHECK(z.III == 6);
  CHECK(z.IV == -2);
  CHECK(z.V == 0);
  CHECK(z.VI == 0);
  CHECK(z.C == 4);
  CHECK(compute_C_bruteforce(2, 0).C == 11);
  CHECK(compute_C_bruteforce(1, 1).C == -9);
  CHECK(closed_forms(0, 0).IV == -2);
  CHECK(closed_forms(2, 2).III == 42);
  CHECK(compute_C_bruteforce(2, 2).III == 42);
  CHECK(closed_forms(1, 3).I == 0);
  CHECK(compute_C_bruteforce(1, 3).I == 0);
  CHECK(expected_C(0, 0) == 4);
  CHECK(expected_C(1, 1) == -9);
}

TEST_CASE("brute force, closed forms and the value of C") {
  for (int a = 0; a <= 30; ++a)
    for (int b = 0; b <= 30; ++b) {
      const CDecomposition brute = compute_C_bruteforce(a, b);
      CHECK(brute.C == brute.I + brute.II + brute.III + brute.IV + brute.V + brute.VI);
      CHECK(brute.C == compute_C_direct(a, b));
      if ((a + b) % 2 != 0) continue;
      const CDecomposition closed = closed_forms(a, b);
      CHECK(brute.I == 0);
      CHECK(brute.II == closed.II);
      CHECK(brute.III == closed.III);
      CHECK(brute.IV == closed.IV);
      CHECK(brute.V == closed.V);
      CHECK(brute.VI == closed.VI);
      CHECK(closed.C == expected_C(a, b));
      CHECK(brute.C == expected_C(a, b));
    }
}

TEST_CASE("odd parity leaves I unconstrained") {
  // the vanishing of I really needs a+b even
  std::size_t nonzero = 0;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      if ((a + b) % 2 == 1 && compute_C_bruteforce(a, b).I != 0) ++nonzero;
  CHECK(nonzero > 0);
}

TEST_CASE("partial fractions") {
  CHECK(pfd_identity(0, 5).first == make_rational(1, 5));
  CHECK(pfd_identity(0, 5).second == make_rational(1, 5));
  CHECK(pfd_identity(2, 1).first == make_rational(1, 3));
  CHECK(pfd_identity(2, 1).second == make_rational(1, 3));
  for (int n = 0; n <= 12; ++n)
    for (const BigRational& x : {BigRational(1), make_rational(1, 2), make_rational(-7, 3), BigRational(11), make_rational(-1, 2)}) {
      const auto [lhs, rhs] = pfd_identity(n, x);
      CHECK(lhs == rhs);
    }
  CHECK_THROWS_AS(pfd_identity(3, BigRational(-2)), std::domain_error);
  CHECK_THROWS_AS(pfd_identity(3, BigRational(0)), std::domain_error);
  CHECK_NOTHROW(pfd_identity(3, BigRational(-4)));
}

TEST_CASE("b coefficients") {
  // r = k-1: the single index ({1}^{i-1},2,{1}^{k-1-i}), whose coefficient is C
  for (int k = 4; k <= 20; k += 2)
    for (int i = 1; i <= k - 1; ++i) {
      CHECK(b_coefficient(k, k - 1, i) == expected_C(i - 1, k - 1 - i));
      CHECK(b_star_coefficient(k, k - 1, i) == 1 + (i % 2 == 1 ? 1 : -1) * binom(k + 1, i + 1));
    }
  for (int k = 3; k <= 16; ++k)
    for (int r = 2; r <= k - 1; ++r)
      for (int i = 1; i + 1 <= r; ++i) {
        const InductionTerms t = induction_terms(k, r, i);
        CHECK(t.first == 0);
        CHECK(t.second == 0);
        CHECK(t.third == 0);
        CHECK(t.fourth == 0);
        CHECK(t.total == 0);
        CHECK(t.total_star == 0);
      }
  CHECK_THROWS_AS(induction_terms(6, 6, 1), std::domain_error);
  CHECK_THROWS_AS(induction_terms(6, 3, 3), std::domain_error);
}

TEST_CASE("CSV table") {
  std::ostringstream os;
  const std::size_t rows = write_appendix_csv(os, 10);
  CHECK(rows == 61);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "a,b,I,II,III,IV,V,VI,C_bruteforce,C_closed,C_expected,status");
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++count;
    CHECK(line.substr(line.rfind(',') + 1) == "pass");
  }
  CHECK(count == rows);
  std::ostringstream first;
  write_appendix_csv(first, 0);
  CHECK(first.str().find("\n0,0,0/1,0/1,6/1,-2/1,0/1,0/1,4/1,4/1,4/1,pass\n") != std::string::npos);
  std::ostringstream none;
  CHECK(write_appendix_csv(none, -1) == 0);
}
