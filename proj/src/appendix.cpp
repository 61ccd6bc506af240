#include "fmzv/appendix.hpp"

#include <stdexcept>

namespace fmzv {

namespace {

BigRational sgn(long e) { return BigRational(sign_pow(e)); }

std::string csv_field(const BigRational& q) { return to_string(q); }

}  // namespace

CDecomposition compute_C_bruteforce(int a, int b) {
  CDecomposition d;
  d.a = a;
  d.b = b;
  const int w = a + b + 3;
  for (int l = 0; l <= b - 1; ++l) {
    const int m = b - 1 - l;
    for (int r = 0; r <= a; ++r) {
      const int s = a - r;
      const BigRational prod = binom(r + l + 1, r) * binom(s + m + 1, s);
      d.I += sgn(a + 1) * sgn(s + m) * prod * binom(w, s + m + 2);
      d.II += sgn(a + 1) * prod;
    }
  }
  for (int r = 0; r <= a; ++r) {
    const int s = a - r;
    d.III += 2 * sgn(a) * sgn(s) * binom(r + b + 1, r) * binom(w, s + 1);
    d.IV += 2 * sgn(a + 1) * binom(r + b + 1, r);
  }
  for (int m = 0; m <= a - 1; ++m) {
    const int n = a - 1 - m;
    for (int r = 0; r <= n; ++r) {
      const int s = n - r;
      const BigRational prod = binom(r + b + 1, r) * binom(s + m + 1, s);
      d.V += sgn(n) * sgn(s + m + 1) * prod * binom(w, s + m + 2);
      d.VI += sgn(n + 1) * prod;
    }
  }
  d.C = d.I + d.II + d.III + d.IV + d.V + d.VI;
  return d;
}

BigRational compute_C_direct(int a, int b) {
  const int w = a + b + 3;
  BigRational c = 0;
  for (int l = 0; l <= b - 1; ++l) {
    const int m = b - 1 - l;
    for (int r = 0; r <= a; ++r) {
      const int s = a - r;
      c += sgn(a) * binom(r + l + 1, r) * binom(s + m + 1, s) * sgn(s + m + 1) *
           (binom(w, s + m + 2) + sgn(s + m));
    }
  }
  for (int r = 0; r <= a; ++r) {
    const int s = a - r;
    c += 2 * sgn(a) * binom(r + b + 1, r) * sgn(s) * (binom(w, s + 1) + sgn(s + 1));
  }
  for (int m = 0; m <= a - 1; ++m) {
    const int n = a - 1 - m;
    for (int r = 0; r <= n; ++r) {
      const int s = n - r;
      c += sgn(n) * binom(r + b + 1, r) * binom(s + m + 1, s) * sgn(s + m + 1) *
           (binom(w, s + m + 2) + sgn(s + m));
    }
  }
  return c;
}

CDecomposition closed_forms(int a, int b) {
  CDecomposition d;
  d.a = a;
  d.b = b;
  d.I = 0;
  d.II = sgn(a + 1) * b * binom(a + b + 2, a);
  d.III = 2 + 2 * sgn(a) * binom(a + b + 2, a + 1);
  d.IV = 2 * sgn(a + 1) * binom(a + b + 2, a);
  d.V = sgn(a) * a * binom(a + b + 2, a + 1) + sgn(a) * binom(a + b + 1, a) - 1;
  d.VI = a >= 1 ? sgn(a) * binom(a + b + 1, a - 1) : BigRational(0);
  d.C = d.I + d.II + d.III + d.IV + d.V + d.VI;
  return d;
}

BigRational expected_C(int a, int b) { return 1 + sgn(a) * binom(a + b + 3, b + 2); }

std::pair<BigRational, BigRational> pfd_identity(int n, const BigRational& x) {
  if (n < 0) throw std::domain_error("pfd_identity: n must be non-negative");
  BigRational denom = 1;
  for (int k = 0; k <= n; ++k) {
    if (x + k == 0) throw std::domain_error("pfd_identity: x is a pole");
    denom *= x + k;
  }
  BigRational lhs = 0;
  for (int k = 0; k <= n; ++k) lhs += sgn(k) * binom(n, k) / (x + k);
  return {lhs, BigRational(factorial(n)) / denom};
}

BigRational b_coefficient(int k, int r, int i) {
  return binom(k - 1, r) +
         sgn(r - i) * ((k - r) * binom(k, i - 1) + binom(k - 1, i - 1) + sgn(r - 1) * binom(k - 1, r - i));
}

BigRational b_star_coefficient(int k, int r, int i) {
  return binom(k - 1, r) +
         sgn(i - 1) * ((k - r) * binom(k, r - i) + binom(k - 1, r - i) + sgn(r - 1) * binom(k - 1, i - 1));
}

InductionTerms induction_terms(int k, int r, int i) {
  if (!(2 <= i + 1 && i + 1 <= r && r <= k - 1)) throw std::domain_error("induction_terms: need 2 <= i+1 <= r <= k-1");
  InductionTerms t;
  t.first = (r - i) * binom(k - 1, r) + i * binom(k - 1, r) - (k - r) * binom(k - 1, r - 1);
  t.second = (r - i) * (k - r) * binom(k, i - 1) - i * (k - r) * binom(k, i) + (k - r) * (k - r + 1) * binom(k, i - 1);
  t.third = (r - i) * binom(k - 1, i - 1) - i * binom(k - 1, i) + (k - r) * binom(k - 1, i - 1);
  t.fourth = (r - i) * binom(k - 1, r - i) - i * binom(k - 1, r - i - 1) - (k - r) * binom(k - 1, r - i - 1);
  t.total = (r - i) * b_coefficient(k, r, i) + i * b_coefficient(k, r, i + 1) - (k - r) * b_coefficient(k, r - 1, i);
  t.total_star = (r - i) * b_star_coefficient(k, r, i) + i * b_star_coefficient(k, r, i + 1) -
                 (k - r) * b_star_coefficient(k, r - 1, i);
  return t;
}

std::size_t write_appendix_csv(std::ostream& os, int amax) {
  os << "a,b,I,II,III,IV,V,VI,C_bruteforce,C_closed,C_expected,status\n";
  std::size_t rows = 0;
  for (int a = 0; a <= amax; ++a)
    for (int b = 0; b <= amax; ++b) {
      if ((a + b) % 2 != 0) continue;
      const CDecomposition brute = compute_C_bruteforce(a, b);
      const CDecomposition closed = closed_forms(a, b);
      const BigRational expected = expected_C(a, b);
      const bool ok = brute.C == closed.C && closed.C == expected && compute_C_direct(a, b) == brute.C &&
                      brute.I == closed.I && brute.II == closed.II && brute.III == closed.III &&
                      brute.IV == closed.IV && brute.V == closed.V && brute.VI == closed.VI;
      os << a << ',' << b;
      for (const BigRational* q : {&brute.I, &brute.II, &brute.III, &brute.IV, &brute.V, &brute.VI})
        os << ',' << csv_field(*q);
      os << ',' << csv_field(brute.C) << ',' << csv_field(closed.C) << ',' << csv_field(expected) << ','
         << (ok ? "pass" : "fail") << '\n';
      ++rows;
    }
  return rows;
}

}  // namespace fmzv
