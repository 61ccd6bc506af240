#include "fmzv/rational.hpp"

#include <stdexcept>

namespace fmzv {

BigInt binom_int(long n, long k) {
  if (k < 0) throw std::domain_error("binom: negative lower argument");
  if (n >= 0) {
    if (n < k) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // binom(n, k) = (-1)^k binom(k - n - 1, k) for n < 0
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : BigInt(-r);
}

BigRational binom(long n, long k) { return BigRational(binom_int(n, k)); }

BigInt falling(long n, long m) {
  if (m < 0) throw std::domain_error("falling: negative length");
  BigInt r = 1;
  for (long i = 0; i < m; ++i) r *= (n - i);
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigRational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_compact_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return to_string(q);
}

}  // namespace fmzv
