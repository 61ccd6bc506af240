#include "fmzv/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

// B_{2k} for k = 0..size-1, grown on demand from tangent numbers.
class EvenBernoulliTable {
 public:
  BigRational get(long k) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(k) < table_.size()) return table_[static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mutex_);
    if (static_cast<std::size_t>(k) >= table_.size()) rebuild(std::max<long>(k + 1, 2 * static_cast<long>(table_.size())));
    return table_[static_cast<std::size_t>(k)];
  }

 private:
  void rebuild(long count) {
    // tangent numbers T_1..T_m
    const long m = count - 1;
    std::vector<BigInt> t(static_cast<std::size_t>(m) + 1, 0);
    if (m >= 1) t[1] = 1;
    for (long k = 2; k <= m; ++k) t[k] = (k - 1) * t[k - 1];
    for (long k = 2; k <= m; ++k)
      for (long j = k; j <= m; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];

    std::vector<BigRational> b(static_cast<std::size_t>(count));
    b[0] = 1;
    for (long k = 1; k <= m; ++k) {
      BigInt four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
      BigRational v(2 * k * t[k], four_k * (four_k - 1));
      v.canonicalize();
      b[k] = (k % 2 == 1) ? v : BigRational(-v);
    }
    table_ = std::move(b);
  }

  std::shared_mutex mutex_;
  std::vector<BigRational> table_;
};

EvenBernoulliTable& table() {
  static EvenBernoulliTable t;
  return t;
}

BigInt pow_u(std::uint64_t p, int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

BigRational bernoulli(long j) {
  if (j < 0) throw std::domain_error("bernoulli: negative index");
  if (j == 1) return BigRational(1, 2);
  if (j % 2 == 1) return 0;
  return table().get(j / 2);
}

BigRational bernoulli_hat(long j) {
  if (j < 1) throw std::domain_error("bernoulli_hat: index must be positive");
  BigRational r = bernoulli(j) / BigRational(j);
  r.canonicalize();
  return r;
}

bool zfrak_A_defined(std::uint64_t p, int n, int k, int l) {
  if (k < 1 || l < 1 || l > n - 1) return false;
  // smallest index is at j = 1
  return static_cast<long>(p) - 1 - k - l + 1 >= 1;
}

ZfrakTerm zfrak_A(std::uint64_t p, int n, int k, int l) {
  if (k < 1) throw std::domain_error("zfrak_A: k must be positive");
  if (l < 1 || l > n - 1) throw std::domain_error("zfrak_A: need 1 <= l <= n-1");
  if (!zfrak_A_defined(p, n, k, l)) throw std::domain_error("zfrak_A: Bernoulli index not positive");
  const Modulus mod(p, n);
  BigRational sum = 0;
  for (int j = 1; j <= n - l; ++j) {
    const long idx = static_cast<long>(j) * (static_cast<long>(p) - 1) - k - l + 1;
    sum += BigRational(sign_pow(j)) * binom(n - l, j) * bernoulli_hat(idx);
  }
  sum *= BigRational(pow_u(p, l));
  sum.canonicalize();
  return ZfrakTerm{p, n, l, Residue::from_rational(mod, sum)};
}

Residue zfrak_direct(std::uint64_t p, int n, int k) {
  if (n < 1 || n > 2) throw std::domain_error("zfrak_direct: level must be 1 or 2");
  if (k < 1) throw std::domain_error("zfrak_direct: k must be positive");
  const Modulus mod(p, n);
  const BigInt pn1 = pow_u(p, n - 1);
  const BigInt phi = pn1 * static_cast<unsigned long>(p - 1);
  const BigInt idx = phi - k + 1;
  if (idx < 0) throw std::domain_error("zfrak_direct: negative Bernoulli index");
  if (idx > kBernoulliIndexCeiling)
    throw CapabilityError("zfrak_direct: Bernoulli index " + idx.get_str() + " beyond ceiling");
  BigRational v = bernoulli(idx.get_si()) / BigRational(BigInt(k - 1) + pn1);
  v.canonicalize();
  return Residue::from_rational(mod, v);
}

}  // namespace fmzv
