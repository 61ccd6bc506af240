#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fmzv/rational.hpp"
#include "fmzv/residue.hpp"

namespace fmzv {

/// x^e zfrak(m_1)...zfrak(m_s), arguments kept sorted.
struct ZMonomial {
  int x_power = 0;
  std::vector<int> z;

  auto operator<=>(const ZMonomial&) const = default;
  bool operator==(const ZMonomial&) const = default;
};

/// A formal polynomial in the symbols zfrak(k) and x with rational
/// coefficients.
class ZExpr {
 public:
  using Terms = std::map<ZMonomial, BigRational>;

  ZExpr() = default;
  ZExpr(const BigRational& c);  // NOLINT: constants convert implicitly

  static ZExpr zfrak(int k);
  static ZExpr x(int e = 1);

  void add_term(ZMonomial m, const BigRational& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Drop every monomial with x-degree >= n.
  ZExpr truncated(int n) const;

  ZExpr& operator+=(const ZExpr& rhs);
  ZExpr& operator-=(const ZExpr& rhs);
  ZExpr& operator*=(const ZExpr& rhs);

  bool operator==(const ZExpr& rhs) const { return terms_ == rhs.terms_; }

 private:
  Terms terms_;
};

ZExpr operator+(ZExpr a, const ZExpr& b);
ZExpr operator-(ZExpr a, const ZExpr& b);
ZExpr operator*(ZExpr a, const ZExpr& b);
ZExpr operator-(ZExpr a);

/// Lets unevaluated GMP rational expressions scale a ZExpr directly.
template <class T, class U>
ZExpr operator*(const __gmp_expr<T, U>& c, const ZExpr& e) {
  return ZExpr(BigRational(c)) * e;
}

/// "-9/2*Z(5)*x"
std::string to_string(const ZExpr& e);

/// Value at one prime with x = p: each zfrak(m) carries one power of x
/// through the Bernoulli reduction, the last factor absorbs the remaining
/// powers. Monomials with no x at level 1 use the defining residue.
/// Throws SkipPrime for small or exceptional primes, CapabilityError for
/// monomials outside this scheme.
Residue evaluate_at(const ZExpr& e, const Modulus& m);

AnValue evaluate_A(const ZExpr& e, const PrimeWindow& window, int n);

}  // namespace fmzv
