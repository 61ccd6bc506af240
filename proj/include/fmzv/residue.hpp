#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fmzv/rational.hpp"

namespace fmzv {

bool is_prime(std::uint64_t n);

/// Z/p^n Z descriptor.
struct Modulus {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t pn = 0;

  Modulus() = default;
  /// Throws std::domain_error if p is not prime, n < 1 or p^n overflows 62 bits.
  Modulus(std::uint64_t p, int n);

  bool operator==(const Modulus&) const = default;
};

class Residue {
 public:
  Residue() = default;
  Residue(const Modulus& m, std::uint64_t value) : mod_(m), value_(value % m.pn) {}
  static Residue from_int(const Modulus& m, long long v);
  static Residue from_bigint(const Modulus& m, const BigInt& v);
  /// Throws SkipPrime if p divides the denominator.
  static Residue from_rational(const Modulus& m, const BigRational& q);

  const Modulus& modulus() const { return mod_; }
  std::uint64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  /// Largest v <= n with p^v | value.
  int valuation() const;

  Residue& operator+=(const Residue& r);
  Residue& operator-=(const Residue& r);
  Residue& operator*=(const Residue& r);
  Residue operator-() const;
  /// Throws std::domain_error if p divides the value.
  Residue inverse() const;
  Residue pow(std::uint64_t e) const;

  bool operator==(const Residue&) const = default;

 private:
  void check(const Residue& r) const;

  Modulus mod_;
  std::uint64_t value_ = 0;
};

Residue operator+(Residue a, const Residue& b);
Residue operator-(Residue a, const Residue& b);
Residue operator*(Residue a, const Residue& b);

/// "value mod p^n"
std::string to_string(const Residue& r);

/// Inverses of 1..count mod m by batched inversion (index 0 unused).
std::vector<Residue> batch_inverses(const Modulus& m, std::uint64_t count);

/// Ordered set of primes.
using PrimeWindow = std::vector<std::uint64_t>;

/// Primes in [lo, hi].
PrimeWindow primes_between(std::uint64_t lo, std::uint64_t hi);
/// Parses "A:B".
PrimeWindow parse_prime_window(std::string_view text);
/// 7..97, or the range in FMZV_DEFAULT_PRIMES if set.
PrimeWindow default_prime_window();

/// A family of residues mod p^n on a finite window, with the primes that had
/// to be excluded and why.
class AnValue {
 public:
  AnValue() = default;
  explicit AnValue(int n) : n_(n) {}

  int level() const { return n_; }
  const std::map<std::uint64_t, Residue>& entries() const { return entries_; }
  const std::map<std::uint64_t, std::string>& skipped() const { return skipped_; }

  void set(std::uint64_t p, const Residue& r);
  void skip(std::uint64_t p, std::string reason);
  bool has(std::uint64_t p) const { return entries_.count(p) != 0; }
  const Residue& at(std::uint64_t p) const { return entries_.at(p); }

  AnValue& operator+=(const AnValue& rhs);
  AnValue& operator-=(const AnValue& rhs);
  AnValue& operator*=(const AnValue& rhs);
  AnValue& operator*=(const BigRational& c);

  bool all_zero() const;

 private:
  template <class Op>
  AnValue& combine(const AnValue& rhs, Op op);

  int n_ = 0;
  std::map<std::uint64_t, Residue> entries_;
  std::map<std::uint64_t, std::string> skipped_;
};

AnValue operator+(AnValue a, const AnValue& b);
AnValue operator-(AnValue a, const AnValue& b);
AnValue operator*(AnValue a, const AnValue& b);
AnValue operator*(const BigRational& c, AnValue a);

struct AnComparison {
  std::vector<std::uint64_t> compared;
  std::vector<std::uint64_t> mismatched;
  std::map<std::uint64_t, std::string> skipped;

  bool equal() const { return mismatched.empty(); }
};

/// Entrywise comparison on primes present in both; skips of either side are
/// merged into the result.
AnComparison compare(const AnValue& a, const AnValue& b);

}  // namespace fmzv
