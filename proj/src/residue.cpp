#include "fmzv/residue.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Modulus::Modulus(std::uint64_t p_, int n_) : p(p_), n(n_), pn(1) {
  if (!is_prime(p)) throw std::domain_error("Modulus: " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::domain_error("Modulus: level must be positive");
  for (int i = 0; i < n; ++i) {
    if (pn > (std::uint64_t{1} << 62) / p) throw std::domain_error("Modulus: p^n too large");
    pn *= p;
  }
}

Residue Residue::from_int(const Modulus& m, long long v) {
  long long r = v % static_cast<long long>(m.pn);
  if (r < 0) r += static_cast<long long>(m.pn);
  return Residue(m, static_cast<std::uint64_t>(r));
}

Residue Residue::from_bigint(const Modulus& m, const BigInt& v) {
  BigInt r = v % BigInt(static_cast<unsigned long>(m.pn));
  if (r < 0) r += static_cast<unsigned long>(m.pn);
  return Residue(m, r.get_ui());
}

Residue Residue::from_rational(const Modulus& m, const BigRational& q) {
  if (q.get_den() % static_cast<unsigned long>(m.p) == 0)
    throw SkipPrime("denominator divisible by " + std::to_string(m.p));
  return from_bigint(m, q.get_num()) * from_bigint(m, q.get_den()).inverse();
}

int Residue::valuation() const {
  if (value_ == 0) return mod_.n;
  int v = 0;
  for (std::uint64_t x = value_; x % mod_.p == 0; x /= mod_.p) ++v;
  return v;
}

void Residue::check(const Residue& r) const {
  if (!(mod_ == r.mod_)) throw std::domain_error("Residue: modulus mismatch");
}

Residue& Residue::operator+=(const Residue& r) {
  check(r);
  value_ += r.value_;
  if (value_ >= mod_.pn) value_ -= mod_.pn;
  return *this;
}

Residue& Residue::operator-=(const Residue& r) {
  check(r);
  value_ = value_ >= r.value_ ? value_ - r.value_ : value_ + mod_.pn - r.value_;
  return *this;
}

Residue& Residue::operator*=(const Residue& r) {
  check(r);
  value_ = mulmod(value_, r.value_, mod_.pn);
  return *this;
}

Residue Residue::operator-() const { return Residue(mod_, value_ == 0 ? 0 : mod_.pn - value_); }

Residue Residue::inverse() const {
  if (value_ % mod_.p == 0) throw std::domain_error("Residue::inverse: not a unit");
  // extended Euclid on signed 128-bit values
  __int128 a = static_cast<__int128>(value_), b = static_cast<__int128>(mod_.pn);
  __int128 x0 = 1, x1 = 0;
  while (b != 0) {
    __int128 q = a / b;
    __int128 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  __int128 m = static_cast<__int128>(mod_.pn);
  x0 %= m;
  if (x0 < 0) x0 += m;
  return Residue(mod_, static_cast<std::uint64_t>(x0));
}

Residue Residue::pow(std::uint64_t e) const {
  Residue base = *this, out(mod_, 1);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Residue operator+(Residue a, const Residue& b) { return a += b; }
Residue operator-(Residue a, const Residue& b) { return a -= b; }
Residue operator*(Residue a, const Residue& b) { return a *= b; }

std::string to_string(const Residue& r) {
  return std::to_string(r.value()) + " mod " + std::to_string(r.modulus().p) + "^" +
         std::to_string(r.modulus().n);
}

std::vector<Residue> batch_inverses(const Modulus& m, std::uint64_t count) {
  std::vector<Residue> prefix(count + 1, Residue(m, 1));
  for (std::uint64_t i = 1; i <= count; ++i) {
    if (i % m.p == 0) throw std::domain_error("batch_inverses: count must be below p");
    prefix[i] = prefix[i - 1] * Residue(m, i);
  }
  std::vector<Residue> inv(count + 1, Residue(m, 0));
  Residue acc = prefix[count].inverse();
  for (std::uint64_t i = count; i >= 1; --i) {
    inv[i] = acc * prefix[i - 1];
    acc *= Residue(m, i);
  }
  return inv;
}

PrimeWindow primes_between(std::uint64_t lo, std::uint64_t hi) {
  PrimeWindow out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

PrimeWindow parse_prime_window(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("prime window must look like A:B");
  const std::uint64_t lo = parse_u64(text.substr(0, colon));
  const std::uint64_t hi = parse_u64(text.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument("prime window: A > B");
  return primes_between(lo, hi);
}

PrimeWindow default_prime_window() {
  if (const char* env = std::getenv("FMZV_DEFAULT_PRIMES"); env && *env) return parse_prime_window(env);
  return primes_between(7, 97);
}

void AnValue::set(std::uint64_t p, const Residue& r) {
  skipped_.erase(p);
  entries_.insert_or_assign(p, r);
}

void AnValue::skip(std::uint64_t p, std::string reason) {
  entries_.erase(p);
  skipped_.try_emplace(p, std::move(reason));
}

template <class Op>
AnValue& AnValue::combine(const AnValue& rhs, Op op) {
  if (n_ == 0) n_ = rhs.n_;
  if (rhs.n_ != 0 && rhs.n_ != n_) throw std::domain_error("AnValue: level mismatch");
  for (const auto& [p, why] : rhs.skipped_) skip(p, why);
  for (auto it = entries_.begin(); it != entries_.end();) {
    auto other = rhs.entries_.find(it->first);
    if (other == rhs.entries_.end()) {
      if (!skipped_.count(it->first)) skipped_.emplace(it->first, "missing");
      it = entries_.erase(it);
    } else {
      op(it->second, other->second);
      ++it;
    }
  }
  for (const auto& [p, r] : rhs.entries_)
    if (!entries_.count(p) && !skipped_.count(p)) skipped_.emplace(p, "missing");
  return *this;
}

AnValue& AnValue::operator+=(const AnValue& rhs) {
  return combine(rhs, [](Residue& a, const Residue& b) { a += b; });
}
AnValue& AnValue::operator-=(const AnValue& rhs) {
  return combine(rhs, [](Residue& a, const Residue& b) { a -= b; });
}
AnValue& AnValue::operator*=(const AnValue& rhs) {
  return combine(rhs, [](Residue& a, const Residue& b) { a *= b; });
}

AnValue& AnValue::operator*=(const BigRational& c) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    try {
      it->second *= Residue::from_rational(it->second.modulus(), c);
      ++it;
    } catch (const SkipPrime& e) {
      skipped_.try_emplace(it->first, e.what());
      it = entries_.erase(it);
    }
  }
  return *this;
}

bool AnValue::all_zero() const {
  for (const auto& [p, r] : entries_)
    if (!r.is_zero()) return false;
  return true;
}

AnValue operator+(AnValue a, const AnValue& b) { return a += b; }
AnValue operator-(AnValue a, const AnValue& b) { return a -= b; }
AnValue operator*(AnValue a, const AnValue& b) { return a *= b; }
AnValue operator*(const BigRational& c, AnValue a) { return a *= c; }

AnComparison compare(const AnValue& a, const AnValue& b) {
  AnComparison out;
  out.skipped = a.skipped();
  for (const auto& [p, why] : b.skipped()) out.skipped.try_emplace(p, why);
  for (const auto& [p, r] : a.entries()) {
    if (out.skipped.count(p)) continue;
    auto it = b.entries().find(p);
    if (it == b.entries().end()) continue;
    out.compared.push_back(p);
    if (!(r == it->second)) out.mismatched.push_back(p);
  }
  return out;
}

}  // namespace fmzv
