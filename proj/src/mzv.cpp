#include "fmzv/mzv.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "fmzv/errors.hpp"
#include "fmzv/regularization.hpp"

namespace fmzv {

namespace {

using ValueCache = std::map<std::pair<std::string, int>, BigReal>;

// Guarded by PrecisionGuard's lock.
ValueCache& li_cache() {
  static ValueCache c;
  return c;
}
ValueCache& zeta_cache() {
  static ValueCache c;
  return c;
}

void check_weight(std::size_t w) {
  if (w > static_cast<std::size_t>(kMaxNumericWeight))
    throw CapabilityError("numeric evaluation limited to weight " + std::to_string(kMaxNumericWeight));
}

// Smallest N with 4 (w+1) (2 + ln N)^w 2^{-N} < 10^{-(digits+8)}.
long cutoff(std::size_t w, int digits) {
  const double target = -(digits + 8) * std::log(10.0);
  for (long n = 16;; n += 8) {
    const double log_err = std::log(4.0 * static_cast<double>(w + 1)) +
                           static_cast<double>(w) * std::log(2.0 + std::log(static_cast<double>(n))) -
                           static_cast<double>(n) * std::log(2.0);
    if (log_err < target) return n;
    if (n > 200000) throw AccuracyError("cutoff for Li(1/2) out of range");
  }
}

BigReal compute_li_half(const Word& w, int digits) {
  const Index k = index_from_word(w);
  const std::size_t r = k.depth();
  const long N = cutoff(w.size(), digits);
  int max_part = 0;
  for (int part : k.parts()) max_part = std::max(max_part, part);

  // s[j]: nested sum over the first j parts with largest variable < n
  std::vector<BigReal> s(r, BigReal(0));
  s[0] = 1;
  std::vector<BigReal> inv_pow(static_cast<std::size_t>(max_part) + 1);
  BigReal half_pow = 1, total = 0;
  for (long n = 1; n <= N; ++n) {
    half_pow /= 2;
    inv_pow[0] = 1;
    const BigReal inv = BigReal(1) / n;
    for (int e = 1; e <= max_part; ++e) inv_pow[static_cast<std::size_t>(e)] = inv_pow[static_cast<std::size_t>(e - 1)] * inv;
    total += half_pow * inv_pow[static_cast<std::size_t>(k[r - 1])] * s[r - 1];
    for (std::size_t j = r - 1; j >= 1; --j) s[j] += s[j - 1] * inv_pow[static_cast<std::size_t>(k[j - 1])];
  }
  return total;
}

Word swap_reverse(const Word& w) {
  std::string s(w.letters().rbegin(), w.letters().rend());
  for (char& c : s) c = (c == '0') ? '1' : '0';
  return Word::from_letters(s);
}

BigReal compute_zeta(const Word& w, int digits) {
  // split the iterated integral at 1/2; the far half maps back to [0, 1/2]
  // under t -> 1 - t
  BigReal total = 0;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    const Word head = w.substr(0, j);
    const Word tail = swap_reverse(w.substr(j));
    const BigReal a = head.empty() ? BigReal(1) : li_half(head, digits);
    const BigReal b = tail.empty() ? BigReal(1) : li_half(tail, digits);
    total += a * b;
  }
  return total;
}

void enumerate_shifts(std::size_t slots, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == slots) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= cap; ++v) {
    cur.push_back(v);
    enumerate_shifts(slots, cap - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BigReal li_half(const Word& w, int digits) {
  if (w.empty() || !w.in_h1()) throw std::domain_error("li_half: word must be nonempty and in h^1");
  check_weight(w.size());
  PrecisionGuard guard(working_digits(digits));
  auto key = std::make_pair(w.letters(), digits);
  auto& cache = li_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  BigReal v = compute_li_half(w, digits);
  cache.emplace(std::move(key), v);
  return v;
}

BigReal mzv_word(const Word& w, int digits) {
  if (!w.in_h0()) throw std::domain_error("mzv: word not admissible");
  if (w.empty()) return BigReal(1);
  check_weight(w.size());
  PrecisionGuard guard(working_digits(digits));
  auto key = std::make_pair(w.letters(), digits);
  auto& cache = zeta_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  BigReal v = compute_zeta(w, digits);
  cache.emplace(std::move(key), v);
  return v;
}

BigReal mzv(const Index& k, int digits) {
  if (!k.admissible()) throw std::domain_error("mzv: index " + to_string(k) + " not admissible");
  return mzv_word(word_from_index(k), digits);
}

BigReal mzv_star(const Index& k, int digits) {
  if (!k.admissible()) throw std::domain_error("mzv_star: index " + to_string(k) + " not admissible");
  PrecisionGuard guard(working_digits(digits));
  BigReal total = 0;
  for (const auto& c : comma_plus_contractions(k)) total += mzv(c, digits);
  return total;
}

BigReal Z_real(const LinComb& a, int digits) {
  if (!a.in_h0()) throw std::domain_error("Z_real: operand not in h^0");
  PrecisionGuard guard(working_digits(digits));
  BigReal total = 0;
  for (const auto& [w, c] : a.terms()) {
    const BigReal q = BigReal(c.get_num().get_str()) / BigReal(c.get_den().get_str());
    total += q * mzv_word(w, digits);
  }
  return total;
}

BigReal mzv_reg(const Index& k, Product p, int digits) {
  if (k.admissible()) return mzv(k, digits);
  return Z_real(reg(word_from_index(k), p), digits);
}

TPoly<BigReal> symmetric_hat(const Index& k, Product p, int n, int digits) {
  PrecisionGuard guard(working_digits(digits));
  TPoly<BigReal> out(n, BigReal(0));
  const std::size_t r = k.depth();
  for (std::size_t i = 0; i <= r; ++i) {
    int tail_weight = 0;
    for (std::size_t j = i; j < r; ++j) tail_weight += k[j];
    const BigReal head = mzv_reg(k.slice(0, i), p, digits) * sign_pow(tail_weight);
    std::vector<std::vector<int>> shifts;
    std::vector<int> cur;
    enumerate_shifts(r - i, n - 1, cur, shifts);
    for (const auto& l : shifts) {
      BigRational c = 1;
      int wt = 0;
      std::vector<int> rev;
      for (std::size_t j = 0; j < l.size(); ++j) {
        c *= binom(k[i + j] + l[j] - 1, l[j]);
        wt += l[j];
      }
      for (std::size_t j = l.size(); j-- > 0;) rev.push_back(k[i + j] + l[j]);
      const BigReal q = BigReal(c.get_num().get_str()) / BigReal(c.get_den().get_str());
      out[static_cast<std::size_t>(wt)] += head * q * mzv_reg(Index(rev), p, digits);
    }
  }
  return out;
}

TPoly<BigReal> symmetric_hat_star(const Index& k, Product p, int n, int digits) {
  PrecisionGuard guard(working_digits(digits));
  TPoly<BigReal> out(n, BigReal(0));
  for (const auto& c : comma_plus_contractions(k)) out += symmetric_hat(c, p, n, digits);
  return out;
}

std::pair<BigReal, BigReal> zagier_theorem1_exact(int a, int b, int digits) {
  if (a < 0 || b < 0) throw std::domain_error("zagier_theorem1_exact: a, b must be non-negative");
  PrecisionGuard guard(working_digits(digits));
  Index lhs_index = Index::repeat(2, a);
  lhs_index.push_back(3).append(Index::repeat(2, b));
  const BigReal lhs = mzv(lhs_index, digits);
  BigReal rhs = 0;
  for (int r = 1; r <= a + b + 1; ++r) {
    BigInt four_r;
    mpz_ui_pow_ui(four_r.get_mpz_t(), 4, static_cast<unsigned long>(r));
    const BigRational c = BigRational(2 * sign_pow(r)) *
                          (binom(2 * r, 2 * a + 2) - (1 - BigRational(1) / BigRational(four_r)) * binom(2 * r, 2 * b + 1));
    if (c == 0) continue;
    const BigReal q = BigReal(c.get_num().get_str()) / BigReal(c.get_den().get_str());
    rhs += q * mzv(Index::repeat(2, a + b - r + 1), digits) * mzv(Index{2 * r + 1}, digits);
  }
  return {lhs, rhs};
}

std::pair<BigReal, BigReal> zagier_theorem2_exact(int m, int n, int digits) {
  const int k = m + n;
  if (m < 1 || n < 2 || k % 2 == 0) throw std::domain_error("zagier_theorem2_exact: need m >= 1, n >= 2, m+n odd");
  PrecisionGuard guard(working_digits(digits));
  const int K = (k - 1) / 2;
  const BigReal lhs = mzv(Index{m, n}, digits);
  BigReal rhs = 0;
  for (int s = 0; s <= K - 1; ++s) {
    const BigRational c = binom(k - 2 * s - 1, m - 1) + binom(k - 2 * s - 1, n - 1) - (n == 2 * s ? 1 : 0) +
                          (s == 0 ? sign_pow(m) : 0);
    if (c == 0) continue;
    const BigReal zeta_2s = s == 0 ? BigReal(-0.5) : mzv(Index{2 * s}, digits);
    const BigReal q = BigReal(c.get_num().get_str()) / BigReal(c.get_den().get_str());
    rhs += q * zeta_2s * mzv(Index{k - 2 * s}, digits);
  }
  rhs *= sign_pow(m);
  return {lhs, rhs};
}

BigRational zagier1_surviving_coefficient(int a, int b) {
  // only r = a+b+1 has zeta({2}^0) = 1
  const int r = a + b + 1;
  BigInt four_r;
  mpz_ui_pow_ui(four_r.get_mpz_t(), 4, static_cast<unsigned long>(r));
  return BigRational(2 * sign_pow(r)) *
         (binom(2 * r, 2 * a + 2) - (1 - BigRational(1) / BigRational(four_r)) * binom(2 * r, 2 * b + 1));
}

BigRational zagier1_mod_zeta2_coefficient(int a, int b) {
  BigInt four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(a + b + 1));
  return BigRational(2 * sign_pow(a + b + 1)) *
         (binom(2 * a + 2 * b + 2, 2 * a + 2) -
          (1 - BigRational(1) / BigRational(four)) * binom(2 * a + 2 * b + 2, 2 * b + 1));
}

BigRational zagier2_surviving_coefficient(int m, int n) {
  const int k = m + n;
  const BigRational c = binom(k - 1, m - 1) + binom(k - 1, n - 1) - (n == 0 ? 1 : 0) + sign_pow(m);
  return BigRational(sign_pow(m)) * c * BigRational(-1, 2);
}

BigRational zagier2_mod_zeta2_coefficient(int m, int n) {
  const int k = m + n;
  return BigRational(sign_pow(m + 1), 2) * (binom(k, m) + sign_pow(m));
}

}  // namespace fmzv
