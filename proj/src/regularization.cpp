#include "fmzv/regularization.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace fmzv {

namespace {

void check_product(Product p) {
  if (p == Product::muneta) throw std::domain_error("regularization: product must be harmonic or shuffle");
}

void add_scaled(PolyInE1& out, const PolyInE1& in, const BigRational& c, std::size_t shift = 0) {
  if (out.coeffs.size() < in.coeffs.size() + shift) out.coeffs.resize(in.coeffs.size() + shift);
  for (std::size_t i = 0; i < in.coeffs.size(); ++i) out.coeffs[i + shift] += c * in.coeffs[i];
}

void trim(PolyInE1& poly) {
  while (!poly.coeffs.empty() && poly.coeffs.back().is_zero()) poly.coeffs.pop_back();
}

class DecompositionCache {
 public:
  bool find(Product p, const Word& w, PolyInE1& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find({p, w});
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(Product p, const Word& w, const PolyInE1& value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace({p, w}, value);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<Product, Word>, PolyInE1> table_;
};

DecompositionCache& cache() {
  static DecompositionCache c;
  return c;
}

PolyInE1 decompose_word(const Word& w, Product p) {
  PolyInE1 out;
  out.product = p;
  if (w.in_h0()) {
    out.coeffs.push_back(LinComb(w));
    return out;
  }
  if (cache().find(p, w, out)) return out;

  // w = v e1 with trailing e1-run m. In v . e1 the word w occurs exactly m
  // times; every other term has a shorter trailing run.
  const std::size_t m = w.trailing_e1();
  const Word v = w.substr(0, w.size() - 1);
  LinComb rest = multiply(p, v, Word::power(Letter::e1, 1));
  rest.add_term(w, -BigRational(static_cast<long>(m)));

  add_scaled(out, decompose_word(v, p), 1, 1);
  for (const auto& [u, c] : rest.terms()) add_scaled(out, decompose_word(u, p), -c);
  const BigRational inv(1, static_cast<long>(m));
  for (auto& a : out.coeffs) a *= inv;
  trim(out);
  cache().insert(p, w, out);
  return out;
}

}  // namespace

PolyInE1 decompose(const Word& w, Product p) {
  check_product(p);
  if (!w.in_h1()) throw std::domain_error("decompose: word not in h^1");
  return decompose_word(w, p);
}

PolyInE1 decompose(const LinComb& a, Product p) {
  check_product(p);
  if (!a.in_h1()) throw std::domain_error("decompose: operand not in h^1");
  PolyInE1 out;
  out.product = p;
  for (const auto& [w, c] : a.terms()) add_scaled(out, decompose_word(w, p), c);
  trim(out);
  return out;
}

LinComb reconstruct(const PolyInE1& poly) {
  LinComb out;
  const LinComb e1(Word::power(Letter::e1, 1));
  LinComb power = LinComb::one();
  for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
    if (i) power = multiply(poly.product, power, e1);
    out += multiply(poly.product, poly.coeffs[i], power);
  }
  return out;
}

LinComb reg(const LinComb& a, Product p) { return decompose(a, p).coeff(0); }

LinComb reg(const Word& w, Product p) { return decompose(w, p).coeff(0); }

LinComb reg_sh_closed_form(const Word& w_prime, int m) {
  if (m < 0) throw std::domain_error("reg_sh_closed_form: negative m");
  const Word e0 = Word::power(Letter::e0, 1);
  const Word w = w_prime + e0;
  if (!w.in_h0()) throw std::domain_error("reg_sh_closed_form: w'e0 not admissible");
  LinComb out = append(shuffle(w_prime, Word::power(Letter::e1, static_cast<std::size_t>(m))), e0);
  return BigRational(sign_pow(m)) * std::move(out);
}

void clear_regularization_cache() { cache().clear(); }

}  // namespace fmzv
