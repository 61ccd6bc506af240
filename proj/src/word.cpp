#include "fmzv/word.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace fmzv {

// ---- Word ------------------------------------------------------------------

Word Word::from_letters(std::string_view letters) {
  Word w;
  for (char c : letters) {
    if (c != '0' && c != '1') throw std::invalid_argument("Word: letters must be '0' or '1'");
    w.letters_.push_back(c);
  }
  return w;
}

Word Word::power(Letter x, std::size_t m) {
  Word w;
  w.letters_.assign(m, static_cast<char>(x));
  return w;
}

bool Word::in_h1() const { return empty() || front() == Letter::e1; }

bool Word::in_h0() const { return empty() || (front() == Letter::e1 && back() == Letter::e0); }

std::size_t Word::trailing_e1() const {
  std::size_t n = 0;
  for (auto it = letters_.rbegin(); it != letters_.rend() && *it == '1'; ++it) ++n;
  return n;
}

Word& Word::operator+=(const Word& tail) {
  letters_ += tail.letters_;
  return *this;
}

Word& Word::push_back(Letter x) {
  letters_.push_back(static_cast<char>(x));
  return *this;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

Word operator+(Word head, const Word& tail) { return head += tail; }

Word e(int k) {
  if (k < 1) throw std::domain_error("e(k): k must be positive");
  Word w = Word::power(Letter::e0, static_cast<std::size_t>(k));
  return Word::from_letters("1" + w.letters().substr(1));
}

Word word_from_index(const Index& k) {
  Word w;
  for (int part : k.parts()) w += e(part);
  return w;
}

Index index_from_word(const Word& w) {
  if (!w.in_h1()) throw std::domain_error("index_from_word: word not in h^1");
  std::vector<int> parts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::e1)
      parts.push_back(1);
    else
      ++parts.back();
  }
  return Index(std::move(parts));
}

Word dual(const Word& w) {
  if (w.empty() || !w.in_h0()) throw std::domain_error("dual: word must be admissible");
  std::string s(w.letters().rbegin(), w.letters().rend());
  for (char& c : s) c = (c == '0') ? '1' : '0';
  return Word::from_letters(s);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (w[i] == Letter::e0) ? "e0" : "e1";
  return s;
}

// ---- LinComb ---------------------------------------------------------------

LinComb::LinComb(Word w, BigRational c) { add_term(w, c); }

void LinComb::add_term(const Word& w, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRational LinComb::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BigRational(0) : it->second;
}

bool LinComb::in_h1() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_h1(); });
}

bool LinComb::in_h0() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_h0(); });
}

LinComb& LinComb::operator+=(const LinComb& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

LinComb& LinComb::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
LinComb operator*(const BigRational& c, LinComb a) { return a *= c; }

LinComb concat(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa + wb, ca * cb);
  return out;
}

LinComb prepend(const Word& prefix, const LinComb& a) {
  LinComb out;
  for (const auto& [w, c] : a.terms()) out.add_term(prefix + w, c);
  return out;
}

LinComb append(const LinComb& a, const Word& suffix) {
  LinComb out;
  for (const auto& [w, c] : a.terms()) out.add_term(w + suffix, c);
  return out;
}

BigRational coefficient_mass(const LinComb& a) {
  BigRational s = 0;
  for (const auto& t : a.terms()) s += t.second;
  return s;
}

// ---- products --------------------------------------------------------------

namespace {

struct PairKey {
  Product product;
  Word a, b;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    std::size_t h = std::hash<Word>{}(k.a);
    h ^= std::hash<Word>{}(k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(k.product);
  }
};

class ProductCache {
 public:
  const LinComb* find(const PairKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }
  // insert-if-absent; returns the stored value
  const LinComb& insert(PairKey key, LinComb value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(std::move(key), std::move(value)).first->second;
  }
  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<PairKey, LinComb, PairKeyHash> table_;
};

ProductCache& cache() {
  static ProductCache c;
  return c;
}

std::atomic<bool> cache_enabled{true};

// Length of the leading block e_k of a nonempty h^1 word.
std::size_t first_block(const Word& w) {
  std::size_t n = 1;
  while (n < w.size() && w[n] == Letter::e0) ++n;
  return n;
}

LinComb compute(Product p, const Word& a, const Word& b);

LinComb product_of_words(Product p, const Word& a, const Word& b) {
  if (a.empty()) return LinComb(b);
  if (b.empty()) return LinComb(a);
  // all three products are commutative; normalize the key
  const bool swap = CanonicalOrder{}(b, a);
  const Word& x = swap ? b : a;
  const Word& y = swap ? a : b;
  if (!cache_enabled.load(std::memory_order_relaxed)) return compute(p, x, y);
  PairKey key{p, x, y};
  if (const LinComb* hit = cache().find(key)) return *hit;
  LinComb value = compute(p, x, y);
  return cache().insert(std::move(key), std::move(value));
}

LinComb compute(Product p, const Word& a, const Word& b) {
  if (p == Product::shuffle) {
    LinComb out = prepend(a.substr(0, 1), product_of_words(p, a.substr(1), b));
    out += prepend(b.substr(0, 1), product_of_words(p, a, b.substr(1)));
    return out;
  }
  const std::size_t la = first_block(a), lb = first_block(b);
  const Word ha = a.substr(0, la), ta = a.substr(la);
  const Word hb = b.substr(0, lb), tb = b.substr(lb);
  LinComb out = prepend(ha, product_of_words(p, ta, b));
  out += prepend(hb, product_of_words(p, a, tb));
  if (p == Product::harmonic)
    out += prepend(e(static_cast<int>(la + lb)), product_of_words(p, ta, tb));
  return out;
}

void require_h1(const LinComb& a, const char* what) {
  if (!a.in_h1()) throw std::domain_error(std::string(what) + ": operand not in h^1");
}

LinComb bilinear(Product p, const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      const BigRational c = ca * cb;
      const LinComb prod = product_of_words(p, wa, wb);
      for (const auto& [w, cw] : prod.terms()) out.add_term(w, c * cw);
    }
  return out;
}

}  // namespace

LinComb harmonic(const LinComb& a, const LinComb& b) {
  require_h1(a, "harmonic");
  require_h1(b, "harmonic");
  return bilinear(Product::harmonic, a, b);
}

LinComb harmonic(const Word& a, const Word& b) { return harmonic(LinComb(a), LinComb(b)); }

LinComb shuffle(const LinComb& a, const LinComb& b) { return bilinear(Product::shuffle, a, b); }

LinComb shuffle(const Word& a, const Word& b) { return shuffle(LinComb(a), LinComb(b)); }

LinComb muneta_shuffle(const LinComb& a, const LinComb& b) {
  require_h1(a, "muneta_shuffle");
  require_h1(b, "muneta_shuffle");
  return bilinear(Product::muneta, a, b);
}

LinComb muneta_shuffle(const Word& a, const Word& b) { return muneta_shuffle(LinComb(a), LinComb(b)); }

LinComb multiply(Product p, const LinComb& a, const LinComb& b) {
  switch (p) {
    case Product::harmonic: return harmonic(a, b);
    case Product::shuffle: return shuffle(a, b);
    case Product::muneta: return muneta_shuffle(a, b);
  }
  throw std::logic_error("multiply: unknown product");
}

LinComb multiply(Product p, const Word& a, const Word& b) { return multiply(p, LinComb(a), LinComb(b)); }

LinComb power(Product p, const LinComb& x, int m) {
  if (m < 0) throw std::domain_error("power: negative exponent");
  LinComb out = LinComb::one();
  for (int i = 0; i < m; ++i) out = multiply(p, out, x);
  return out;
}

void set_product_cache_enabled(bool enabled) { cache_enabled.store(enabled); }

void clear_product_cache() { cache().clear(); }

// ---- rendering -------------------------------------------------------------

namespace {

void render_term(std::string& out, const BigRational& c, const std::string& body, bool first,
                 const char* plus, const char* minus, const char* lead_minus) {
  const bool negative = c < 0;
  if (first)
    out += negative ? lead_minus : "";
  else
    out += negative ? minus : plus;
  BigRational mag = negative ? BigRational(-c) : c;
  if (mag != 1) out += to_compact_string(mag) + "·";
  out += body;
}

}  // namespace

std::string to_string(const LinComb& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    if (w.empty() && c != 1 && c != -1) {
      // scalar term: print the number alone
      render_term(out, c, "", first, " + ", " − ", "−");
      out.erase(out.size() - std::string("·").size());
    } else {
      render_term(out, c, to_string(w), first, " + ", " − ", "−");
    }
    first = false;
  }
  return out;
}

std::string to_index_string(const LinComb& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Index, BigRational>> terms;
  for (const auto& [w, c] : a.terms()) terms.emplace_back(index_from_word(w), c);
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const Index& i = x.first;
    const Index& j = y.first;
    if (i.weight() != j.weight()) return i.weight() < j.weight();
    if (i.depth() != j.depth()) return i.depth() > j.depth();
    return i < j;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    render_term(out, c, "e" + to_string(k), first, "+", "-", "-");
    first = false;
  }
  return out;
}

}  // namespace fmzv
