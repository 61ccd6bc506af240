#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "fmzv/index.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

enum class Letter : char { e0 = '0', e1 = '1' };

/// A word in the letters e0, e1.
class Word {
 public:
  Word() = default;
  /// From a string of '0' / '1' characters.
  static Word from_letters(std::string_view letters);
  static Word power(Letter x, std::size_t m);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  Letter front() const { return static_cast<Letter>(letters_.front()); }
  Letter back() const { return static_cast<Letter>(letters_.back()); }

  /// empty, or first letter e1
  bool in_h1() const;
  /// empty, or first letter e1 and last letter e0
  bool in_h0() const;

  /// Length of the maximal run of e1 at the end.
  std::size_t trailing_e1() const;

  Word& operator+=(const Word& tail);
  Word& push_back(Letter x);
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;

  /// Internal '0'/'1' representation.
  const std::string& letters() const { return letters_; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::string letters_;
};

Word operator+(Word head, const Word& tail);

/// Canonical term order: shorter first, then lexicographic with e0 < e1.
struct CanonicalOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
  }
};

/// e_k = e1 e0^{k-1}
Word e(int k);
/// e_k = e_{k_1} ... e_{k_r}; e_() is the empty word.
Word word_from_index(const Index& k);
/// Inverse of word_from_index on h^1. Throws std::domain_error otherwise.
Index index_from_word(const Word& w);

/// Reverse the word and swap e0 <-> e1. Requires a nonempty word in h^0.
Word dual(const Word& w);

/// "e1e0e1"; the empty word renders as "1".
std::string to_string(const Word& w);

/// A finite Q-linear combination of words. Zero coefficients are never
/// stored.
class LinComb {
 public:
  using Terms = std::map<Word, BigRational, CanonicalOrder>;

  LinComb() = default;
  explicit LinComb(Word w, BigRational c = 1);
  static LinComb one() { return LinComb(Word{}); }

  void add_term(const Word& w, const BigRational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigRational coefficient(const Word& w) const;

  bool in_h1() const;
  bool in_h0() const;

  LinComb& operator+=(const LinComb& rhs);
  LinComb& operator-=(const LinComb& rhs);
  LinComb& operator*=(const BigRational& c);

  bool operator==(const LinComb& rhs) const { return terms_ == rhs.terms_; }

 private:
  Terms terms_;
};

LinComb operator+(LinComb a, const LinComb& b);
LinComb operator-(LinComb a, const LinComb& b);
LinComb operator*(const BigRational& c, LinComb a);

/// Concatenation extended bilinearly.
LinComb concat(const LinComb& a, const LinComb& b);
/// prefix * a, a * suffix (concatenation with a single word)
LinComb prepend(const Word& prefix, const LinComb& a);
LinComb append(const LinComb& a, const Word& suffix);

/// Sum of all coefficients.
BigRational coefficient_mass(const LinComb& a);

/// Harmonic (stuffle) product on h^1.
LinComb harmonic(const LinComb& a, const LinComb& b);
LinComb harmonic(const Word& a, const Word& b);
/// Shuffle product on Q<e0,e1>.
LinComb shuffle(const LinComb& a, const LinComb& b);
LinComb shuffle(const Word& a, const Word& b);
/// Muneta's block shuffle on h^1 (harmonic product without the stuffing term).
LinComb muneta_shuffle(const LinComb& a, const LinComb& b);
LinComb muneta_shuffle(const Word& a, const Word& b);

enum class Product { harmonic, shuffle, muneta };

LinComb multiply(Product p, const LinComb& a, const LinComb& b);
LinComb multiply(Product p, const Word& a, const Word& b);
/// x^{p m}: the m-fold product of x with itself (m = 0 gives 1).
LinComb power(Product p, const LinComb& x, int m);

/// Memoization of word-pair products. Results are identical with the cache
/// disabled; the switch exists so tests can check exactly that.
void set_product_cache_enabled(bool enabled);
void clear_product_cache();

/// "3/2·e1e0 − e1e1e0"; zero renders as "0".
std::string to_string(const LinComb& a);
/// Index notation for elements of h^1, e.g. "e(2,3)+e(3,2)+e(5)".
/// Terms ordered by weight, then decreasing depth, then parts.
std::string to_index_string(const LinComb& a);

}  // namespace fmzv

template <>
struct std::hash<fmzv::Word> {
  std::size_t operator()(const fmzv::Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};
