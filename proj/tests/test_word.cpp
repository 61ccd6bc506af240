#include <doctest.h>

#include <map>

#include "fmzv/word.hpp"

using namespace fmzv;

namespace {

std::vector<Word> h1_words(int weight) {
  std::vector<Word> out;
  for (const auto& k : enumerate_weight(weight)) out.push_back(word_from_index(k));
  return out;
}

std::vector<Word> h1_words_up_to(int weight) {
  std::vector<Word> out;
  for (int w = 1; w <= weight; ++w)
    for (auto& x : h1_words(w)) out.push_back(x);
  return out;
}

// All interleavings of two sequences, counted with multiplicity.
template <class T>
std::map<std::vector<T>, long> interleavings(const std::vector<T>& a, const std::vector<T>& b) {
  std::map<std::vector<T>, long> out;
  const std::size_t n = a.size() + b.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != a.size()) continue;
    std::vector<T> w;
    std::size_t i = 0, j = 0;
    for (std::size_t pos = 0; pos < n; ++pos) w.push_back((mask >> pos & 1u) ? a[i++] : b[j++]);
    ++out[w];
  }
  return out;
}

LinComb letter_shuffle_oracle(const Word& a, const Word& b) {
  std::vector<char> x(a.letters().begin(), a.letters().end()), y(b.letters().begin(), b.letters().end());
  LinComb out;
  for (const auto& [w, c] : interleavings(x, y)) out.add_term(Word::from_letters(std::string(w.begin(), w.end())), c);
  return out;
}

LinComb block_shuffle_oracle(const Index& a, const Index& b) {
  LinComb out;
  for (const auto& [w, c] : interleavings(a.parts(), b.parts())) out.add_term(word_from_index(Index(w)), c);
  return out;
}

// H_N(k) = sum_{0 < n_1 < ... < n_r <= N} prod n_i^{-k_i}
BigRational truncated_sum(const Index& k, int N) {
  // tail[m] = sum over m <= n_d < ... < n_r <= N of the last r-d+1 factors
  std::vector<BigRational> tail(static_cast<std::size_t>(N + 2), 1);
  for (std::size_t d = k.depth(); d-- > 0;) {
    std::vector<BigRational> next(static_cast<std::size_t>(N + 2), 0);
    for (int m = N; m >= 1; --m) {
      BigRational pw = 1;
      for (int e = 0; e < k[d]; ++e) pw *= m;
      next[static_cast<std::size_t>(m)] = next[static_cast<std::size_t>(m + 1)] + tail[static_cast<std::size_t>(m + 1)] / pw;
    }
    tail = next;
  }
  return tail[1];
}

BigRational truncated_sum(const LinComb& a, int N) {
  BigRational s = 0;
  for (const auto& [w, c] : a.terms()) s += c * truncated_sum(index_from_word(w), N);
  return s;
}

LinComb idx(std::initializer_list<int> parts) { return LinComb(word_from_index(Index(parts))); }

}  // namespace

TEST_CASE("words and indices") {
  CHECK(word_from_index(Index{2, 3}).letters() == "10100");
  CHECK(word_from_index(Index{}).empty());
  CHECK(e(1).letters() == "1");
  for (int w = 1; w <= 8; ++w)
    for (const auto& k : enumerate_weight(w)) {
      const Word x = word_from_index(k);
      CHECK(x.size() == static_cast<std::size_t>(w));
      CHECK(index_from_word(x) == k);
    }
  CHECK_THROWS_AS(index_from_word(Word::from_letters("01")), std::domain_error);
  CHECK_THROWS_AS(Word::from_letters("012"), std::invalid_argument);
  CHECK(Word::from_letters("10").in_h0());
  CHECK_FALSE(Word::from_letters("11").in_h0());
  CHECK(Word::from_letters("11").in_h1());
  CHECK(Word::from_letters("1011").trailing_e1() == 2);
}

TEST_CASE("harmonic product") {
  CHECK(to_index_string(harmonic(e(2), e(3))) == "e(2,3)+e(3,2)+e(5)");
  CHECK(harmonic(idx({1}), idx({1})) == 2 * idx({1, 1}) + idx({2}));
  CHECK(harmonic(LinComb(e(4)), LinComb::one()) == LinComb(e(4)));
  CHECK(harmonic(LinComb::one(), LinComb(e(4))) == LinComb(e(4)));
  CHECK_THROWS_AS(harmonic(Word::from_letters("01"), e(2)), std::domain_error);

  // H_N is a ring map for the harmonic product
  const auto words = h1_words_up_to(4);
  for (const auto& a : words)
    for (const auto& b : words) {
      const LinComb ab = harmonic(a, b);
      CHECK(truncated_sum(ab, 7) == truncated_sum(LinComb(a), 7) * truncated_sum(LinComb(b), 7));
    }
}

TEST_CASE("shuffle product") {
  CHECK(shuffle(e(1), e(1)) == 2 * LinComb(Word::from_letters("11")));
  CHECK(shuffle(e(2), e(1)) == idx({2, 1}) + 2 * idx({1, 2}));
  CHECK(shuffle(LinComb::one(), LinComb(e(3))) == LinComb(e(3)));
  CHECK(shuffle(Word::from_letters("0"), Word::from_letters("1")) ==
        LinComb(Word::from_letters("01")) + LinComb(Word::from_letters("10")));

  for (int wa = 1; wa <= 4; ++wa)
    for (int wb = 1; wb <= 4; ++wb)
      for (const auto& a : h1_words(wa))
        for (const auto& b : h1_words(wb)) {
          const LinComb s = shuffle(a, b);
          CHECK(s == letter_shuffle_oracle(a, b));
          CHECK(coefficient_mass(s) == binom(wa + wb, wa));
        }
}

TEST_CASE("Muneta's block shuffle") {
  CHECK(to_index_string(muneta_shuffle(e(2), e(3))) == "e(2,3)+e(3,2)");
  const LinComb m = muneta_shuffle(word_from_index(Index{1, 3}), e(2));
  CHECK(m.size() == 3);
  CHECK(m == idx({1, 3, 2}) + idx({1, 2, 3}) + idx({2, 1, 3}));
  CHECK(muneta_shuffle(LinComb(e(5)), LinComb::one()) == LinComb(e(5)));
  for (int wa = 1; wa <= 4; ++wa)
    for (int wb = 1; wb <= 4; ++wb)
      for (const auto& ka : enumerate_weight(wa))
        for (const auto& kb : enumerate_weight(wb))
          CHECK(muneta_shuffle(word_from_index(ka), word_from_index(kb)) == block_shuffle_oracle(ka, kb));
  CHECK_THROWS_AS(muneta_shuffle(Word::from_letters("0"), e(1)), std::domain_error);
}

TEST_CASE("dual") {
  CHECK(dual(word_from_index(Index{1, 2})) == word_from_index(Index{3}));
  CHECK(dual(word_from_index(Index{2})) == word_from_index(Index{2}));
  for (int w = 2; w <= 8; ++w)
    for (const auto& k : enumerate_weight(w)) {
      if (!k.admissible()) continue;
      const Word x = word_from_index(k);
      const Word d = dual(x);
      CHECK(d.in_h0());
      CHECK(d.size() == x.size());
      CHECK(dual(d) == x);
    }
  // ({1}^a,2,{1}^b) with b = 0 is admissible; its dual is again admissible
  for (int a = 0; a <= 4; ++a) {
    std::vector<int> parts(static_cast<std::size_t>(a), 1);
    parts.push_back(2);
    const Word d = dual(word_from_index(Index(parts)));
    CHECK(d.in_h0());
    CHECK(d.size() == static_cast<std::size_t>(a + 2));
  }
  CHECK_THROWS_AS(dual(word_from_index(Index{2, 1})), std::domain_error);
  CHECK_THROWS_AS(dual(Word{}), std::domain_error);
}

TEST_CASE("h0 closure and grading") {
  const auto words = h1_words_up_to(4);
  for (const auto& a : words)
    for (const auto& b : words)
      for (Product p : {Product::harmonic, Product::shuffle, Product::muneta}) {
        const LinComb r = multiply(p, a, b);
        for (const auto& [w, c] : r.terms()) CHECK(w.size() == a.size() + b.size());
        if (a.in_h0() && b.in_h0() && p != Product::muneta) CHECK(r.in_h0());
      }
}

TEST_CASE("product cache does not change results") {
  const auto words = h1_words_up_to(4);
  std::vector<LinComb> cached;
  for (const auto& a : words)
    for (const auto& b : words) {
      cached.push_back(harmonic(a, b));
      cached.push_back(shuffle(a, b));
      cached.push_back(muneta_shuffle(a, b));
    }
  set_product_cache_enabled(false);
  clear_product_cache();
  std::size_t i = 0;
  for (const auto& a : words)
    for (const auto& b : words) {
      CHECK(harmonic(a, b) == cached[i++]);
      CHECK(shuffle(a, b) == cached[i++]);
      CHECK(muneta_shuffle(a, b) == cached[i++]);
    }
  set_product_cache_enabled(true);
}

TEST_CASE("linear combinations") {
  LinComb a = idx({2}) + idx({1, 1});
  a -= idx({2});
  CHECK(a == idx({1, 1}));
  a *= 0;
  CHECK(a.is_zero());
  LinComb b(e(2), make_rational(3, 2));
  b.add_term(e(2), make_rational(-3, 2));
  CHECK(b.is_zero());
  CHECK(power(Product::shuffle, LinComb(e(1)), 3) == 6 * LinComb(Word::from_letters("111")));
  CHECK(power(Product::harmonic, LinComb(e(1)), 0) == LinComb::one());
}

TEST_CASE("rendering") {
  LinComb a(Word::from_letters("10"), make_rational(3, 2));
  a.add_term(Word::from_letters("110"), -1);
  CHECK(to_string(a) == "3/2·e1e0 − e1e1e0");
  CHECK(to_string(LinComb{}) == "0");
  CHECK(to_string(LinComb::one()) == "1");
  CHECK(to_index_string(harmonic(e(1), e(1))) == "2·e(1,1)+e(2)");
}
