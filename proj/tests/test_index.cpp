#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fmzv/index.hpp"
#include "fmzv/rational.hpp"

using namespace fmzv;

namespace {

// every word over {1..k} of length r summing to k, by brute force
std::set<std::vector<int>> all_compositions(int k, int r) {
  std::set<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 1);
  while (true) {
    int s = 0;
    for (int x : cur) s += x;
    if (s == k) out.insert(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == k) cur[i++] = 1;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

// Bell numbers via the Bell triangle
std::vector<long> bell_numbers(int upto) {
  std::vector<long> bell{1};
  std::vector<long> row{1};
  for (int i = 1; i <= upto; ++i) {
    std::vector<long> next{row.back()};
    for (long x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

}  // namespace

TEST_CASE("index basics") {
  Index k{2, 3};
  CHECK(k.weight() == 5);
  CHECK(k.depth() == 2);
  CHECK(k.admissible());
  CHECK_FALSE(Index({3, 1}).admissible());
  CHECK(Index{}.admissible());
  CHECK(Index{}.weight() == 0);
  CHECK(k.reversed() == Index{3, 2});
  CHECK(Index::repeat(2, 3) == Index{2, 2, 2});
  CHECK(to_string(k) == "(2,3)");
  CHECK(to_string(Index{}) == "()");
  CHECK_THROWS_AS(Index({1, 0}), std::domain_error);
}

TEST_CASE("parse_index") {
  CHECK(parse_index("2,3") == Index{2, 3});
  CHECK(parse_index("(1,2,1)") == Index{1, 2, 1});
  CHECK(parse_index("") == Index{});
  CHECK(parse_index("()") == Index{});
  CHECK_THROWS(parse_index("2,x"));
  CHECK_THROWS(parse_index("0"));
}

TEST_CASE("enumerate_Ikr") {
  auto v = enumerate_Ikr(3, 2);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == Index{1, 2});
  CHECK(v[1] == Index{2, 1});
  CHECK(enumerate_Ikr(4, 4) == std::vector<Index>{Index{1, 1, 1, 1}});
  CHECK(enumerate_Ikr(5, 3).size() == 6);

  for (int k = 1; k <= 14; ++k)
    for (int r = 1; r <= k; ++r) CHECK(BigRational(enumerate_Ikr(k, r).size()) == binom(k - 1, r - 1));

  for (int k = 1; k <= 7; ++k)
    for (int r = 1; r <= k; ++r) {
      std::set<std::vector<int>> got;
      for (const auto& idx : enumerate_Ikr(k, r)) got.insert(idx.parts());
      CHECK(got == all_compositions(k, r));
    }

  auto w = enumerate_Ikr(6, 3);
  CHECK(std::is_sorted(w.begin(), w.end()));

  CHECK_THROWS_AS(enumerate_Ikr(3, 4), std::domain_error);
  CHECK_THROWS_AS(enumerate_Ikr(3, 0), std::domain_error);
}

TEST_CASE("enumerate_Ikri") {
  CHECK(enumerate_Ikri(3, 2, 2) == std::vector<Index>{Index{1, 2}});
  CHECK(enumerate_Ikri(4, 3, 1) == std::vector<Index>{Index{2, 1, 1}});
  CHECK(enumerate_Ikri(6, 3, 2).size() == 6);

  for (int k = 2; k <= 10; ++k)
    for (int r = 1; r < k; ++r) {
      std::size_t with_multiplicity = 0;
      for (const auto& idx : enumerate_Ikr(k, r))
        for (int part : idx.parts()) with_multiplicity += part >= 2;
      std::size_t total = 0;
      for (int i = 1; i <= r; ++i) {
        auto sub = enumerate_Ikri(k, r, i);
        for (const auto& idx : sub) CHECK(idx[static_cast<std::size_t>(i - 1)] >= 2);
        total += sub.size();
      }
      CHECK(total == with_multiplicity);
    }

  CHECK_THROWS_AS(enumerate_Ikri(4, 4, 1), std::domain_error);
  CHECK_THROWS_AS(enumerate_Ikri(5, 3, 0), std::domain_error);
  CHECK_THROWS_AS(enumerate_Ikri(5, 3, 4), std::domain_error);
}

TEST_CASE("set partitions") {
  auto two = enumerate_set_partitions(2);
  REQUIRE(two.size() == 2);
  for (const auto& b : two) CHECK(b.c() == 1);

  const auto bell = bell_numbers(8);
  for (int r = 1; r <= 8; ++r) CHECK(enumerate_set_partitions(r).size() == static_cast<std::size_t>(bell[static_cast<std::size_t>(r)]));

  for (int r = 1; r <= 6; ++r) {
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& part : enumerate_set_partitions(r)) {
      CHECK(seen.insert(part.blocks()).second);
      std::vector<int> all;
      for (const auto& b : part.blocks()) all.insert(all.end(), b.begin(), b.end());
      std::sort(all.begin(), all.end());
      std::vector<int> expect(static_cast<std::size_t>(r));
      std::iota(expect.begin(), expect.end(), 1);
      CHECK(all == expect);
    }
  }

  SetPartition p({{1, 3}, {2}});
  CHECK(p.block_sums(Index{1, 2, 3}) == std::vector<int>{4, 2});
  CHECK(p.c() == 1);
  CHECK(SetPartition({{1, 2, 3}}).c() == 2);
  CHECK_THROWS_AS(p.block_sums(Index{1, 2}), std::domain_error);
  CHECK_THROWS_AS(enumerate_set_partitions(0), std::domain_error);
}

TEST_CASE("comma/plus contractions") {
  auto v = comma_plus_contractions(Index{1, 2, 3});
  CHECK(v.size() == 4);
  std::set<Index> s(v.begin(), v.end());
  CHECK(s == std::set<Index>{Index{1, 2, 3}, Index{3, 3}, Index{1, 5}, Index{6}});
  CHECK(comma_plus_contractions(Index{}) == std::vector<Index>{Index{}});
}

TEST_CASE("binomials") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(-2, 3) == -4);
  CHECK(binom(2, 5) == 0);
  CHECK(binom(7, 0) == 1);
  CHECK(falling(4, 2) == 12);
  CHECK(falling(4, 0) == 1);
  CHECK(falling(3, 5) == 0);
  CHECK_THROWS_AS(binom(3, -1), std::domain_error);
  CHECK_THROWS_AS(falling(3, -1), std::domain_error);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(0, 12);
  for (int t = 0; t < 50; ++t) {
    const int m = d(rng), n = d(rng), r = d(rng);
    BigRational lhs = 0;
    for (int k = 0; k <= r; ++k) lhs += binom(m, k) * binom(n, r - k);
    CHECK(lhs == binom(m + n, r));
  }
}
