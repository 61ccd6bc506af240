#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "fmzv/rational.hpp"

namespace fmzv {

/// A tuple of positive integers (k_1, ..., k_r), stored left to right as
/// written. Admissibility refers to the last part. The empty index has
/// weight 0 and depth 0 and is admissible.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> parts);
  explicit Index(std::vector<int> parts);

  /// {k}^r
  static Index repeat(int k, int r);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t depth() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  bool admissible() const { return parts_.empty() || parts_.back() >= 2; }

  Index reversed() const;
  /// Parts [first, last).
  Index slice(std::size_t first, std::size_t last) const;

  Index& append(const Index& tail);
  Index& push_back(int part);

  auto operator<=>(const Index&) const = default;
  bool operator==(const Index&) const = default;

 private:
  std::vector<int> parts_;
};

Index concat(Index head, const Index& tail);

/// "(2,3)"; the empty index renders as "()".
std::string to_string(const Index& k);

/// Parses "2,3" or "(2,3)"; "" and "()" give the empty index.
Index parse_index(std::string_view text);

/// All compositions of k into r positive parts, lexicographic order.
/// Throws std::domain_error unless 1 <= r <= k.
std::vector<Index> enumerate_Ikr(int k, int r);

/// Members of I_{k,r} whose i-th part (1-based) is at least 2.
/// Throws std::domain_error unless 1 <= i <= r < k.
std::vector<Index> enumerate_Ikri(int k, int r, int i);

/// All indices of weight exactly w (every depth), lexicographic.
std::vector<Index> enumerate_weight(int w);

/// All indices obtained by replacing each comma of k by either a comma or a
/// plus. Used for the star expansion.
std::vector<Index> comma_plus_contractions(const Index& k);

/// A set partition of {1..r}; blocks hold 1-based elements in increasing
/// order and are ordered by their smallest element.
class SetPartition {
 public:
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  /// c(B) = prod (#B_i - 1)!
  BigInt c() const;
  /// b_i(k) = sum_{j in B_i} k_j for every block.
  std::vector<int> block_sums(const Index& k) const;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// Every set partition of {1..r} exactly once (restricted growth strings).
/// Throws std::domain_error for r = 0.
std::vector<SetPartition> enumerate_set_partitions(int r);

}  // namespace fmzv
