#include "fmzv/index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fmzv {

namespace {

void check_parts(const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 1) throw std::domain_error("Index: parts must be positive");
}

void compositions(int remaining, int slots, std::vector<int>& cur, std::vector<Index>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int first = 1; first <= remaining - (slots - 1); ++first) {
    cur.push_back(first);
    compositions(remaining - first, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Index::Index(std::initializer_list<int> parts) : parts_(parts) { check_parts(parts_); }

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) { check_parts(parts_); }

Index Index::repeat(int k, int r) {
  if (r < 0) throw std::domain_error("Index::repeat: negative count");
  return Index(std::vector<int>(static_cast<std::size_t>(r), k));
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Index Index::reversed() const {
  Index out;
  out.parts_.assign(parts_.rbegin(), parts_.rend());
  return out;
}

Index Index::slice(std::size_t first, std::size_t last) const {
  Index out;
  out.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(first),
                    parts_.begin() + static_cast<std::ptrdiff_t>(last));
  return out;
}

Index& Index::append(const Index& tail) {
  parts_.insert(parts_.end(), tail.parts_.begin(), tail.parts_.end());
  return *this;
}

Index& Index::push_back(int part) {
  if (part < 1) throw std::domain_error("Index: parts must be positive");
  parts_.push_back(part);
  return *this;
}

Index concat(Index head, const Index& tail) { return head.append(tail); }

std::string to_string(const Index& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.depth(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s + ")";
}

Index parse_index(std::string_view text) {
  if (!text.empty() && text.front() == '(') text.remove_prefix(1);
  if (!text.empty() && text.back() == ')') text.remove_suffix(1);
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("parse_index: bad part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Index(std::move(parts));
}

std::vector<Index> enumerate_Ikr(int k, int r) {
  if (r < 1 || r > k) throw std::domain_error("enumerate_Ikr: need 1 <= r <= k");
  std::vector<Index> out;
  std::vector<int> cur;
  compositions(k, r, cur, out);
  return out;
}

std::vector<Index> enumerate_Ikri(int k, int r, int i) {
  if (r >= k || i < 1 || i > r) throw std::domain_error("enumerate_Ikri: need 1 <= i <= r < k");
  std::vector<Index> out;
  for (auto& idx : enumerate_Ikr(k, r))
    if (idx[static_cast<std::size_t>(i - 1)] >= 2) out.push_back(std::move(idx));
  return out;
}

std::vector<Index> enumerate_weight(int w) {
  if (w < 0) throw std::domain_error("enumerate_weight: negative weight");
  if (w == 0) return {Index{}};
  std::vector<Index> out;
  for (int r = 1; r <= w; ++r)
    for (auto& idx : enumerate_Ikr(w, r)) out.push_back(std::move(idx));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> comma_plus_contractions(const Index& k) {
  if (k.empty()) return {Index{}};
  std::vector<Index> out;
  const std::size_t gaps = k.depth() - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
    std::vector<int> parts{k[0]};
    for (std::size_t g = 0; g < gaps; ++g) {
      if (mask & (std::size_t{1} << g))
        parts.back() += k[g + 1];
      else
        parts.push_back(k[g + 1]);
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::domain_error("SetPartition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

BigInt SetPartition::c() const {
  BigInt r = 1;
  for (const auto& b : blocks_) r *= factorial(static_cast<long>(b.size()) - 1);
  return r;
}

std::vector<int> SetPartition::block_sums(const Index& k) const {
  std::vector<int> sums;
  sums.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    int s = 0;
    for (int j : b) {
      if (j < 1 || static_cast<std::size_t>(j) > k.depth())
        throw std::domain_error("SetPartition::block_sums: index depth mismatch");
      s += k[static_cast<std::size_t>(j - 1)];
    }
    sums.push_back(s);
  }
  return sums;
}

std::vector<SetPartition> enumerate_set_partitions(int r) {
  if (r < 1) throw std::domain_error("enumerate_set_partitions: need r >= 1");
  const auto n = static_cast<std::size_t>(r);
  std::vector<SetPartition> out;
  // restricted growth string: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<std::size_t> a(n, 0), prefix_max(n, 0);
  while (true) {
    std::vector<std::vector<int>> blocks(prefix_max[n - 1] + 1);
    for (std::size_t i = 0; i < n; ++i) blocks[a[i]].push_back(static_cast<int>(i) + 1);
    out.emplace_back(std::move(blocks));

    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return out;
}

}  // namespace fmzv
