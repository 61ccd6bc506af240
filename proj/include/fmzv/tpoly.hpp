#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fmzv {

/// c_0 + c_1 t + ... + c_{n-1} t^{n-1} in C[t]/(t^n).
template <class C>
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(int n, const C& zero = C(0)) : c_(check(n), zero), zero_(zero) {}

  int level() const { return static_cast<int>(c_.size()); }
  const C& operator[](std::size_t i) const { return c_[i]; }
  C& operator[](std::size_t i) { return c_[i]; }
  const std::vector<C>& coeffs() const { return c_; }

  TPoly& operator+=(const TPoly& rhs) {
    same_level(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
    return *this;
  }
  TPoly& operator-=(const TPoly& rhs) {
    same_level(rhs);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
    return *this;
  }
  TPoly& operator*=(const C& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  TPoly& operator*=(const TPoly& rhs) {
    same_level(rhs);
    std::vector<C> out(c_.size(), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; i + j < c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    c_ = std::move(out);
    return *this;
  }

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }

 private:
  static std::size_t check(int n) {
    if (n < 1) throw std::domain_error("TPoly: truncation level must be positive");
    return static_cast<std::size_t>(n);
  }
  void same_level(const TPoly& rhs) const {
    if (rhs.c_.size() != c_.size()) throw std::domain_error("TPoly: level mismatch");
  }

  std::vector<C> c_;
  C zero_{};
};

}  // namespace fmzv
