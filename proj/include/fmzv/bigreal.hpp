#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <mutex>
#include <string>

namespace fmzv {

using BigReal = boost::multiprecision::mpfr_float;

/// Sets the default working precision (decimal digits) and restores the
/// previous one on destruction. The default precision is process-wide, so
/// guards also serialize numeric work across threads; nesting on one thread
/// is fine.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : lock_(mutex()), saved_(BigReal::default_precision()) {
    BigReal::default_precision(digits);
  }
  ~PrecisionGuard() { BigReal::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  static std::recursive_mutex& mutex();

  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

/// Working digits used internally for a requested accuracy of D digits.
constexpr unsigned working_digits(int D) { return static_cast<unsigned>(D) + 15; }

/// Scientific notation with the given number of significant digits.
std::string to_string(const BigReal& x, int digits);

/// 10^{-e}
BigReal ten_to_minus(int e);

}  // namespace fmzv
