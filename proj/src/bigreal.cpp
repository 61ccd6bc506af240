#include "fmzv/bigreal.hpp"

#include <iomanip>
#include <sstream>

namespace fmzv {

std::recursive_mutex& PrecisionGuard::mutex() {
  static std::recursive_mutex m;
  return m;
}

std::string to_string(const BigReal& x, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits) << x;
  return os.str();
}

BigReal ten_to_minus(int e) { return boost::multiprecision::pow(BigReal(10), -e); }

}  // namespace fmzv
