#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fmzv/bigreal.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

/// Products of zeta(2) with odd zeta values, all of weight w. At the supported
/// weights these are taken to span zeta(2) Z in weight w.
struct SpanningSet {
  int weight = 0;
  std::vector<std::pair<std::string, BigReal>> generators;
};

/// Throws CapabilityError unless 2 <= w <= 9.
SpanningSet spanning_set(int w, int digits);

enum class Mod2Verdict { residue_zero, inconclusive };

struct Mod2Result {
  Mod2Verdict verdict = Mod2Verdict::inconclusive;
  /// x = sum q_i gen_i, on residue_zero.
  std::vector<std::pair<std::string, BigRational>> coefficients;
  /// |x - sum q_i gen_i| for the returned coefficients.
  BigReal residual = 0;
};

/// Looks for small rational q_i with |x - sum q_i gen_i| <= 10 * 10^{1-digits}.
/// With one generator the denominator bound is `bound`; with several, a
/// common denominator of at most 60 is searched with numerators up to
/// 8 times it. Heuristic: "inconclusive" says nothing about membership.
Mod2Result reduce_mod_zeta2(const BigReal& x, int w, int digits, long bound = 1000000);

std::string to_string(Mod2Verdict v);
/// "residue-zero: 1*Z(2)Z(3)" or "inconclusive"
std::string to_string(const Mod2Result& r);

}  // namespace fmzv
