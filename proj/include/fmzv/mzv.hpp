#pragma once

#include <utility>

#include "fmzv/bigreal.hpp"
#include "fmzv/index.hpp"
#include "fmzv/tpoly.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

/// Largest weight the numeric evaluator accepts.
constexpr int kMaxNumericWeight = 20;

/// Li_k(1/2) = sum_{0<n_1<...<n_r} 2^{-n_r} / (n_1^{k_1}...n_r^{k_r}) for a
/// nonempty word in h^1 (any last part).
BigReal li_half(const Word& w, int digits);

/// zeta of an admissible word, error <= 10^{1-digits}.
BigReal mzv_word(const Word& w, int digits);
BigReal mzv(const Index& k, int digits);
BigReal mzv_star(const Index& k, int digits);

/// Z on h^0, extended linearly.
BigReal Z_real(const LinComb& a, int digits);

/// zeta^.(k) = Z(reg_.(e_k)) for any index.
BigReal mzv_reg(const Index& k, Product p, int digits);

/// Coefficients of zeta^._{S-hat}(k) below t^n.
TPoly<BigReal> symmetric_hat(const Index& k, Product p, int n, int digits);
/// Comma/plus expansion of symmetric_hat.
TPoly<BigReal> symmetric_hat_star(const Index& k, Product p, int n, int digits);

/// Both sides of zeta({2}^a,3,{2}^b) = 2 sum_r (-1)^r {...} zeta({2}^{a+b-r+1}) zeta(2r+1).
std::pair<BigReal, BigReal> zagier_theorem1_exact(int a, int b, int digits);
/// Both sides of Zagier's evaluation of zeta(m,n), m+n odd, n >= 2.
std::pair<BigReal, BigReal> zagier_theorem2_exact(int m, int n, int digits);

/// Coefficient of zeta(2a+2b+3) left after dropping every term of the
/// theorem containing zeta(2), computed from the sum.
BigRational zagier1_surviving_coefficient(int a, int b);
/// The displayed mod-zeta(2) coefficient
/// 2(-1)^{a+b+1}{binom(2a+2b+2,2a+2) - (1-4^{-(a+b+1)}) binom(2a+2b+2,2b+1)}.
BigRational zagier1_mod_zeta2_coefficient(int a, int b);
/// Same two routes for zeta(m,n): the s = 0 term with zeta(0) = -1/2, and
/// (-1)^{m+1} (1/2) {binom(k,m) + (-1)^m}.
BigRational zagier2_surviving_coefficient(int m, int n);
BigRational zagier2_mod_zeta2_coefficient(int m, int n);

}  // namespace fmzv
