#pragma once

#include <ostream>
#include <utility>

#include "fmzv/rational.hpp"

namespace fmzv {

/// The six parts I..VI of C and their total.
struct CDecomposition {
  int a = 0, b = 0;
  BigRational I, II, III, IV, V, VI;
  BigRational C;
};

/// Every part summed term by term; C is their sum.
CDecomposition compute_C_bruteforce(int a, int b);
/// C straight from its three-sum definition (before the split into six parts).
BigRational compute_C_direct(int a, int b);
/// Closed forms of the six parts; I is taken as 0, valid for a+b even.
CDecomposition closed_forms(int a, int b);
/// 1 + (-1)^a binom(a+b+3, b+2)
BigRational expected_C(int a, int b);

/// Both sides of sum_{k=0}^n (-1)^k binom(n,k)/(x+k) = n!/(x(x+1)...(x+n)).
/// Throws std::domain_error at a pole.
std::pair<BigRational, BigRational> pfd_identity(int n, const BigRational& x);

/// b_{k,r,i} and b*_{k,r,i} of the F_2 sum formula over I_{k,r,i}.
BigRational b_coefficient(int k, int r, int i);
BigRational b_star_coefficient(int k, int r, int i);

/// Left-hand sides of the four binomial identities adding up to the
/// induction step (r-i) b_{k,r,i} + i b_{k,r,i+1} - (k-r) b_{k,r-1,i}; each is 0.
struct InductionTerms {
  BigRational first, second, third, fourth;
  BigRational total;       // the b-combination itself
  BigRational total_star;  // same for b*
};
InductionTerms induction_terms(int k, int r, int i);

/// CSV rows for 0 <= a, b <= amax with a+b even:
/// a,b,I,II,III,IV,V,VI,C_bruteforce,C_closed,C_expected,status.
/// Returns the number of rows written.
std::size_t write_appendix_csv(std::ostream& os, int amax);

}  // namespace fmzv
