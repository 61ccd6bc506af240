#pragma once

#include <vector>

#include "fmzv/word.hpp"

namespace fmzv {

/// sum_i a_i . e1^{.i} for a fixed product ".", each a_i supported in h^0.
struct PolyInE1 {
  Product product = Product::shuffle;
  std::vector<LinComb> coeffs;

  /// Coefficient of e1^{.i}; zero beyond the stored degree.
  LinComb coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : LinComb{}; }
};

/// Unique expression of an element of h^1 as a polynomial in e1 over h^0.
/// Only the harmonic and shuffle products are supported.
PolyInE1 decompose(const LinComb& a, Product p);
PolyInE1 decompose(const Word& w, Product p);

/// sum_i a_i . e1^{.i}
LinComb reconstruct(const PolyInE1& poly);

/// Constant term a_0 of decompose().
LinComb reg(const LinComb& a, Product p);
LinComb reg(const Word& w, Product p);

/// reg_sh(w' e0 e1^m) = (-1)^m (w' sh e1^m) e0. Requires w' e0 in h^0.
LinComb reg_sh_closed_form(const Word& w_prime, int m);

void clear_regularization_cache();

}  // namespace fmzv
