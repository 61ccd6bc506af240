#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fmzv/index.hpp"
#include "fmzv/residue.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

/// Multiple harmonic sums at one prime and level, cached by index.
/// Safe to share between threads.
class MhsEngine {
 public:
  MhsEngine(std::uint64_t p, int n);

  const Modulus& modulus() const { return mod_; }

  /// sum_{0<n_1<...<n_r<p} 1/(n_1^{k_1}...n_r^{k_r}) mod p^n
  Residue mhs(const Index& k);
  /// same with 1 <= n_1 <= ... <= n_r <= p-1
  Residue mhs_star(const Index& k);

 private:
  const std::vector<Residue>& inverse_powers(int k);
  Residue compute(const Index& k, bool star);

  Modulus mod_;
  std::mutex mutex_;
  std::vector<Residue> inv_;
  std::map<int, std::vector<Residue>> inverse_powers_;
  std::map<std::pair<Index, bool>, Residue> cache_;
};

/// Process-wide engine for (p, n).
MhsEngine& mhs_engine(std::uint64_t p, int n);

Residue mhs(std::uint64_t p, int n, const Index& k);
Residue mhs_star(std::uint64_t p, int n, const Index& k);

AnValue zetaA(const Index& k, const PrimeWindow& window, int n);
AnValue zetaA_star(const Index& k, const PrimeWindow& window, int n);

/// Linear extension of e_k -> zeta_{A_n}(k); requires a in h^1.
AnValue Z_A(const LinComb& a, const PrimeWindow& window, int n);
/// Linear extension of e_k -> zeta*_{A_n}(k).
AnValue Z_A_star(const LinComb& a, const PrimeWindow& window, int n);

/// Right-hand side of the shuffle relation:
/// (-1)^{wt l} sum_{l', wt l' <= n-1} prod binom(l_j+l'_j-1, l'_j) Z(e_k e_{rev(l+l')}) p^{wt l'}.
AnValue shuffle_rhs_A(const Index& k, const Index& l, const PrimeWindow& window, int n);

/// The constant family c at every prime, skipping primes dividing its denominator.
AnValue constant_A(const BigRational& c, const PrimeWindow& window, int n);
/// The family p mod p^n.
AnValue p_A(const PrimeWindow& window, int n);

}  // namespace fmzv
