#include "fmzv/mhs.hpp"

#include <functional>
#include <stdexcept>

#include "fmzv/errors.hpp"

namespace fmzv {

MhsEngine::MhsEngine(std::uint64_t p, int n) : mod_(p, n), inv_(batch_inverses(mod_, p - 1)) {}

const std::vector<Residue>& MhsEngine::inverse_powers(int k) {
  auto it = inverse_powers_.find(k);
  if (it != inverse_powers_.end()) return it->second;
  std::vector<Residue> v(inv_.size(), Residue(mod_, 0));
  for (std::size_t m = 1; m < inv_.size(); ++m) v[m] = inv_[m].pow(static_cast<std::uint64_t>(k));
  return inverse_powers_.emplace(k, std::move(v)).first->second;
}

Residue MhsEngine::compute(const Index& k, bool star) {
  const std::size_t r = k.depth();
  const std::uint64_t top = mod_.p - 1;
  std::vector<const std::vector<Residue>*> pw(r);
  for (std::size_t j = 0; j < r; ++j) pw[j] = &inverse_powers(k[j]);
  // s[j] = sum over chains using the first j parts with largest variable <= m
  std::vector<Residue> s(r + 1, Residue(mod_, 0));
  s[0] = Residue(mod_, 1);
  for (std::uint64_t m = 1; m <= top; ++m) {
    if (star) {
      for (std::size_t j = 1; j <= r; ++j) s[j] += s[j - 1] * (*pw[j - 1])[m];
    } else {
      for (std::size_t j = r; j >= 1; --j) s[j] += s[j - 1] * (*pw[j - 1])[m];
    }
  }
  return s[r];
}

Residue MhsEngine::mhs(const Index& k) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(k, false);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Residue v = compute(k, false);
  cache_.emplace(std::move(key), v);
  return v;
}

Residue MhsEngine::mhs_star(const Index& k) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(k, true);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Residue v = compute(k, true);
  cache_.emplace(std::move(key), v);
  return v;
}

MhsEngine& mhs_engine(std::uint64_t p, int n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, int>, std::unique_ptr<MhsEngine>> engines;
  std::lock_guard lock(mutex);
  auto& slot = engines[{p, n}];
  if (!slot) slot = std::make_unique<MhsEngine>(p, n);
  return *slot;
}

Residue mhs(std::uint64_t p, int n, const Index& k) { return mhs_engine(p, n).mhs(k); }

Residue mhs_star(std::uint64_t p, int n, const Index& k) { return mhs_engine(p, n).mhs_star(k); }

namespace {

AnValue per_prime(const PrimeWindow& window, int n, const std::function<Residue(MhsEngine&)>& f) {
  if (window.empty()) throw std::domain_error("empty prime window");
  AnValue out(n);
  for (std::uint64_t p : window) {
    try {
      out.set(p, f(mhs_engine(p, n)));
    } catch (const SkipPrime& e) {
      out.skip(p, e.what());
    }
  }
  return out;
}

AnValue linear(const LinComb& a, const PrimeWindow& window, int n, bool star) {
  if (!a.in_h1()) throw std::domain_error("Z_A: operand not in h^1");
  return per_prime(window, n, [&](MhsEngine& eng) {
    Residue acc(eng.modulus(), 0);
    for (const auto& [w, c] : a.terms()) {
      const Index k = index_from_word(w);
      acc += Residue::from_rational(eng.modulus(), c) * (star ? eng.mhs_star(k) : eng.mhs(k));
    }
    return acc;
  });
}

// all l' in Z_{>=0}^s with weight <= cap
void bounded_tuples(std::size_t s, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == s) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= cap; ++v) {
    cur.push_back(v);
    bounded_tuples(s, cap - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

AnValue zetaA(const Index& k, const PrimeWindow& window, int n) {
  return per_prime(window, n, [&](MhsEngine& eng) { return eng.mhs(k); });
}

AnValue zetaA_star(const Index& k, const PrimeWindow& window, int n) {
  return per_prime(window, n, [&](MhsEngine& eng) { return eng.mhs_star(k); });
}

AnValue Z_A(const LinComb& a, const PrimeWindow& window, int n) { return linear(a, window, n, false); }

AnValue Z_A_star(const LinComb& a, const PrimeWindow& window, int n) { return linear(a, window, n, true); }

AnValue shuffle_rhs_A(const Index& k, const Index& l, const PrimeWindow& window, int n) {
  if (l.empty()) throw std::domain_error("shuffle_rhs_A: l must be nonempty");
  std::vector<std::vector<int>> shifts;
  std::vector<int> cur;
  bounded_tuples(l.depth(), n - 1, cur, shifts);

  struct Term {
    BigRational coeff;
    int x_power;
    Index index;
  };
  std::vector<Term> terms;
  const BigRational sign(sign_pow(l.weight()));
  for (const auto& lp : shifts) {
    BigRational c = sign;
    int wt = 0;
    std::vector<int> rev;
    for (std::size_t j = 0; j < l.depth(); ++j) {
      c *= binom(l[j] + lp[j] - 1, lp[j]);
      wt += lp[j];
    }
    for (std::size_t j = l.depth(); j-- > 0;) rev.push_back(l[j] + lp[j]);
    terms.push_back({c, wt, concat(k, Index(rev))});
  }
  return per_prime(window, n, [&](MhsEngine& eng) {
    const Modulus& m = eng.modulus();
    Residue acc(m, 0);
    for (const auto& t : terms) {
      if (t.x_power >= n) continue;
      const Residue x = Residue(m, m.p).pow(static_cast<std::uint64_t>(t.x_power));
      acc += Residue::from_rational(m, t.coeff) * x * eng.mhs(t.index);
    }
    return acc;
  });
}

AnValue constant_A(const BigRational& c, const PrimeWindow& window, int n) {
  return per_prime(window, n, [&](MhsEngine& eng) { return Residue::from_rational(eng.modulus(), c); });
}

AnValue p_A(const PrimeWindow& window, int n) {
  return per_prime(window, n, [&](MhsEngine& eng) { return Residue(eng.modulus(), eng.modulus().p); });
}

}  // namespace fmzv
