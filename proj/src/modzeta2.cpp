#include "fmzv/modzeta2.hpp"

#include <cmath>
#include <map>

#include "fmzv/errors.hpp"
#include "fmzv/mzv.hpp"

namespace fmzv {

namespace {

// zeta(2)^a times odd zeta values
const std::map<int, std::vector<std::vector<int>>>& generator_table() {
  static const std::map<int, std::vector<std::vector<int>>> table = {
      {2, {{2}}},
      {3, {}},
      {4, {{2, 2}}},
      {5, {{2, 3}}},
      {6, {{2, 2, 2}}},
      {7, {{2, 5}, {2, 2, 3}}},
      {8, {{2, 3, 3}, {2, 2, 2, 2}}},
      {9, {{2, 7}, {2, 2, 5}, {2, 2, 2, 3}}},
  };
  return table;
}

std::string label(const std::vector<int>& factors) {
  std::string s;
  for (int f : factors) s += "Z(" + std::to_string(f) + ")";
  return s;
}

BigReal to_real(const BigRational& q) {
  return BigReal(q.get_num().get_str()) / BigReal(q.get_den().get_str());
}

// Best rational approximation with denominator <= bound.
BigRational continued_fraction(const BigReal& y, long bound) {
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  BigReal rest = y;
  for (int step = 0; step < 64; ++step) {
    const BigReal fl = floor(rest);
    BigInt a;
    mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDD);
    const BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > bound) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const BigReal frac = rest - fl;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  BigRational q(h1, k1);
  q.canonicalize();
  return q;
}

}  // namespace

SpanningSet spanning_set(int w, int digits) {
  auto it = generator_table().find(w);
  if (it == generator_table().end())
    throw CapabilityError("modzeta2: weight " + std::to_string(w) + " not supported (2..9)");
  PrecisionGuard guard(working_digits(digits));
  SpanningSet set;
  set.weight = w;
  for (const auto& factors : it->second) {
    BigReal v = 1;
    for (int f : factors) v *= mzv(Index{f}, digits);
    set.generators.emplace_back(label(factors), v);
  }
  return set;
}

Mod2Result reduce_mod_zeta2(const BigReal& x, int w, int digits, long bound) {
  const SpanningSet set = spanning_set(w, digits);
  PrecisionGuard guard(working_digits(digits));
  const BigReal tol = 10 * ten_to_minus(digits - 1);
  Mod2Result out;
  auto accept = [&](std::vector<BigRational> q) {
    BigReal r = x;
    for (std::size_t i = 0; i < q.size(); ++i) r -= to_real(q[i]) * set.generators[i].second;
    if (abs(r) > tol) return false;
    out.verdict = Mod2Verdict::residue_zero;
    out.residual = abs(r);
    for (std::size_t i = 0; i < q.size(); ++i) out.coefficients.emplace_back(set.generators[i].first, q[i]);
    return true;
  };

  const std::size_t g = set.generators.size();
  if (g == 0) {
    accept({});
    if (out.verdict == Mod2Verdict::inconclusive) out.residual = abs(x);
    return out;
  }
  if (g == 1) {
    if (!accept({continued_fraction(x / set.generators[0].second, bound)})) out.residual = abs(x);
    return out;
  }

  const double xd = x.convert_to<double>();
  std::vector<double> gd;
  for (const auto& [name, v] : set.generators) gd.push_back(v.convert_to<double>());
  const double last = gd.back();
  const long dmax = std::min<long>(60, bound);
  std::vector<long long> num(g - 1);
  for (long d = 1; d <= dmax; ++d) {
    const long long nmax = 8 * d;
    std::fill(num.begin(), num.end(), -nmax);
    while (true) {
      double partial = xd * static_cast<double>(d);
      for (std::size_t i = 0; i + 1 < g; ++i) partial -= static_cast<double>(num[i]) * gd[i];
      const double nl = std::round(partial / last);
      if (std::fabs(partial - nl * last) < 1e-9 * (1 + std::fabs(xd) * static_cast<double>(d))) {
        std::vector<BigRational> q;
        for (long long n : num) q.push_back(make_rational(static_cast<long>(n), d));
        q.push_back(make_rational(static_cast<long>(nl), d));
        if (accept(q)) return out;
      }
      std::size_t i = 0;
      while (i < num.size() && num[i] == nmax) num[i++] = -nmax;
      if (i == num.size()) break;
      ++num[i];
    }
  }
  out.residual = abs(x);
  return out;
}

std::string to_string(Mod2Verdict v) { return v == Mod2Verdict::residue_zero ? "residue-zero" : "inconclusive"; }

std::string to_string(const Mod2Result& r) {
  if (r.verdict == Mod2Verdict::inconclusive) return "inconclusive";
  std::string s = "residue-zero:";
  if (r.coefficients.empty()) s += " 0";
  bool first = true;
  for (const auto& [name, q] : r.coefficients) {
    s += first ? " " : " + ";
    s += to_compact_string(q) + "*" + name;
    first = false;
  }
  return s;
}

}  // namespace fmzv
