#include "fmzv/zexpr.hpp"

#include <algorithm>

#include "fmzv/bernoulli.hpp"
#include "fmzv/errors.hpp"

namespace fmzv {

ZExpr::ZExpr(const BigRational& c) { add_term(ZMonomial{}, c); }

ZExpr ZExpr::zfrak(int k) {
  if (k < 1) throw std::domain_error("zfrak: argument must be positive");
  ZExpr e;
  e.add_term(ZMonomial{0, {k}}, 1);
  return e;
}

ZExpr ZExpr::x(int power) {
  if (power < 0) throw std::domain_error("x: negative power");
  ZExpr e;
  e.add_term(ZMonomial{power, {}}, 1);
  return e;
}

void ZExpr::add_term(ZMonomial m, const BigRational& c) {
  if (c == 0) return;
  std::sort(m.z.begin(), m.z.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZExpr ZExpr::truncated(int n) const {
  ZExpr out;
  for (const auto& [m, c] : terms_)
    if (m.x_power < n) out.terms_.emplace(m, c);
  return out;
}

ZExpr& ZExpr::operator+=(const ZExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ZExpr& ZExpr::operator-=(const ZExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ZExpr& ZExpr::operator*=(const ZExpr& rhs) {
  ZExpr out;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) {
      ZMonomial m{a.x_power + b.x_power, a.z};
      m.z.insert(m.z.end(), b.z.begin(), b.z.end());
      out.add_term(std::move(m), ca * cb);
    }
  return *this = std::move(out);
}

ZExpr operator+(ZExpr a, const ZExpr& b) { return a += b; }
ZExpr operator-(ZExpr a, const ZExpr& b) { return a -= b; }
ZExpr operator*(ZExpr a, const ZExpr& b) { return a *= b; }
ZExpr operator-(ZExpr a) { return ZExpr(BigRational(-1)) * a; }

std::string to_string(const ZExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    const BigRational mag = c < 0 ? BigRational(-c) : c;
    std::vector<std::string> factors;
    if (mag != 1 || (m.z.empty() && m.x_power == 0)) factors.push_back(to_compact_string(mag));
    for (int k : m.z) factors.push_back("Z(" + std::to_string(k) + ")");
    if (m.x_power == 1) factors.push_back("x");
    if (m.x_power > 1) factors.push_back("x^" + std::to_string(m.x_power));
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

namespace {

Residue zfrak_times_p_power(const Modulus& mod, int arg, int l) {
  const int k = arg - l;
  if (k < 1) throw CapabilityError("zfrak(" + std::to_string(arg) + ") x^" + std::to_string(l) + ": argument too small");
  if (!zfrak_A_defined(mod.p, mod.n, k, l)) throw SkipPrime("prime too small for Bernoulli reduction");
  return zfrak_A(mod.p, mod.n, k, l).residue;
}

Residue monomial_at(const ZMonomial& m, const Modulus& mod) {
  const int s = static_cast<int>(m.z.size());
  const int e = m.x_power;
  if (s == 0) return Residue(mod, mod.p).pow(static_cast<std::uint64_t>(e));
  if (e == 0) {
    if (mod.n != 1) throw CapabilityError("zfrak without a power of x needs level 1");
    Residue out(mod, 1);
    for (int k : m.z) {
      if (static_cast<long>(mod.p) - k < 0) throw SkipPrime("prime too small for Bernoulli index");
      out *= zfrak_direct(mod.p, 1, k);
    }
    return out;
  }
  if (e < s) throw CapabilityError("monomial with fewer powers of x than zfrak factors");
  Residue out(mod, 1);
  for (int i = 0; i + 1 < s; ++i) out *= zfrak_times_p_power(mod, m.z[static_cast<std::size_t>(i)], 1);
  out *= zfrak_times_p_power(mod, m.z.back(), e - s + 1);
  return out;
}

}  // namespace

Residue evaluate_at(const ZExpr& e, const Modulus& mod) {
  Residue acc(mod, 0);
  for (const auto& [m, c] : e.terms()) {
    if (m.x_power >= mod.n) continue;  // x^n = 0
    acc += Residue::from_rational(mod, c) * monomial_at(m, mod);
  }
  return acc;
}

AnValue evaluate_A(const ZExpr& e, const PrimeWindow& window, int n) {
  AnValue out(n);
  for (std::uint64_t p : window) {
    try {
      out.set(p, evaluate_at(e, Modulus(p, n)));
    } catch (const SkipPrime& err) {
      out.skip(p, err.what());
    }
  }
  return out;
}

}  // namespace fmzv
