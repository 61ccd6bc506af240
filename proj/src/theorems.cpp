#include "fmzv/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "fmzv/appendix.hpp"
#include "fmzv/errors.hpp"
#include "fmzv/mhs.hpp"
#include "fmzv/modzeta2.hpp"
#include "fmzv/mzv.hpp"
#include "fmzv/regularization.hpp"

namespace fmzv {

namespace {

using Params = std::vector<std::pair<std::string, ParamValue>>;

struct Evidence {
  std::vector<AnComparison> modular;
  std::vector<std::pair<BigReal, BigReal>> numeric;
  std::vector<std::pair<std::string, bool>> exact;
  std::vector<std::string> diagnostics;
};

struct Entry {
  TheoremInfo info;
  std::vector<int> levels;  // admissible n; empty for S and Q statements
  std::function<void(const TheoremCase&)> hypotheses;
  std::function<ZExpr(const TheoremCase&)> rhs;  // may be empty
  std::function<void(const TheoremCase&, Evidence&)> evaluate;
  std::function<std::uint64_t(const TheoremCase&)> min_prime;  // may be empty
};

// ---- small helpers ---------------------------------------------------------

void require(bool ok, const std::string& id, const std::string& what) {
  if (!ok) throw HypothesisError(id + ": " + what);
}

BigRational sgn(long e) { return BigRational(sign_pow(e)); }

ZExpr Z(int k) { return ZExpr::zfrak(k); }
ZExpr X(int e = 1) { return ZExpr::x(e); }

Index ones(int a) { return Index::repeat(1, a); }
Index twos(int a) { return Index::repeat(2, a); }

Index cat(std::initializer_list<Index> parts) {
  Index out;
  for (const auto& p : parts) out.append(p);
  return out;
}

LinComb sum_of(const std::vector<Index>& ks) {
  LinComb a;
  for (const auto& k : ks) a.add_term(word_from_index(k), 1);
  return a;
}

LinComb word_of(const Index& k) { return LinComb(word_from_index(k)); }

BigReal to_real(const BigRational& q) {
  return BigReal(q.get_num().get_str()) / BigReal(q.get_den().get_str());
}

// Weak compositions of m into `slots` parts.
void weak_compositions(int m, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(m);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= m; ++first) {
    cur.push_back(first);
    weak_compositions(m - first, slots - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Index> bowman_bradley_indices(int l, int m) {
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  weak_compositions(m, 2 * l + 1, cur, comps);
  std::vector<Index> out;
  for (const auto& c : comps) {
    Index k;
    for (int j = 0; j <= 2 * l; ++j) {
      k.append(twos(c[static_cast<std::size_t>(j)]));
      if (j < 2 * l) k.push_back(j % 2 == 0 ? 1 : 3);
    }
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<Index> permutations_of(const Index& k) {
  std::vector<std::size_t> pos(k.depth());
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<Index> out;
  do {
    std::vector<int> parts;
    for (std::size_t i : pos) parts.push_back(k[i]);
    out.emplace_back(std::move(parts));
  } while (std::next_permutation(pos.begin(), pos.end()));
  return out;
}

std::vector<SetPartition> two_block_partitions(int r) {
  std::vector<SetPartition> out;
  if (r < 2) return out;
  for (auto& b : enumerate_set_partitions(r))
    if (b.size() == 2) out.push_back(std::move(b));
  return out;
}

// ---- closed forms ----------------------------------------------------------

ZExpr depth2_rhs(int k1, int k2, bool star) {
  const int k = k1 + k2;
  BigRational c = sgn(k1) * k2 * binom(k + 1, k1) - sgn(k2) * k1 * binom(k + 1, k2);
  c += star ? BigRational(k) : BigRational(-k);
  return BigRational(c / 2) * Z(k + 1) * X();
}

ZExpr depth3_rhs(int k1, int k2, int k3, bool star) {
  const int k = k1 + k2 + k3;
  BigRational c = (sgn(k1) * binom(k, k1) - sgn(k3) * binom(k, k3)) / 2;
  if (star) c = -c;
  return c * Z(k);
}

// cross_scale multiplies the k^2 sum of products; 1 is the coefficient as
// usually stated, 1/2 the one obtained by counting unordered two-block
// partitions.
ZExpr repk_rhs(int k, int r, int n, bool star, const BigRational& cross_scale = 1) {
  const int w = r * k;
  if (n == 2) return BigRational(star ? k : sign_pow(r - 1) * k) * Z(w + 1) * X();
  ZExpr cross;
  for (int l = 1; l <= r - 1; ++l) cross += Z(l * k + 1) * Z((r - l) * k + 1);
  const BigRational head = make_rational(k * (w + 1), 2);
  ZExpr inner = BigRational(k) * Z(w + 1) * X();
  inner += (head * Z(w + 2) + BigRational(cross_scale * (star ? k * k : -k * k)) * cross) * X(2);
  return BigRational(star ? sign_pow(w) : sign_pow(w + r - 1)) * inner;
}

ZExpr repk_odd_rhs(int k, int r, bool star) {
  const BigRational head = make_rational(k * (r * k + 1), 2);
  return (star ? BigRational(-head) : BigRational(sgn(r) * head)) * Z(r * k + 2) * X(2);
}

ZExpr sumF_rhs(int k, int r, int n, bool star) {
  const BigRational b = binom(k, r);
  if (n == 2) return (star ? b : BigRational(sgn(r - 1) * b)) * Z(k + 1) * X();
  ZExpr t;
  for (const auto& part : two_block_partitions(r)) {
    const long s1 = static_cast<long>(part.blocks()[0].size());
    const long s2 = static_cast<long>(part.blocks()[1].size());
    for (long b1 = s1; b1 <= k - s2; ++b1) {
      const long b2 = k - b1;
      t += BigRational(falling(b1, s1) * falling(b2, s2)) * Z(static_cast<int>(b1 + 1)) * Z(static_cast<int>(b2 + 1));
    }
  }
  const BigRational inv_rfact = BigRational(1) / BigRational(factorial(r));
  ZExpr inner = b * Z(k + 1) * X();
  inner += (make_rational(k + 1, 2) * b * Z(k + 2) + (star ? inv_rfact : BigRational(-inv_rfact)) * t) * X(2);
  return (star ? sgn(k) : sgn(k + r - 1)) * inner;
}

ZExpr symsum_rhs(const Index& k, int n, bool star) {
  const int r = static_cast<int>(k.depth());
  ZExpr total;
  for (const auto& part : enumerate_set_partitions(r)) {
    ZExpr term = BigRational(part.c());
    if (!star) term *= sgn(r - static_cast<long>(part.size()));
    for (int b : part.block_sums(k)) term *= depth_one_expr(b, n);
    total += term;
  }
  return total.truncated(n);
}

// ---- A-side evidence -------------------------------------------------------

void compare_A(Evidence& ev, const AnValue& lhs, const AnValue& rhs) { ev.modular.push_back(compare(lhs, rhs)); }

void compare_A(Evidence& ev, const TheoremCase& c, const AnValue& lhs, const ZExpr& rhs) {
  compare_A(ev, lhs, evaluate_A(rhs, c.window, c.n));
}

AnValue zero_A(const TheoremCase& c) { return constant_A(0, c.window, c.n); }

AnValue S_kri(int k, int r, int i, bool star, const PrimeWindow& w, int n) {
  const LinComb a = sum_of(enumerate_Ikri(k, r, i));
  return star ? Z_A_star(a, w, n) : Z_A(a, w, n);
}

// One word, star or not.
AnValue ZA(const LinComb& a, bool star, const TheoremCase& c) {
  return star ? Z_A_star(a, c.window, c.n) : Z_A(a, c.window, c.n);
}

// ---- S-side evidence -------------------------------------------------------

void diagnose(Evidence& ev, const std::string& what, const BigReal& x, int weight, int digits) {
  try {
    ev.diagnostics.push_back(what + " mod zeta(2): " + to_string(reduce_mod_zeta2(x, weight, digits)));
  } catch (const CapabilityError& e) {
    ev.diagnostics.push_back(what + " mod zeta(2): " + e.what());
  }
}

BigReal zeta_sh(const Index& k, int D) { return mzv_reg(k, Product::shuffle, D); }

// ---- the catalog -----------------------------------------------------------

std::vector<Entry> build_entries() {
  std::vector<Entry> v;
  auto add = [&v](Entry e) { v.push_back(std::move(e)); };
  const std::vector<int> all_levels{1, 2, 3};

  // depth one
  add({{"dep1", Side::A, "depth-one evaluation by Bernoulli numbers"},
       all_levels,
       [](const TheoremCase& c) { require(c.get("k") >= 1, c.id, "k >= 1"); },
       [](const TheoremCase& c) { return depth_one_expr(static_cast<int>(c.get("k")), c.n); },
       [](const TheoremCase& c, Evidence& ev) {
         compare_A(ev, c, zetaA(Index{static_cast<int>(c.get("k"))}, c.window, c.n),
                   depth_one_expr(static_cast<int>(c.get("k")), c.n));
       },
       [](const TheoremCase& c) { return static_cast<std::uint64_t>(c.n + c.get("k") + 1); }});

  for (bool star : {false, true}) {
    const std::string suffix = star ? "-star" : "";
    add({{"depth2" + suffix, Side::A, "depth-two evaluation at level 2, even weight"},
         {2},
         [](const TheoremCase& c) {
           require(c.get("k1") >= 1 && c.get("k2") >= 1, c.id, "k1, k2 >= 1");
           require((c.get("k1") + c.get("k2")) % 2 == 0, c.id, "k1 + k2 must be even");
         },
         [star](const TheoremCase& c) {
           return depth2_rhs(static_cast<int>(c.get("k1")), static_cast<int>(c.get("k2")), star);
         },
         [star](const TheoremCase& c, Evidence& ev) {
           const Index k{static_cast<int>(c.get("k1")), static_cast<int>(c.get("k2"))};
           compare_A(ev, c, ZA(word_of(k), star, c), depth2_rhs(k[0], k[1], star));
         },
         {}});
    add({{"depth3" + suffix, Side::A, "depth-three evaluation at level 1, odd weight"},
         {1},
         [](const TheoremCase& c) {
           require(c.get("k1") >= 1 && c.get("k2") >= 1 && c.get("k3") >= 1, c.id, "k1, k2, k3 >= 1");
           require((c.get("k1") + c.get("k2") + c.get("k3")) % 2 == 1, c.id, "k1 + k2 + k3 must be odd");
         },
         [star](const TheoremCase& c) {
           return depth3_rhs(static_cast<int>(c.get("k1")), static_cast<int>(c.get("k2")),
                             static_cast<int>(c.get("k3")), star);
         },
         [star](const TheoremCase& c, Evidence& ev) {
           const Index k{static_cast<int>(c.get("k1")), static_cast<int>(c.get("k2")), static_cast<int>(c.get("k3"))};
           compare_A(ev, c, ZA(word_of(k), star, c), depth3_rhs(k[0], k[1], k[2], star));
         },
         {}});
    add({{"repk" + suffix, Side::A, "repeated index {k}^r at levels 2 and 3"},
         {2, 3},
         [](const TheoremCase& c) { require(c.get("k") >= 1 && c.get("r") >= 1, c.id, "k, r >= 1"); },
         [star](const TheoremCase& c) {
           return repk_rhs(static_cast<int>(c.get("k")), static_cast<int>(c.get("r")), c.n, star);
         },
         [star](const TheoremCase& c, Evidence& ev) {
           const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r"));
           compare_A(ev, c, ZA(word_of(Index::repeat(k, r)), star, c), repk_rhs(k, r, c.n, star));
         },
         {}});
    add({{"repk-half" + suffix, Side::A, "repeated index {k}^r at level 3, cross term k^2/2"},
         {3},
         [](const TheoremCase& c) { require(c.get("k") >= 1 && c.get("r") >= 1, c.id, "k, r >= 1"); },
         [star](const TheoremCase& c) {
           return repk_rhs(static_cast<int>(c.get("k")), static_cast<int>(c.get("r")), 3, star, make_rational(1, 2));
         },
         [star](const TheoremCase& c, Evidence& ev) {
           const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r"));
           compare_A(ev, c, ZA(word_of(Index::repeat(k, r)), star, c), repk_rhs(k, r, 3, star, make_rational(1, 2)));
         },
         {}});
    add({{"repk-odd" + suffix, Side::A, "repeated index {k}^r at level 3, rk odd"},
         {3},
         [](const TheoremCase& c) {
           require(c.get("k") >= 1 && c.get("r") >= 1, c.id, "k, r >= 1");
           require((c.get("k") * c.get("r")) % 2 == 1, c.id, "rk must be odd");
         },
         [star](const TheoremCase& c) {
           return repk_odd_rhs(static_cast<int>(c.get("k")), static_cast<int>(c.get("r")), star);
         },
         [star](const TheoremCase& c, Evidence& ev) {
           const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r"));
           compare_A(ev, c, ZA(word_of(Index::repeat(k, r)), star, c), repk_odd_rhs(k, r, star));
         },
         {}});
  }

  auto ab_hyp = [](const TheoremCase& c) { require(c.get("a") >= 0 && c.get("b") >= 0, c.id, "a, b >= 0"); };
  auto ab = [](const TheoremCase& c) { return std::pair<int, int>(static_cast<int>(c.get("a")), static_cast<int>(c.get("b"))); };

  for (bool star : {false, true}) {
    const std::string suffix = star ? "-star" : "";
    add({{"ones-2-ones" + suffix, Side::A, "({1}^a,2,{1}^b) at level 1"},
         {1},
         ab_hyp,
         [ab](const TheoremCase& c) {
           auto [a, b] = ab(c);
           return sgn(b) * binom(a + b + 2, a + 1) * Z(a + b + 2);
         },
         [ab, star](const TheoremCase& c, Evidence& ev) {
           auto [a, b] = ab(c);
           compare_A(ev, c, ZA(word_of(cat({ones(a), Index{2}, ones(b)})), star, c),
                     sgn(b) * binom(a + b + 2, a + 1) * Z(a + b + 2));
         },
         {}});
    auto twos3 = [ab, star](const TheoremCase& c) {
      auto [a, b] = ab(c);
      const BigRational head = star ? make_rational(2 * (b - a), a + 1) : BigRational(sgn(a + b) * make_rational(2 * (a - b), a + 1));
      return head * binom(2 * a + 2 * b + 3, 2 * b + 2) * Z(2 * a + 2 * b + 3);
    };
    add({{"twos-3-twos" + suffix, Side::A, "({2}^a,3,{2}^b) at level 1"},
         {1},
         ab_hyp,
         twos3,
         [ab, star, twos3](const TheoremCase& c, Evidence& ev) {
           auto [a, b] = ab(c);
           compare_A(ev, c, ZA(word_of(cat({twos(a), Index{3}, twos(b)})), star, c), twos3(c));
         },
         {}});
    auto twos1 = [ab, star](const TheoremCase& c) {
      auto [a, b] = ab(c);
      BigRational head = star ? make_rational(4 * (b - a), 2 * a + 1) : BigRational(sgn(a + b) * make_rational(4 * (a - b), 2 * a + 1));
      BigRational quarter_pow = 1;
      for (int j = 0; j < a + b; ++j) quarter_pow /= 4;
      return head * (1 - quarter_pow) * binom(2 * a + 2 * b + 1, 2 * b + 1) * Z(2 * a + 2 * b + 1);
    };
    add({{"twos-1-twos" + suffix, Side::A, "({2}^a,1,{2}^b) at level 1"},
         {1},
         ab_hyp,
         twos1,
         [ab, star, twos1](const TheoremCase& c, Evidence& ev) {
           auto [a, b] = ab(c);
           compare_A(ev, c, ZA(word_of(cat({twos(a), Index{1}, twos(b)})), star, c), twos1(c));
         },
         {}});
    auto o2o_F2 = [ab, star](const TheoremCase& c) {
      auto [a, b] = ab(c);
      return (1 + sgn(a) * binom(a + b + 3, star ? a + 2 : b + 2)) / 2 * Z(a + b + 3) * X();
    };
    add({{"ones-2-ones-F2" + suffix, Side::A, "({1}^a,2,{1}^b) at level 2, a+b even"},
         {2},
         [ab_hyp](const TheoremCase& c) {
           ab_hyp(c);
           require((c.get("a") + c.get("b")) % 2 == 0, c.id, "a + b must be even");
         },
         o2o_F2,
         [ab, star, o2o_F2](const TheoremCase& c, Evidence& ev) {
           auto [a, b] = ab(c);
           const AnValue lhs = ZA(word_of(cat({ones(a), Index{2}, ones(b)})), star, c);
           compare_A(ev, c, lhs, o2o_F2(c));
           if (!star) {
             // the same coefficient obtained as C/2 from the six-part sum
             compare_A(ev, c, lhs, compute_C_bruteforce(a, b).C / 2 * Z(a + b + 3) * X());
           }
         },
         {}});
  }

  auto lm_hyp = [](const TheoremCase& c) {
    require(c.get("l") >= 0 && c.get("m") >= 0, c.id, "l, m >= 0");
    require(c.get("l") + c.get("m") > 0, c.id, "(l, m) != (0, 0)");
  };
  auto lm = [](const TheoremCase& c) { return std::pair<int, int>(static_cast<int>(c.get("l")), static_cast<int>(c.get("m"))); };
  for (bool star : {false, true}) {
    auto bb = [lm, star](const TheoremCase& c) {
      auto [l, m] = lm(c);
      BigRational lead = sgn(l) * binom(l + m, l);
      for (int j = 0; j < 2 * l - 1; ++j) lead /= 2;
      if (l == 0) lead *= 2;
      const BigRational coeff = star ? lead : BigRational(sgn(m) * (lead - 4 * binom(2 * l + m, 2 * l)));
      return coeff * Z(4 * l + 2 * m + 1) * X();
    };
    add({{star ? "BB-star" : "BB", Side::A, "Bowman-Bradley sums at level 2"},
         {2},
         lm_hyp,
         bb,
         [lm, star, bb](const TheoremCase& c, Evidence& ev) {
           auto [l, m] = lm(c);
           compare_A(ev, c, ZA(sum_of(bowman_bradley_indices(l, m)), star, c), bb(c));
         },
         {}});
  }
  auto sh2 = [lm](const TheoremCase& c) {
    auto [l, m] = lm(c);
    return sgn(m) * 2 * (1 - 2 * binom(4 * l + 2 * m, 2 * l)) * Z(4 * l + 2 * m + 1) * X();
  };
  add({{"2sh2", Side::A, "Z(e_2^{l+m} sh e_2^l) at level 2"},
       {2},
       lm_hyp,
       sh2,
       [lm, sh2](const TheoremCase& c, Evidence& ev) {
         auto [l, m] = lm(c);
         compare_A(ev, c, Z_A(shuffle(word_of(twos(l + m)), word_of(twos(l))), c.window, c.n), sh2(c));
       },
       {}});
  add({{"yamamoto", Side::A, "star values of (e1e3)^l block-shuffled with e2^m"},
       {2},
       [](const TheoremCase& c) { require(c.get("l") >= 0 && c.get("m") >= 0, c.id, "l, m >= 0"); },
       {},
       [lm](const TheoremCase& c, Evidence& ev) {
         auto [l, m] = lm(c);
         Index onethree;
         for (int j = 0; j < l; ++j) onethree.append(Index{1, 3});
         const LinComb lhs_word = muneta_shuffle(word_of(onethree), word_of(twos(m)));
         AnValue rhs = zero_A(c);
         for (int i = 0; i <= l; ++i) {
           Index block;
           for (int j = 0; j < i; ++j) block.append(Index{1, 3});
           for (int k = 0; k <= 2 * l - 2 * i; ++k) {
             const int u = 2 * l - 2 * i - k;
             for (int j = 0; j <= m; ++j)
               for (int nn = 0; nn <= m - j; ++nn) {
                 const int vv = m - j - nn;
                 const BigRational coeff = sgn(j + k) * binom(k + nn, k) * binom(u + vv, u);
                 AnValue term = Z_A(muneta_shuffle(word_of(block), word_of(twos(j))), c.window, c.n);
                 term *= Z_A_star(word_of(twos(k + nn)), c.window, c.n);
                 term *= Z_A_star(word_of(twos(u + vv)), c.window, c.n);
                 term *= coeff;
                 rhs += term;
               }
           }
         }
         compare_A(ev, Z_A_star(lhs_word, c.window, c.n), rhs);
       },
       {}});

  for (bool star : {false, true}) {
    add({{star ? "symsum-star" : "symsum", Side::A, "symmetric sum over all orderings of an index"},
         all_levels,
         [](const TheoremCase& c) { require(!c.index("k").empty(), c.id, "index must be nonempty"); },
         [star](const TheoremCase& c) { return symsum_rhs(c.index("k"), c.n, star); },
         [star](const TheoremCase& c, Evidence& ev) {
           const Index& k = c.index("k");
           const AnValue lhs = ZA(sum_of(permutations_of(k)), star, c);
           const int r = static_cast<int>(k.depth());
           AnValue direct = zero_A(c);
           for (const auto& part : enumerate_set_partitions(r)) {
             AnValue term = constant_A(BigRational(part.c()) * (star ? BigRational(1) : sgn(r - static_cast<long>(part.size()))), c.window, c.n);
             for (int b : part.block_sums(k)) term *= zetaA(Index{b}, c.window, c.n);
             direct += term;
           }
           compare_A(ev, lhs, direct);
           compare_A(ev, c, lhs, symsum_rhs(k, c.n, star));
         },
         [](const TheoremCase& c) { return static_cast<std::uint64_t>(c.n + c.index("k").weight() + 1); }});
  }

  auto kr_hyp = [](const TheoremCase& c) {
    require(c.get("r") >= 1 && c.get("r") <= c.get("k"), c.id, "1 <= r <= k");
  };
  for (bool star : {false, true}) {
    const std::string suffix = star ? "-star" : "";
    auto rhs2 = [star](const TheoremCase& c) {
      return sumF_rhs(static_cast<int>(c.get("k")), static_cast<int>(c.get("r")), 2, star);
    };
    add({{"sumF2" + suffix, Side::A, "sum over I_{k,r} at level 2"},
         {2},
         kr_hyp,
         rhs2,
         [star, rhs2](const TheoremCase& c, Evidence& ev) {
           compare_A(ev, c, ZA(sum_of(enumerate_Ikr(static_cast<int>(c.get("k")), static_cast<int>(c.get("r")))), star, c), rhs2(c));
         },
         {}});
    auto rhs3 = [star](const TheoremCase& c) {
      return sumF_rhs(static_cast<int>(c.get("k")), static_cast<int>(c.get("r")), 3, star);
    };
    add({{"sumF3" + suffix, Side::A, "sum over I_{k,r} at level 3"},
         {3},
         kr_hyp,
         rhs3,
         [star, rhs3](const TheoremCase& c, Evidence& ev) {
           const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r"));
           const AnValue lhs = ZA(sum_of(enumerate_Ikr(k, r)), star, c);
           compare_A(ev, c, lhs, rhs3(c));
           if (k % 2 == 1) {
             const BigRational h = make_rational(k + 1, 2) * binom(k, r);
             compare_A(ev, c, lhs, (star ? BigRational(-h) : BigRational(sgn(r) * h)) * Z(k + 2) * X(2));
           }
         },
         {}});
  }

  auto kri_hyp = [](const TheoremCase& c) {
    const long k = c.get("k"), r = c.get("r"), i = c.get("i");
    require(1 <= i && i <= r && r < k, c.id, "1 <= i <= r < k");
  };
  for (bool star : {false, true}) {
    auto rhs = [star](const TheoremCase& c) {
      const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r")), i = static_cast<int>(c.get("i"));
      const BigRational b = star ? b_star_coefficient(k, r, i) : BigRational(sgn(r - 1) * b_coefficient(k, r, i));
      return b / 2 * Z(k + 1) * X();
    };
    add({{star ? "sumF2-i-star" : "sumF2-i", Side::A, "sum over I_{k,r,i} at level 2, k even"},
         {2},
         [kri_hyp](const TheoremCase& c) {
           kri_hyp(c);
           require(c.get("k") % 2 == 0, c.id, "k must be even");
         },
         rhs,
         [star, rhs](const TheoremCase& c, Evidence& ev) {
           const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r")), i = static_cast<int>(c.get("i"));
           compare_A(ev, c, S_kri(k, r, i, star, c.window, c.n), rhs(c));
         },
         {}});
    add({{star ? "recurrence-star" : "recurrence", Side::A, "three-term recurrence of the I_{k,r,i} sums"},
         {2},
         [](const TheoremCase& c) {
           const long k = c.get("k"), r = c.get("r"), i = c.get("i");
           require(2 <= i + 1 && i + 1 <= r && r <= k - 1, c.id, "2 <= i+1 <= r <= k-1");
         },
         {},
         [star](const TheoremCase& c, Evidence& ev) {
           const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r")), i = static_cast<int>(c.get("i"));
           AnValue lhs = BigRational(r - i) * S_kri(k, r, i, star, c.window, c.n);
           lhs += BigRational(i) * S_kri(k, r, i + 1, star, c.window, c.n);
           lhs += BigRational(star ? -(k - r) : (k - r)) * S_kri(k, r - 1, i, star, c.window, c.n);
           AnValue rhs = zero_A(c);
           for (int l = 1; l <= k - r; ++l)
             rhs += zetaA(Index{l}, c.window, c.n) * S_kri(k - l, r - 1, i, star, c.window, c.n);
           compare_A(ev, lhs, rhs);
           if (k % 2 == 0) {
             compare_A(ev, lhs, zero_A(c));
             const InductionTerms t = induction_terms(k, r, i);
             ev.exact.emplace_back("step", (star ? t.total_star : t.total) == 0);
           }
         },
         {}});
    add({{star ? "F1-i-sum-star" : "F1-i-sum", Side::A, "sum over I_{k,r,i} at level 1"},
         {1},
         kri_hyp,
         [star](const TheoremCase& c) {
           const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r")), i = static_cast<int>(c.get("i"));
           const BigRational b = star ? binom(k - 1, r - i) + sgn(r) * binom(k - 1, i - 1)
                                      : binom(k - 1, i - 1) + sgn(r) * binom(k - 1, r - i);
           return sgn(i) * b * Z(k);
         },
         [star](const TheoremCase& c, Evidence& ev) {
           const int k = static_cast<int>(c.get("k")), r = static_cast<int>(c.get("r")), i = static_cast<int>(c.get("i"));
           const BigRational b = star ? binom(k - 1, r - i) + sgn(r) * binom(k - 1, i - 1)
                                      : binom(k - 1, i - 1) + sgn(r) * binom(k - 1, r - i);
           compare_A(ev, c, S_kri(k, r, i, star, c.window, c.n), sgn(i) * b * Z(k));
         },
         {}});
  }

  // relations among A-side values
  auto kl_hyp = [](const TheoremCase& c) {
    require(!c.index("k").empty() && !c.index("l").empty(), c.id, "indices must be nonempty");
  };
  add({{"dsr-harmonic", Side::A, "harmonic relation"},
       all_levels,
       kl_hyp,
       {},
       [](const TheoremCase& c, Evidence& ev) {
         const Index &k = c.index("k"), &l = c.index("l");
         compare_A(ev, Z_A(harmonic(word_from_index(k), word_from_index(l)), c.window, c.n),
                   zetaA(k, c.window, c.n) * zetaA(l, c.window, c.n));
       },
       {}});
  add({{"dsr-shuffle", Side::A, "shuffle relation"},
       all_levels,
       kl_hyp,
       {},
       [](const TheoremCase& c, Evidence& ev) {
         const Index &k = c.index("k"), &l = c.index("l");
         compare_A(ev, Z_A(shuffle(word_from_index(k), word_from_index(l)), c.window, c.n),
                   shuffle_rhs_A(k, l, c.window, c.n));
       },
       {}});
  add({{"antipode", Side::A, "alternating sum of values times reversed star values"},
       all_levels,
       [](const TheoremCase& c) { require(!c.index("k").empty(), c.id, "index must be nonempty"); },
       {},
       [](const TheoremCase& c, Evidence& ev) {
         const Index& k = c.index("k");
         AnValue total = zero_A(c);
         for (std::size_t i = 0; i <= k.depth(); ++i) {
           AnValue term = zetaA(k.slice(0, i), c.window, c.n) * zetaA_star(k.slice(i, k.depth()).reversed(), c.window, c.n);
           term *= sgn(static_cast<long>(i));
           total += term;
         }
         compare_A(ev, total, zero_A(c));
       },
       {}});
  add({{"star-expansion", Side::A, "star values as sums over comma/plus contractions"},
       all_levels,
       [](const TheoremCase& c) { require(!c.index("k").empty(), c.id, "index must be nonempty"); },
       {},
       [](const TheoremCase& c, Evidence& ev) {
         const Index& k = c.index("k");
         compare_A(ev, zetaA_star(k, c.window, c.n), Z_A(sum_of(comma_plus_contractions(k)), c.window, c.n));
       },
       {}});

  // ---- real identities ----
  auto S_entry = [&add](std::string id, std::string desc, std::function<void(const TheoremCase&)> hyp,
                        std::function<void(const TheoremCase&, Evidence&)> eval) {
    add({{std::move(id), Side::S, std::move(desc)}, {}, std::move(hyp), {}, std::move(eval), {}});
  };
  S_entry("zagier-1", "zeta({2}^a,3,{2}^b) in terms of zeta({2}^m) zeta(odd)",
          [](const TheoremCase& c) {
            require(c.get("a") >= 0 && c.get("b") >= 0, c.id, "a, b >= 0");
          },
          [](const TheoremCase& c, Evidence& ev) {
            const int a = static_cast<int>(c.get("a")), b = static_cast<int>(c.get("b"));
            ev.numeric.push_back(zagier_theorem1_exact(a, b, c.digits));
            ev.exact.emplace_back("mod zeta(2) coefficient",
                                  zagier1_surviving_coefficient(a, b) == zagier1_mod_zeta2_coefficient(a, b));
          });
  S_entry("zagier-2", "zeta(m,n) in terms of zeta(even) zeta(odd), m+n odd",
          [](const TheoremCase& c) {
            require(c.get("m") >= 1 && c.get("n") >= 2, c.id, "m >= 1, n >= 2");
            require((c.get("m") + c.get("n")) % 2 == 1, c.id, "m + n must be odd");
          },
          [](const TheoremCase& c, Evidence& ev) {
            const int m = static_cast<int>(c.get("m")), n = static_cast<int>(c.get("n"));
            ev.numeric.push_back(zagier_theorem2_exact(m, n, c.digits));
            ev.exact.emplace_back("mod zeta(2) coefficient",
                                  zagier2_surviving_coefficient(m, n) == zagier2_mod_zeta2_coefficient(m, n));
          });
  S_entry("calc-zeta-sh", "zeta^sh(k2+1,1) by shuffle regularization and the depth-two sum formula",
          [](const TheoremCase& c) { require(c.get("k2") >= 1, c.id, "k2 >= 1"); },
          [](const TheoremCase& c, Evidence& ev) {
            const int k2 = static_cast<int>(c.get("k2"));
            const int D = c.digits;
            PrecisionGuard guard(working_digits(D));
            const BigReal lhs = zeta_sh(Index{k2 + 1, 1}, D);
            BigReal middle = -2 * mzv(Index{1, k2 + 1}, D);
            for (int j = 2; j <= k2; ++j) middle -= mzv(Index{j, k2 + 2 - j}, D);
            const BigReal closed = -mzv(Index{k2 + 2}, D) - mzv(Index{1, k2 + 1}, D);
            ev.numeric.emplace_back(lhs, middle);
            ev.numeric.emplace_back(lhs, closed);
          });
  S_entry("by-def", "t-coefficient of the level-2 symmetric value of (1,k2), k2 odd",
          [](const TheoremCase& c) {
            require(c.get("k2") >= 1 && c.get("k2") % 2 == 1, c.id, "k2 odd and positive");
          },
          [](const TheoremCase& c, Evidence& ev) {
            const int k2 = static_cast<int>(c.get("k2"));
            const int D = c.digits;
            PrecisionGuard guard(working_digits(D));
            const TPoly<BigReal> s = symmetric_hat(Index{1, k2}, Product::shuffle, 2, D);
            const BigReal expected = k2 * zeta_sh(Index{k2 + 1, 1}, D) + mzv(Index{k2, 2}, D);
            ev.numeric.emplace_back(s[1], expected);
            // the constant term reduces to -zeta(k2+1) only when zeta(k2+1) converges
            if (k2 >= 2)
              ev.numeric.emplace_back(s[0], -mzv(Index{k2 + 1}, D));
            else
              ev.diagnostics.push_back("c0 = " + to_string(s[0], 20));
            const BigReal zeta_w = mzv(Index{k2 + 2}, D);
            // zeta^sh(k2+1,1) = -zeta(k2+2) - zeta(1,k2+1), then both depth-two values mod zeta(2)
            const BigRational after = -BigRational(k2) - make_rational(k2 * (k2 + 1), 2) +
                                      (make_rational((k2 + 2) * (k2 + 1), 2) - 1) / 2;
            diagnose(ev, "c1 - (" + to_compact_string(after) + ")zeta(" + std::to_string(k2 + 2) + ")",
                     s[1] - to_real(after) * zeta_w, k2 + 2, D);
          });
  S_entry("by-def-ab", "level-1 symmetric value of ({1}^a,2,{1}^b) as two regularized values",
          [](const TheoremCase& c) { require(c.get("a") >= 0 && c.get("b") >= 0, c.id, "a, b >= 0"); },
          [](const TheoremCase& c, Evidence& ev) {
            const int a = static_cast<int>(c.get("a")), b = static_cast<int>(c.get("b"));
            const int D = c.digits;
            PrecisionGuard guard(working_digits(D));
            const TPoly<BigReal> s = symmetric_hat(cat({ones(a), Index{2}, ones(b)}), Product::shuffle, 1, D);
            const BigReal expected = zeta_sh(cat({ones(a), Index{2}, ones(b)}), D) +
                                     to_real(sgn(a + b)) * zeta_sh(cat({ones(b), Index{2}, ones(a)}), D);
            ev.numeric.emplace_back(s[0], expected);
          });
  S_entry("reg-form-ab", "zeta^sh({1}^a,2,{1}^b) = (-1)^b binom(a+b+1,b) zeta(a+b+2)",
          [](const TheoremCase& c) { require(c.get("a") >= 0 && c.get("b") >= 0, c.id, "a, b >= 0"); },
          [](const TheoremCase& c, Evidence& ev) {
            const int a = static_cast<int>(c.get("a")), b = static_cast<int>(c.get("b"));
            const int D = c.digits;
            const Index k = cat({ones(a), Index{2}, ones(b)});
            ev.exact.emplace_back("closed form of reg",
                                  reg(word_from_index(k), Product::shuffle) ==
                                      reg_sh_closed_form(Word::power(Letter::e1, static_cast<std::size_t>(a + 1)), b));
            PrecisionGuard guard(working_digits(D));
            ev.numeric.emplace_back(zeta_sh(k, D), to_real(sgn(b) * binom(a + b + 1, b)) * mzv(Index{a + b + 2}, D));
          });
  S_entry("by-duality", "level-1 symmetric value of ({2}^a,1) through regularization and duality",
          [](const TheoremCase& c) { require(c.get("a") >= 1, c.id, "a >= 1"); },
          [](const TheoremCase& c, Evidence& ev) {
            const int a = static_cast<int>(c.get("a"));
            const int D = c.digits;
            const Index k = cat({twos(a), Index{1}});
            Word w_prime = word_from_index(twos(a - 1));
            w_prime.push_back(Letter::e1);
            ev.exact.emplace_back("closed form of reg",
                                  reg(word_from_index(k), Product::shuffle) == reg_sh_closed_form(w_prime, 1));
            PrecisionGuard guard(working_digits(D));
            BigReal inner = 0, dual_inner = 0;
            for (int j = 0; j <= a - 1; ++j) {
              inner += mzv(cat({twos(j), Index{1}, twos(a - j)}), D);
              dual_inner += mzv(cat({twos(a - j - 1), Index{3}, twos(j)}), D);
            }
            const BigReal z1 = mzv(cat({Index{1}, twos(a)}), D);
            const BigReal line1 = -z1 - 2 * inner;
            const BigReal line2 = -mzv(cat({twos(a - 1), Index{3}}), D) - 2 * dual_inner;
            ev.numeric.emplace_back(zeta_sh(k, D), -2 * inner);
            ev.numeric.emplace_back(zeta_sh(k, D) - z1, line1);
            ev.numeric.emplace_back(line1, line2);
            const TPoly<BigReal> s = symmetric_hat(k, Product::shuffle, 1, D);
            diagnose(ev, "symmetric value - regularized form", s[0] - line1, 2 * a + 1, D);
          });
  S_entry("by-zagier", "mod zeta(2) value of zeta({2}^{a-j-1},3,{2}^j)",
          [](const TheoremCase& c) {
            require(c.get("j") >= 0 && c.get("j") <= c.get("a") - 1, c.id, "0 <= j <= a-1");
          },
          [](const TheoremCase& c, Evidence& ev) {
            const int a = static_cast<int>(c.get("a")), j = static_cast<int>(c.get("j"));
            BigRational quarter_pow = 1;
            for (int t = 0; t < a; ++t) quarter_pow /= 4;
            const BigRational coeff = 2 * sgn(a) * (binom(2 * a, 2 * j) - (1 - quarter_pow) * binom(2 * a, 2 * j + 1));
            ev.exact.emplace_back("coefficient", zagier1_surviving_coefficient(a - j - 1, j) == coeff);
            const int D = c.digits;
            PrecisionGuard guard(working_digits(D));
            const auto [lhs, rhs] = zagier_theorem1_exact(a - j - 1, j, D);
            ev.numeric.emplace_back(lhs, rhs);
            diagnose(ev, "difference", lhs - to_real(coeff) * mzv(Index{2 * a + 1}, D), 2 * a + 1, D);
          });
  S_entry("after-zagier", "mod zeta(2) values of zeta(1,k2+1) and zeta(k2,2), k2 odd",
          [](const TheoremCase& c) {
            require(c.get("k2") >= 1 && c.get("k2") % 2 == 1, c.id, "k2 odd and positive");
          },
          [](const TheoremCase& c, Evidence& ev) {
            const int k2 = static_cast<int>(c.get("k2"));
            const BigRational q1 = make_rational(k2 + 1, 2);
            const BigRational q2 = (make_rational((k2 + 2) * (k2 + 1), 2) - 1) / 2;
            ev.exact.emplace_back("zeta(1,k2+1)", zagier2_surviving_coefficient(1, k2 + 1) == q1);
            if (k2 >= 2) ev.exact.emplace_back("zeta(k2,2)", zagier2_surviving_coefficient(k2, 2) == q2);
            const int D = c.digits;
            PrecisionGuard guard(working_digits(D));
            const BigReal zw = mzv(Index{k2 + 2}, D);
            ev.numeric.push_back(zagier_theorem2_exact(1, k2 + 1, D));
            diagnose(ev, "zeta(1,k2+1) - q zeta(k2+2)", mzv(Index{1, k2 + 1}, D) - to_real(q1) * zw, k2 + 2, D);
            diagnose(ev, "zeta(k2,2) - q zeta(k2+2)", mzv(Index{k2, 2}, D) - to_real(q2) * zw, k2 + 2, D);
          });
  S_entry("reg-sum", "shuffle-regularized sum formula over the position of the 2",
          [](const TheoremCase& c) { require(c.get("N") >= 1, c.id, "N >= 1"); },
          [](const TheoremCase& c, Evidence& ev) {
            const int N = static_cast<int>(c.get("N"));
            const int D = c.digits;
            PrecisionGuard guard(working_digits(D));
            BigReal total = 0;
            for (int i = 1; i <= N; ++i) total += zeta_sh(cat({ones(i - 1), Index{2}, ones(N - i)}), D);
            ev.numeric.emplace_back(total, to_real(sgn(N - 1)) * mzv(Index{N + 1}, D));
          });
  S_entry("duality", "zeta(w) = zeta(dual w)",
          [](const TheoremCase& c) { require(c.index("k").admissible() && !c.index("k").empty(), c.id, "index must be admissible"); },
          [](const TheoremCase& c, Evidence& ev) {
            const Word w = word_from_index(c.index("k"));
            PrecisionGuard guard(working_digits(c.digits));
            ev.numeric.emplace_back(mzv_word(w, c.digits), mzv_word(dual(w), c.digits));
          });
  S_entry("depth2-sum", "sum of zeta(j,k-j) over admissible depth-two indices",
          [](const TheoremCase& c) { require(c.get("k") >= 3, c.id, "k >= 3"); },
          [](const TheoremCase& c, Evidence& ev) {
            const int k = static_cast<int>(c.get("k"));
            PrecisionGuard guard(working_digits(c.digits));
            BigReal total = 0;
            for (int j = 1; j <= k - 2; ++j) total += mzv(Index{j, k - j}, c.digits);
            ev.numeric.emplace_back(total, mzv(Index{k}, c.digits));
          });
  S_entry("reversal", "level-1 symmetric value under index reversal",
          [](const TheoremCase& c) { require(!c.index("k").empty(), c.id, "index must be nonempty"); },
          [](const TheoremCase& c, Evidence& ev) {
            const Index& k = c.index("k");
            PrecisionGuard guard(working_digits(c.digits));
            for (Product p : {Product::shuffle, Product::harmonic}) {
              const BigReal a = symmetric_hat(k, p, 1, c.digits)[0];
              const BigReal b = symmetric_hat(k.reversed(), p, 1, c.digits)[0];
              ev.numeric.emplace_back(a, to_real(sgn(k.weight())) * b);
            }
          });

  // ---- rational identities ----
  auto Q_entry = [&add](std::string id, std::string desc, std::function<void(const TheoremCase&)> hyp,
                        std::function<void(const TheoremCase&, Evidence&)> eval) {
    add({{std::move(id), Side::Q, std::move(desc)}, {}, std::move(hyp), {}, std::move(eval), {}});
  };
  Q_entry("appendix", "six-part decomposition of C and its value 1 + (-1)^a binom(a+b+3,b+2)",
          [](const TheoremCase& c) {
            require(c.get("a") >= 0 && c.get("b") >= 0, c.id, "a, b >= 0");
            require((c.get("a") + c.get("b")) % 2 == 0, c.id, "a + b must be even");
          },
          [](const TheoremCase& c, Evidence& ev) {
            const int a = static_cast<int>(c.get("a")), b = static_cast<int>(c.get("b"));
            const CDecomposition brute = compute_C_bruteforce(a, b);
            const CDecomposition closed = closed_forms(a, b);
            ev.exact.emplace_back("I", brute.I == closed.I);
            ev.exact.emplace_back("II", brute.II == closed.II);
            ev.exact.emplace_back("III", brute.III == closed.III);
            ev.exact.emplace_back("IV", brute.IV == closed.IV);
            ev.exact.emplace_back("V", brute.V == closed.V);
            ev.exact.emplace_back("VI", brute.VI == closed.VI);
            ev.exact.emplace_back("C direct", compute_C_direct(a, b) == brute.C);
            ev.exact.emplace_back("C value", brute.C == expected_C(a, b));
            ev.exact.emplace_back("closed sum", closed.C == expected_C(a, b));
          });
  Q_entry("pfd", "partial fractions of n!/(x(x+1)...(x+n))",
          [](const TheoremCase& c) {
            require(c.get("n") >= 0 && c.get("xden") >= 1, c.id, "n >= 0, xden >= 1");
            const BigRational x = make_rational(c.get("xnum"), c.get("xden"));
            for (long k = 0; k <= c.get("n"); ++k) require(x + k != 0, c.id, "x must avoid 0, -1, ..., -n");
          },
          [](const TheoremCase& c, Evidence& ev) {
            const auto [lhs, rhs] = pfd_identity(static_cast<int>(c.get("n")), make_rational(c.get("xnum"), c.get("xden")));
            ev.exact.emplace_back("pfd", lhs == rhs);
          });
  Q_entry("ind-step", "binomial identities behind the induction step",
          [](const TheoremCase& c) {
            const long k = c.get("k"), r = c.get("r"), i = c.get("i");
            require(2 <= i + 1 && i + 1 <= r && r <= k - 1, c.id, "2 <= i+1 <= r <= k-1");
          },
          [](const TheoremCase& c, Evidence& ev) {
            const InductionTerms t = induction_terms(static_cast<int>(c.get("k")), static_cast<int>(c.get("r")),
                                                     static_cast<int>(c.get("i")));
            ev.exact.emplace_back("first", t.first == 0);
            ev.exact.emplace_back("second", t.second == 0);
            ev.exact.emplace_back("third", t.third == 0);
            ev.exact.emplace_back("fourth", t.fourth == 0);
            ev.exact.emplace_back("b", t.total == 0);
            ev.exact.emplace_back("b*", t.total_star == 0);
          });
  // Bernoulli-number right-hand sides are only claimed for p >= n + wt + 1.
  const std::map<std::string, std::function<long(const TheoremCase&)>> weight_of{
      {"depth2", [](const TheoremCase& c) { return c.get("k1") + c.get("k2"); }},
      {"depth3", [](const TheoremCase& c) { return c.get("k1") + c.get("k2") + c.get("k3"); }},
      {"repk", [](const TheoremCase& c) { return c.get("k") * c.get("r"); }},
      {"repk-half", [](const TheoremCase& c) { return c.get("k") * c.get("r"); }},
      {"repk-odd", [](const TheoremCase& c) { return c.get("k") * c.get("r"); }},
      {"ones-2-ones", [](const TheoremCase& c) { return c.get("a") + c.get("b") + 2; }},
      {"ones-2-ones-F2", [](const TheoremCase& c) { return c.get("a") + c.get("b") + 2; }},
      {"twos-3-twos", [](const TheoremCase& c) { return 2 * (c.get("a") + c.get("b")) + 3; }},
      {"twos-1-twos", [](const TheoremCase& c) { return 2 * (c.get("a") + c.get("b")) + 1; }},
      {"BB", [](const TheoremCase& c) { return 4 * c.get("l") + 2 * c.get("m"); }},
      {"2sh2", [](const TheoremCase& c) { return 4 * c.get("l") + 2 * c.get("m"); }},
      {"yamamoto", [](const TheoremCase& c) { return 4 * c.get("l") + 2 * c.get("m"); }},
      {"sumF2", [](const TheoremCase& c) { return c.get("k"); }},
      {"sumF3", [](const TheoremCase& c) { return c.get("k"); }},
      {"sumF2-i", [](const TheoremCase& c) { return c.get("k"); }},
      {"recurrence", [](const TheoremCase& c) { return c.get("k"); }},
      {"F1-i-sum", [](const TheoremCase& c) { return c.get("k"); }},
  };
  for (Entry& e : v) {
    std::string base = e.info.id;
    if (base.size() > 5 && base.ends_with("-star")) base.resize(base.size() - 5);
    auto it = weight_of.find(base);
    if (it == weight_of.end() || e.min_prime) continue;
    e.min_prime = [w = it->second](const TheoremCase& c) { return static_cast<std::uint64_t>(c.n + w(c) + 1); };
  }
  return v;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = build_entries();
  return e;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

std::string param_string(const ParamValue& v) {
  if (const long* x = std::get_if<long>(&v)) return std::to_string(*x);
  return to_string(std::get<Index>(v));
}

}  // namespace

// ---- public ----------------------------------------------------------------

std::string to_string(Side s) {
  switch (s) {
    case Side::A: return "A";
    case Side::S: return "S";
    case Side::Q: return "Q";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

bool TheoremCase::has(const std::string& name) const {
  return std::any_of(params.begin(), params.end(), [&](const auto& p) { return p.first == name; });
}

long TheoremCase::get(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) {
      if (const long* x = std::get_if<long>(&v)) return *x;
      throw std::invalid_argument(id + ": parameter '" + name + "' is not an integer");
    }
  throw std::invalid_argument(id + ": missing parameter '" + name + "'");
}

const Index& TheoremCase::index(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) {
      if (const Index* x = std::get_if<Index>(&v)) return *x;
      throw std::invalid_argument(id + ": parameter '" + name + "' is not an index");
    }
  throw std::invalid_argument(id + ": missing parameter '" + name + "'");
}

std::string TheoremCase::label() const {
  std::string s = id + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ',';
    s += params[i].first + "=" + param_string(params[i].second);
  }
  if (side == Side::A) s += ";n=" + std::to_string(n);
  return s + ")";
}

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> cat = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return cat;
}

const TheoremInfo& theorem_info(const std::string& id) { return entry(id).info; }

TheoremCase make_case(const std::string& id, Params params, int n, PrimeWindow window, int digits) {
  const Entry& e = entry(id);
  TheoremCase c;
  c.id = id;
  c.params = std::move(params);
  c.side = e.info.side;
  c.n = n;
  c.window = std::move(window);
  c.digits = digits;
  if (c.side == Side::A) {
    if (std::find(e.levels.begin(), e.levels.end(), n) == e.levels.end())
      throw HypothesisError(id + ": level n = " + std::to_string(n) + " not covered by the statement");
  } else {
    c.n = 1;
    if (digits < 20) throw HypothesisError(id + ": need at least 20 digits");
  }
  e.hypotheses(c);
  return c;
}

bool has_closed_rhs(const std::string& id) { return static_cast<bool>(entry(id).rhs); }

ZExpr rhs_eval(const TheoremCase& c) {
  const Entry& e = entry(c.id);
  if (!e.rhs) throw std::invalid_argument(c.id + ": no closed-form right-hand side");
  return e.rhs(c);
}

ZExpr depth_one_expr(int k, int n) {
  ZExpr out;
  for (int l = 1; l <= n - 1; ++l) out += sgn(k) * binom(k + l - 1, l) * Z(k + l) * X(l);
  return out;
}

CaseResult run_case(const TheoremCase& c, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CaseResult res;
  res.tc = c;
  const Entry& e = entry(c.id);
  TheoremCase work = c;
  std::map<std::uint64_t, std::string> below;
  if (c.side == Side::A && e.min_prime) {
    const std::uint64_t floor = e.min_prime(c);
    PrimeWindow kept;
    for (std::uint64_t p : c.window) {
      if (p < floor)
        below[p] = "below threshold p >= " + std::to_string(floor);
      else
        kept.push_back(p);
    }
    work.window = std::move(kept);
  }
  Evidence ev;
  try {
    e.evaluate(work, ev);
  } catch (const CapabilityError& ex) {
    res.message = ex.what();
  } catch (const AccuracyError& ex) {
    res.message = ex.what();
  }

  bool failed = false;
  bool have_evidence = !ev.modular.empty() || !ev.numeric.empty() || !ev.exact.empty();
  if (!ev.modular.empty()) {
    std::vector<std::uint64_t> compared = ev.modular.front().compared;
    for (const auto& cmp : ev.modular) {
      std::vector<std::uint64_t> both;
      std::set_intersection(compared.begin(), compared.end(), cmp.compared.begin(), cmp.compared.end(),
                            std::back_inserter(both));
      compared = std::move(both);
      for (std::uint64_t p : cmp.mismatched)
        if (std::find(res.mismatched.begin(), res.mismatched.end(), p) == res.mismatched.end())
          res.mismatched.push_back(p);
      for (const auto& [p, why] : cmp.skipped) res.skipped.emplace(p, why);
    }
    std::sort(res.mismatched.begin(), res.mismatched.end());
    res.primes_compared = std::move(compared);
    for (const auto& [p, why] : below) res.skipped.emplace(p, why);
    if (!res.mismatched.empty()) failed = true;
    else if (res.primes_compared.size() < opt.prime_floor) {
      have_evidence = false;
      if (res.message.empty())
        res.message = "only " + std::to_string(res.primes_compared.size()) + " primes compared (floor " +
                      std::to_string(opt.prime_floor) + ")";
    }
  }
  if (!ev.numeric.empty()) {
    double worst = 0;
    for (const auto& [lhs, rhs] : ev.numeric) {
      PrecisionGuard guard(working_digits(c.digits));
      worst = std::max(worst, static_cast<double>(abs(lhs - rhs)));
      ++res.checks;
      if (!(static_cast<double>(abs(lhs - rhs)) <= opt.tolerance)) {
        ++res.failed_checks;
        failed = true;
      }
    }
    res.max_abs_error = worst;
  }
  for (const auto& [what, ok] : ev.exact) {
    ++res.checks;
    if (!ok) {
      ++res.failed_checks;
      failed = true;
      res.message += (res.message.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  res.checks += ev.modular.size();
  if (opt.diagnostics) res.diagnostics = std::move(ev.diagnostics);

  if (failed)
    res.status = Status::fail;
  else if (have_evidence && res.message.empty())
    res.status = Status::pass;
  else
    res.status = Status::inconclusive;
  res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<CaseResult> run_cases(const std::vector<TheoremCase>& cases, const VerifyOptions& opt, unsigned jobs) {
  std::vector<CaseResult> out(cases.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, cases.size()))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) out[i] = run_case(cases[i], opt);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cases.size(); i = next++) {
        try {
          out[i] = run_case(cases[i], opt);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

// ---- grids -----------------------------------------------------------------

namespace {

std::vector<int> levels_for(const std::string& id, const GridOptions& opt, std::vector<int> defaults) {
  const Entry& e = entry(id);
  if (!opt.n) return defaults;
  if (std::find(e.levels.begin(), e.levels.end(), *opt.n) == e.levels.end())
    throw HypothesisError(id + ": level n = " + std::to_string(*opt.n) + " not covered by the statement");
  return {*opt.n};
}

std::vector<Index> indices_up_to(int wmax) {
  std::vector<Index> out;
  for (int w = 1; w <= wmax; ++w)
    for (auto& k : enumerate_weight(w)) out.push_back(std::move(k));
  return out;
}

std::string base_id(const std::string& id) {
  const std::string star = "-star";
  if (id.size() > star.size() && id.compare(id.size() - star.size(), star.size(), star) == 0)
    return id.substr(0, id.size() - star.size());
  return id;
}

}  // namespace

std::vector<TheoremCase> build_grid(const std::string& id, const GridOptions& opt) {
  const Entry& e = entry(id);
  std::vector<TheoremCase> out;
  const std::string base = base_id(id);
  auto A = [&](Params p, int n) { out.push_back(make_case(id, std::move(p), n, opt.window, opt.digits)); };
  auto S = [&](Params p) { out.push_back(make_case(id, std::move(p), 1, opt.window, opt.digits)); };
  auto L = [](long v) { return ParamValue(v); };
  if (e.info.side != Side::A && opt.n && *opt.n != 1)
    throw HypothesisError(id + ": level does not apply to this statement");

  if (base == "dep1") {
    for (int n : levels_for(id, opt, {1, 2, 3}))
      for (int k = 1; k <= opt.kmax.value_or(8); ++k) A({{"k", L(k)}}, n);
  } else if (base == "depth2") {
    for (int n : levels_for(id, opt, {2})) {
      if (opt.k1 || opt.k2) {
        A({{"k1", L(opt.k1.value_or(1))}, {"k2", L(opt.k2.value_or(1))}}, n);
        continue;
      }
      for (int k = 2; k <= opt.kmax.value_or(12); k += 2)
        for (int k1 = 1; k1 < k; ++k1) A({{"k1", L(k1)}, {"k2", L(k - k1)}}, n);
    }
  } else if (base == "depth3") {
    for (int n : levels_for(id, opt, {1}))
      for (int k = 3; k <= opt.kmax.value_or(13); k += 2)
        for (int k1 = 1; k1 <= k - 2; ++k1)
          for (int k2 = 1; k1 + k2 <= k - 1; ++k2) A({{"k1", L(k1)}, {"k2", L(k2)}, {"k3", L(k - k1 - k2)}}, n);
  } else if (base == "repk" || base == "repk-odd" || base == "repk-half") {
    for (int n : levels_for(id, opt, base == "repk" ? std::vector<int>{2, 3} : std::vector<int>{3}))
      for (int w = 1; w <= opt.kmax.value_or(12); ++w)
        for (int r = 1; r <= w; ++r) {
          if (w % r != 0) continue;
          if (base == "repk-odd" && w % 2 == 0) continue;
          A({{"k", L(w / r)}, {"r", L(r)}}, n);
        }
  } else if (base == "ones-2-ones" || base == "twos-3-twos" || base == "twos-1-twos" || base == "ones-2-ones-F2") {
    const bool even = base == "ones-2-ones-F2";
    for (int n : levels_for(id, opt, {even ? 2 : 1}))
      for (int s = 0; s <= opt.amax.value_or(8); ++s) {
        if (even && s % 2 != 0) continue;
        for (int a = 0; a <= s; ++a) A({{"a", L(a)}, {"b", L(s - a)}}, n);
      }
  } else if (base == "BB" || base == "2sh2") {
    const int wmax = opt.kmax.value_or(base == "BB" ? 12 : 10);
    for (int n : levels_for(id, opt, {2}))
      for (int l = 0; 4 * l <= wmax; ++l)
        for (int m = 0; 4 * l + 2 * m <= wmax; ++m)
          if (l + m > 0) A({{"l", L(l)}, {"m", L(m)}}, n);
  } else if (base == "yamamoto") {
    for (int n : levels_for(id, opt, {2}))
      for (int l = 0; 2 * l <= opt.kmax.value_or(5); ++l)
        for (int m = 0; 2 * l + m <= opt.kmax.value_or(5); ++m) A({{"l", L(l)}, {"m", L(m)}}, n);
  } else if (base == "symsum") {
    for (int n : levels_for(id, opt, {1, 2, 3}))
      for (const auto& k : indices_up_to(opt.kmax.value_or(7))) A({{"k", k}}, n);
  } else if (base == "sumF2" || base == "sumF3") {
    const bool three = base == "sumF3";
    for (int n : levels_for(id, opt, {three ? 3 : 2}))
      for (int k = 1; k <= opt.kmax.value_or(three ? 8 : 10); ++k)
        for (int r = 1; r <= std::min(k, opt.rmax.value_or(k)); ++r) A({{"k", L(k)}, {"r", L(r)}}, n);
  } else if (base == "sumF2-i" || base == "F1-i-sum") {
    const bool even_only = base == "sumF2-i";
    for (int n : levels_for(id, opt, {even_only ? 2 : 1}))
      for (int k = 2; k <= opt.kmax.value_or(10); ++k) {
        if (even_only && k % 2 != 0) continue;
        for (int r = 1; r < k && r <= opt.rmax.value_or(k); ++r)
          for (int i = 1; i <= r; ++i) A({{"k", L(k)}, {"r", L(r)}, {"i", L(i)}}, n);
      }
  } else if (base == "recurrence") {
    for (int n : levels_for(id, opt, {2}))
      for (int k = 3; k <= opt.kmax.value_or(10); ++k)
        for (int r = 2; r <= k - 1; ++r)
          for (int i = 1; i + 1 <= r; ++i) A({{"k", L(k)}, {"r", L(r)}, {"i", L(i)}}, n);
  } else if (base == "dsr-harmonic" || base == "dsr-shuffle") {
    const auto idx = indices_up_to(opt.kmax.value_or(6) - 1);
    for (int n : levels_for(id, opt, {1, 2, 3}))
      for (const auto& k : idx)
        for (const auto& l : idx)
          if (k.weight() + l.weight() <= opt.kmax.value_or(6)) A({{"k", k}, {"l", l}}, n);
  } else if (base == "antipode" || base == "star-expansion") {
    for (int n : levels_for(id, opt, {1, 2, 3}))
      for (const auto& k : indices_up_to(opt.kmax.value_or(7))) A({{"k", k}}, n);
  } else if (base == "zagier-1") {
    for (int s = 0; s <= opt.amax.value_or(3); ++s)
      for (int a = 0; a <= s; ++a) S({{"a", L(a)}, {"b", L(s - a)}});
  } else if (base == "zagier-2") {
    for (int k = 3; k <= opt.kmax.value_or(11); k += 2)
      for (int m = 1; m <= k - 2; ++m) S({{"m", L(m)}, {"n", L(k - m)}});
  } else if (base == "calc-zeta-sh") {
    for (int k2 = 1; k2 + 2 <= opt.kmax.value_or(9); ++k2) S({{"k2", L(k2)}});
  } else if (base == "by-def" || base == "after-zagier") {
    for (int k2 = 1; k2 + 2 <= opt.kmax.value_or(9); k2 += 2) S({{"k2", L(k2)}});
  } else if (base == "by-def-ab" || base == "reg-form-ab") {
    for (int s = 0; s + 2 <= opt.kmax.value_or(9); ++s)
      for (int a = 0; a <= s; ++a) S({{"a", L(a)}, {"b", L(s - a)}});
  } else if (base == "by-duality") {
    for (int a = 1; 2 * a + 1 <= opt.kmax.value_or(9); ++a) S({{"a", L(a)}});
  } else if (base == "by-zagier") {
    for (int a = 1; 2 * a + 1 <= opt.kmax.value_or(9); ++a)
      for (int j = 0; j <= a - 1; ++j) S({{"a", L(a)}, {"j", L(j)}});
  } else if (base == "reg-sum") {
    for (int N = 1; N <= opt.kmax.value_or(5); ++N) S({{"N", L(N)}});
  } else if (base == "duality") {
    for (const auto& k : indices_up_to(opt.kmax.value_or(8)))
      if (k.admissible()) S({{"k", k}});
  } else if (base == "depth2-sum") {
    for (int k = 3; k <= opt.kmax.value_or(9); ++k) S({{"k", L(k)}});
  } else if (base == "reversal") {
    for (const auto& k : indices_up_to(opt.kmax.value_or(6))) S({{"k", k}});
  } else if (base == "appendix") {
    const int amax = opt.amax.value_or(30);
    for (int a = 0; a <= amax; ++a)
      for (int b = 0; b <= amax; ++b)
        if ((a + b) % 2 == 0) S({{"a", L(a)}, {"b", L(b)}});
  } else if (base == "pfd") {
    // 50 sample points: n = 0..9 against five non-pole x
    const std::vector<std::pair<long, long>> xs{{1, 1}, {5, 1}, {1, 2}, {-7, 3}, {13, 5}};
    for (int n = 0; n < 10; ++n)
      for (const auto& [num, den] : xs) S({{"n", L(n)}, {"xnum", L(num)}, {"xden", L(den)}});
  } else if (base == "ind-step") {
    for (int k = 3; k - 1 <= opt.kmax.value_or(11); ++k)
      for (int r = 2; r <= k - 1; ++r)
        for (int i = 1; i + 1 <= r; ++i) S({{"k", L(k)}, {"r", L(r)}, {"i", L(i)}});
  } else {
    throw std::logic_error("build_grid: no grid for '" + id + "'");
  }
  return out;
}

}  // namespace fmzv
