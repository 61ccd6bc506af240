// Algebraic property checks, runnable on their own. Exit status 0 iff all hold.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "fmzv/regularization.hpp"
#include "fmzv/report.hpp"
#include "fmzv/theorems.hpp"

using namespace fmzv;

namespace {

struct Tally {
  std::size_t checks = 0, failures = 0;
  void check(bool ok) {
    ++checks;
    failures += !ok;
  }
};

std::vector<Word> h1_words_up_to(int weight) {
  std::vector<Word> out;
  for (int w = 1; w <= weight; ++w)
    for (const auto& k : enumerate_weight(w)) out.push_back(word_from_index(k));
  return out;
}

Tally word_algebra() {
  Tally t;
  const auto words = h1_words_up_to(6);
  const Product products[] = {Product::harmonic, Product::shuffle, Product::muneta};
  for (const auto& a : words)
    for (const auto& b : words) {
      if (a.size() + b.size() > 7) continue;
      for (Product p : products) {
        const LinComb ab = multiply(p, a, b);
        t.check(ab == multiply(p, b, a));
        bool graded = true;
        for (const auto& [w, c] : ab.terms()) graded = graded && w.size() == a.size() + b.size();
        t.check(graded);
        if (p != Product::muneta && a.in_h0() && b.in_h0()) t.check(ab.in_h0());
      }
    }
  const auto small = h1_words_up_to(5);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        if (a.size() + b.size() + c.size() > 7) continue;
        for (Product p : products) {
          const LinComb left = multiply(p, multiply(p, a, b), LinComb(c));
          const LinComb right = multiply(p, LinComb(a), multiply(p, b, c));
          t.check(left == right);
        }
      }
  return t;
}

Tally regularization() {
  Tally t;
  for (Product p : {Product::shuffle, Product::harmonic})
    for (const auto& x : h1_words_up_to(8)) {
      const PolyInE1 d = decompose(x, p);
      bool in_h0 = true;
      for (const auto& c : d.coeffs) in_h0 = in_h0 && c.in_h0();
      t.check(in_h0);
      t.check(reconstruct(d) == LinComb(x));
    }
  for (int w = 2; w <= 7; ++w)
    for (const auto& k : enumerate_weight(w)) {
      if (!k.admissible()) continue;
      const Word x = word_from_index(k);
      const Word head = x.substr(0, x.size() - 1);
      for (int m = 0; m <= 3; ++m)
        t.check(reg_sh_closed_form(head, m) == reg(x + Word::power(Letter::e1, static_cast<std::size_t>(m)), Product::shuffle));
    }
  return t;
}

Tally a_side(const std::string& id) {
  Tally t;
  GridOptions g;
  g.window = primes_between(7, 97);
  g.kmax = 7;
  const auto results = run_cases(build_grid(id, g), {}, std::max(1u, std::thread::hardware_concurrency()));
  for (const auto& r : results) {
    t.check(r.status == Status::pass);
    if (r.status != Status::pass) std::printf("  %s\n", summary_line(r).c_str());
  }
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> suites{
      {"word algebra: commutativity, associativity, grading", word_algebra},
      {"regularization: reconstruction, closed form", regularization},
      {"antipode relation, weight <= 7", [] { return a_side("antipode"); }},
      {"star values as contraction sums, weight <= 7", [] { return a_side("star-expansion"); }},
  };
  bool ok = true;
  for (const auto& [name, run] : suites) {
    const auto start = std::chrono::steady_clock::now();
    const Tally t = run();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s  (%zu checks, %zu failed, %.1fs)\n", t.failures ? "FAIL" : "PASS", name.c_str(), t.checks,
                t.failures, s);
    ok = ok && t.failures == 0;
  }
  return ok ? 0 : 1;
}
